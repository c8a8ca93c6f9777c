//! Truncated Baker-Campbell-Hausdorff products.
//!
//! Computed as `log(exp x_1 ... exp x_n)` in the truncated tensor algebra,
//! which is exact at every truncation. Coefficient tables are derived output.

use crate::element::Element;
use crate::error::{domain, Result};
use crate::generators::{GeneratorTable, Space};
use crate::lyndon::{lyndon_coordinates, LyndonMonomial};
use crate::rational::Rational;

fn check_bch_argument(x: &Element) -> Result<()> {
    if !x.has_grading(0) {
        return domain("BCH arguments must have grading 0");
    }
    if !x.is_constant_free() {
        return domain("BCH arguments must be constant-free");
    }
    Ok(())
}

pub fn bch(x: &Element, y: &Element) -> Result<Element> {
    x.space().check_same(y.space())?;
    check_bch_argument(x)?;
    check_bch_argument(y)?;
    x.exp()?.product(&y.exp()?)?.log()
}

/// n-ary BCH `BCH(x_1, ..., x_n)`; the empty product is zero.
pub fn bch_list(space: &Space, xs: &[Element]) -> Result<Element> {
    let mut prod = Element::one(space);
    for x in xs {
        space.check_same(x.space())?;
        check_bch_argument(x)?;
        prod = prod.product(&x.exp()?)?;
    }
    prod.log()
}

/// Lyndon coordinates of `BCH(e, f)` through `max_depth`.
pub fn bch_coefficient_table(max_depth: usize) -> Result<Vec<(LyndonMonomial, Rational)>> {
    let table = GeneratorTable::new([("e", 0), ("f", 0)])?;
    let space = Space::through_depth(table, max_depth)?;
    let e = Element::generator(&space, "e")?;
    let f = Element::generator(&space, "f")?;
    lyndon_coordinates(&bch(&e, &f)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lyndon::is_lie_element;
    use crate::rational::{frac, int};

    fn space(depth: usize) -> Space {
        Space::through_depth(GeneratorTable::new([("e", 0), ("f", 0), ("g", 0)]).unwrap(), depth).unwrap()
    }

    #[test]
    fn trivial_identities() {
        let s = space(4);
        let e = Element::generator(&s, "e").unwrap();
        let f = Element::generator(&s, "f").unwrap();
        let x = &e + &e.bracket(&f).unwrap().scale(&frac(1, 3));
        assert_eq!(bch(&x, &Element::zero(&s)).unwrap(), x);
        assert!(bch(&x, &-&x).unwrap().is_zero());
        assert_eq!(bch_list(&s, std::slice::from_ref(&x)).unwrap(), x);
        assert!(bch_list(&s, &[]).unwrap().is_zero());
    }

    #[test]
    fn low_depth_closed_form() {
        let s = space(2);
        let e = Element::generator(&s, "e").unwrap();
        let f = Element::generator(&s, "f").unwrap();
        let ef = e.bracket(&f).unwrap();
        let expected = &(&(&e + &f) + &ef.scale(&frac(1, 2)))
            + &(&e.bracket(&ef).unwrap().scale(&frac(1, 12)) - &f.bracket(&ef).unwrap().scale(&frac(1, 12)));
        assert_eq!(bch(&e, &f).unwrap(), expected);
    }

    #[test]
    fn coefficient_table() {
        let t = bch_coefficient_table(2).unwrap();
        let vals: Vec<(Vec<u8>, Rational)> = t.into_iter().map(|(m, c)| (m.0, c)).collect();
        assert_eq!(
            vals,
            vec![
                (vec![0], int(1)),
                (vec![1], int(1)),
                (vec![0, 1], frac(1, 2)),
                (vec![0, 0, 1], frac(1, 12)),
                (vec![0, 1, 1], frac(-1, 12)),
            ]
        );
    }

    #[test]
    fn depth_three_has_single_term() {
        // BCH depth 3 is -1/24 [f,[e,[e,f]]].
        let t = bch_coefficient_table(3).unwrap();
        let d3: Vec<_> = t.iter().filter(|(m, _)| m.depth() == 3).collect();
        assert_eq!(d3.len(), 1);
        assert_eq!(d3[0].0 .0, vec![0, 0, 1, 1]);
    }

    #[test]
    fn associativity_and_lieness() {
        let s = space(5);
        let e = Element::generator(&s, "e").unwrap();
        let f = Element::generator(&s, "f").unwrap();
        let g = Element::generator(&s, "g").unwrap();
        let l = bch(&bch(&e, &f).unwrap(), &g).unwrap();
        let r = bch(&e, &bch(&f, &g).unwrap()).unwrap();
        assert_eq!(l, r);
        assert_eq!(bch_list(&s, &[e.clone(), f.clone(), g.clone()]).unwrap(), l);
        for d in 0..=5 {
            assert!(is_lie_element(&l.depth_component(d)));
        }
    }

    #[test]
    fn rejects_odd_arguments() {
        let t = GeneratorTable::new([("a", -1), ("e", 0)]).unwrap();
        let s = Space::new(t, 3).unwrap();
        let a = Element::generator(&s, "a").unwrap();
        let e = Element::generator(&s, "e").unwrap();
        assert!(matches!(bch(&a, &e), Err(crate::Error::Domain(_))));
    }
}
