//! Realisations of graphs: points on vertices, grading-0 labels on edges.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::element::Element;
use crate::error::{config, Result};
use crate::serial::ElementDoc;

use super::{path_bch, CellModel, Orientation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphEdge {
    pub from: String,
    pub to: String,
    pub name: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    pub vertices: Vec<String>,
    pub edges: Vec<GraphEdge>,
}

impl Graph {
    pub fn new(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Self {
        Graph {
            vertices: vertices.iter().map(|v| v.to_string()).collect(),
            edges: edges
                .iter()
                .map(|(n, f, t)| GraphEdge { from: f.to_string(), to: t.to_string(), name: n.to_string() })
                .collect(),
        }
    }

    fn vertex_index(&self, name: &str) -> Result<usize> {
        match self.vertices.iter().position(|v| v == name) {
            Some(i) => Ok(i),
            None => config(format!("edge refers to unknown vertex {name:?}")),
        }
    }
}

/// Labels indexed like `graph.vertices` and `graph.edges`.
#[derive(Clone, Debug)]
pub struct Realisation {
    pub graph: Graph,
    pub vertex_labels: Vec<Element>,
    pub edge_labels: Vec<Element>,
}

impl Realisation {
    pub fn new(graph: Graph, vertex_labels: Vec<Element>, edge_labels: Vec<Element>) -> Result<Self> {
        if vertex_labels.len() != graph.vertices.len() || edge_labels.len() != graph.edges.len() {
            return config("label counts do not match the graph");
        }
        Ok(Realisation { graph, vertex_labels, edge_labels })
    }

    pub fn to_doc(&self) -> RealisationDoc {
        RealisationDoc {
            graph: self.graph.clone(),
            vertex_labels: self.vertex_labels.iter().map(ElementDoc::from_element).collect(),
            edge_labels: self.edge_labels.iter().map(ElementDoc::from_element).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealisationDoc {
    pub graph: Graph,
    pub vertex_labels: Vec<ElementDoc>,
    pub edge_labels: Vec<ElementDoc>,
}

/// `flow_unit(label, source point) - target point` for one edge.
#[derive(Clone, Debug)]
pub struct EdgeFlowCheck {
    pub edge: String,
    pub residual: Element,
}

/// BCH of one generating loop, based at its component's root vertex.
#[derive(Clone, Debug)]
pub struct LoopCheck {
    pub base: String,
    pub path: Vec<(String, Orientation)>,
    pub bch: Element,
}

#[derive(Clone, Debug)]
pub struct RealisationReport {
    pub depth: usize,
    pub edges: Vec<EdgeFlowCheck>,
    pub loops: Vec<LoopCheck>,
}

impl RealisationReport {
    /// Every edge flows from its source point to its target point.
    pub fn is_consistent(&self) -> bool {
        self.edges.iter().all(|e| e.residual.is_zero())
    }

    /// Every generating loop has vanishing BCH.
    pub fn is_flat(&self) -> bool {
        self.loops.iter().all(|l| l.bch.is_zero())
    }
}

/// Checks edge/flow consistency on every edge, and BCH vanishing on one
/// generating loop per non-tree edge of a BFS spanning forest.
pub fn flat_realisation_check(model: &CellModel, r: &Realisation) -> Result<RealisationReport> {
    let g = &r.graph;
    let n = g.vertices.len();
    let mut ends = Vec::with_capacity(g.edges.len());
    for e in &g.edges {
        ends.push((g.vertex_index(&e.from)?, g.vertex_index(&e.to)?));
    }

    let mut edges = Vec::with_capacity(g.edges.len());
    for (i, e) in g.edges.iter().enumerate() {
        let (s, t) = ends[i];
        let residual = &model.flow_point(&r.edge_labels[i], &r.vertex_labels[s])? - &r.vertex_labels[t];
        edges.push(EdgeFlowCheck { edge: e.name.clone(), residual });
    }

    // Spanning forest: parent[v] = (parent vertex, edge index, orientation from parent to v).
    let mut parent: Vec<Option<(usize, usize, Orientation)>> = vec![None; n];
    let mut root_of = vec![usize::MAX; n];
    let mut tree_edge = vec![false; g.edges.len()];
    for root in 0..n {
        if root_of[root] != usize::MAX {
            continue;
        }
        root_of[root] = root;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for (i, &(s, t)) in ends.iter().enumerate() {
                let (w, o) = if s == v {
                    (t, Orientation::Forward)
                } else if t == v {
                    (s, Orientation::Reversed)
                } else {
                    continue;
                };
                if root_of[w] == usize::MAX {
                    root_of[w] = root;
                    parent[w] = Some((v, i, o));
                    tree_edge[i] = true;
                    queue.push_back(w);
                }
            }
        }
    }

    let path_from_root = |v: usize| -> Vec<(usize, Orientation)> {
        let mut steps = Vec::new();
        let mut cur = v;
        while let Some((p, i, o)) = parent[cur] {
            steps.push((i, o));
            cur = p;
        }
        steps.reverse();
        steps
    };
    let flip = |o: Orientation| match o {
        Orientation::Forward => Orientation::Reversed,
        Orientation::Reversed => Orientation::Forward,
    };

    let space = model.space();
    let mut loops = Vec::new();
    for (i, &(s, t)) in ends.iter().enumerate() {
        if tree_edge[i] {
            continue;
        }
        let mut steps = path_from_root(s);
        steps.push((i, Orientation::Forward));
        steps.extend(path_from_root(t).into_iter().rev().map(|(j, o)| (j, flip(o))));
        let labelled: Vec<(Element, Orientation)> =
            steps.iter().map(|&(j, o)| (r.edge_labels[j].clone(), o)).collect();
        loops.push(LoopCheck {
            base: g.vertices[root_of[s]].clone(),
            path: steps.iter().map(|&(j, o)| (g.edges[j].name.clone(), o)).collect(),
            bch: path_bch(space, &labelled)?,
        });
    }

    Ok(RealisationReport { depth: space.depth(), edges, loops })
}
