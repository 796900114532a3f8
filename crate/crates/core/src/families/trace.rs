//! Provenance records: a base graph plus the operations applied to it, with
//! every parameter needed to rebuild the graph vertex for vertex.

use serde::{Deserialize, Serialize};

use super::bad::{augment8, b8, contract_nice_path, Corner};
use super::dangerous::{join_bad, sum_dangerous, SumLabels, SumWiring};
use super::forbidden::forbidden;
use super::thirty::{f11_pair, fl_construction, thirty_augment_image, FlTree};
use crate::error::Result;
use crate::graph::{cycle, SimpleGraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Base {
    B8,
    C5,
    F11,
    /// Two copies of `F11` joined by an edge between their degree-2 vertices.
    F11Pair,
    Tree(FlTree),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Step {
    /// `interface[i]` is joined to leftmost gadget vertex `matching[i]`.
    Augment8 { corner: [Vertex; 3], matching: [usize; 3] },
    /// The current graph is the first summand.
    Sum {
        other: Box<ConstructionTrace>,
        labels: SumLabels,
        other_labels: SumLabels,
        wiring: SumWiring,
    },
    /// The current graph is `H1`.
    Join {
        other: Box<ConstructionTrace>,
        corner: [Vertex; 3],
        other_corner: [Vertex; 3],
    },
    ContractNicePath { path: [Vertex; 4] },
    /// The eleven vertices of an `F11` copy to be replaced by `G41`.
    ThirtyAugment { image: Vec<Vertex> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionTrace {
    pub base: Base,
    pub steps: Vec<Step>,
}

impl ConstructionTrace {
    pub fn base(base: Base) -> Self {
        ConstructionTrace { base, steps: Vec::new() }
    }

    pub fn then(&self, step: Step) -> Self {
        let mut t = self.clone();
        t.steps.push(step);
        t
    }
}

fn corner_of(g: &SimpleGraph, [a, b, c]: [Vertex; 3]) -> Result<Corner> {
    Corner::new(g, a, b, c)
}

/// Rebuilds the graph described by `trace`.
pub fn replay(trace: &ConstructionTrace) -> Result<SimpleGraph> {
    let mut g = match &trace.base {
        Base::B8 => b8(),
        Base::C5 => cycle(5),
        Base::F11 => forbidden("F11").expect("fixture").clone(),
        Base::F11Pair => f11_pair(),
        Base::Tree(tree) => fl_construction(tree)?,
    };
    for step in &trace.steps {
        g = match step {
            Step::Augment8 { corner, matching } => {
                let corner = corner_of(&g, *corner)?;
                augment8(&g, &corner, *matching)?
            }
            Step::Sum {
                other,
                labels,
                other_labels,
                wiring,
            } => {
                let h = replay(other)?;
                sum_dangerous(&g, labels, &h, other_labels, *wiring)?
            }
            Step::Join {
                other,
                corner,
                other_corner,
            } => {
                let h = replay(other)?;
                let c1 = corner_of(&g, *corner)?;
                let c2 = corner_of(&h, *other_corner)?;
                join_bad(&g, &c1, &h, &c2)?
            }
            Step::ContractNicePath { path } => contract_nice_path(&g, *path)?,
            Step::ThirtyAugment { image } => thirty_augment_image(&g, image)?,
        };
    }
    Ok(g)
}
