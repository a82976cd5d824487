//! Cayley-Menger matrices and the circuit polynomial of `K4`.

use std::collections::BTreeSet;

use crate::error::GraphError;
use crate::graph::VertexId;
use crate::poly::{determinant, DistVar, MultiPoly, ResourceLimits};

/// Symbolic bordered squared-distance matrix on a set of labeled points.
///
/// Row and column 0 are the border `(0 1 ... 1)`; entry `(a, b)` for
/// `a != b` is `x_{i,j}` of the corresponding labels; the diagonal is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyMengerMatrix {
    labels: Vec<VertexId>,
}

impl CayleyMengerMatrix {
    pub fn labels(&self) -> &[VertexId] {
        &self.labels
    }

    pub fn dimension(&self) -> usize {
        self.labels.len() + 1
    }

    pub fn entry(&self, row: usize, col: usize) -> MultiPoly {
        match (row, col) {
            (0, 0) => MultiPoly::zero(),
            (0, _) | (_, 0) => MultiPoly::one(),
            (a, b) if a == b => MultiPoly::zero(),
            (a, b) => MultiPoly::var(
                DistVar::new(self.labels[a - 1], self.labels[b - 1]).expect("distinct labels"),
            ),
        }
    }

    pub fn rows(&self) -> Vec<Vec<MultiPoly>> {
        let n = self.dimension();
        (0..n).map(|r| (0..n).map(|c| self.entry(r, c)).collect()).collect()
    }

    pub fn determinant(&self) -> MultiPoly {
        determinant(&self.rows(), &ResourceLimits::unlimited()).expect("small symbolic determinant")
    }
}

pub fn cm_matrix(vertices: &BTreeSet<VertexId>) -> Result<CayleyMengerMatrix, GraphError> {
    if vertices.len() < 4 {
        return Err(GraphError::TooFewVertices { needed: 4, found: vertices.len() });
    }
    Ok(CayleyMengerMatrix { labels: vertices.iter().copied().collect() })
}

/// Primitive part of the 5x5 Cayley-Menger determinant on four labels.
pub fn k4_circuit_polynomial(vertices: [VertexId; 4]) -> Result<MultiPoly, GraphError> {
    let set: BTreeSet<VertexId> = vertices.iter().copied().collect();
    if set.len() != 4 {
        return Err(GraphError::Precondition("K4 polynomial needs 4 distinct labels".into()));
    }
    Ok(cm_matrix(&set)?.determinant().primitive_part().expect("nonzero determinant"))
}
