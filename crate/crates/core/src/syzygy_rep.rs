//! The representation carried by the second syzygy of the residue field.
//!
//! For a monomial ideal in two variables the first syzygies are minimally
//! generated by the relations between neighbouring staircase corners: for
//! corners `p_k, p_{k+1}` with `m = lcm(p_k, p_{k+1})` the relation
//! `(m / p_k) e_k - (m / p_{k+1}) e_{k+1}` is a minimal generator. Each
//! basis vector `e_k` carries the (trivial) weight of `p_k`, so the relation
//! transforms through the weight of `m`. These `mu - 1` weights are the
//! characters of `V`.

use num_integer::Integer;

use crate::abelian_rep::DiagonalRepresentation;
use crate::cyclic_singularity::{minimal_generators, CyclicType};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyRepresentation {
    singularity: CyclicType,
    weights: Vec<u64>,
}

impl SyzygyRepresentation {
    pub fn singularity(&self) -> CyclicType {
        self.singularity
    }

    /// Character residues mod `n`, one per consecutive staircase pair.
    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// `nu`, which is `mu - 1`.
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn is_faithful(&self) -> bool {
        weights_are_faithful(self.singularity.n(), &self.weights)
    }

    pub fn to_diagonal(&self) -> DiagonalRepresentation {
        DiagonalRepresentation::cyclic(self.singularity.n(), &self.weights)
            .expect("syzygy weights form a valid cyclic representation")
    }
}

pub fn syzygy_weights(t: CyclicType) -> SyzygyRepresentation {
    let staircase = minimal_generators(t);
    let weights = staircase
        .generators()
        .windows(2)
        .map(|pair| t.weight(pair[0].lcm(&pair[1])))
        .collect();
    SyzygyRepresentation {
        singularity: t,
        weights,
    }
}

/// Whether characters with these residues generate `Z/n`, i.e. `Z/n` acts
/// faithfully on the sum of the corresponding lines.
pub fn weights_are_faithful(n: u64, weights: &[u64]) -> bool {
    weights.iter().fold(n, |g, &w| g.gcd(&w)) == 1
}
