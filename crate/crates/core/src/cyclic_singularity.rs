//! Cyclic quotient singularities of type `1/n(1, a)` and their invariant
//! monomials.
//!
//! The generator of `Z/n` scales `u` by `xi` and `v` by `xi^a`, so the
//! monomial `u^i v^j` has weight `(i + a j) mod n` and is invariant exactly
//! when that weight vanishes.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact_arith::{gcd_u64, mod_inverse};

/// A validated singularity type `1/n(1, a)` with `gcd(a, n) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CyclicType {
    n: u64,
    a: u64,
}

impl CyclicType {
    /// Rejects `n < 2`, `a` outside `[1, n-1]` and non-small actions.
    pub fn validate(n: u64, a: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::OrderTooSmall { n });
        }
        if a == 0 || a >= n {
            return Err(Error::ExponentOutOfRange { n, a });
        }
        let gcd = gcd_u64(a, n);
        if gcd != 1 {
            return Err(Error::NotSmall { n, a, gcd });
        }
        Ok(CyclicType { n, a })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    /// Character of `u^i v^j` as a residue mod `n`.
    pub fn weight(&self, m: MonomialExponent) -> u64 {
        let n = u128::from(self.n);
        ((u128::from(m.i) + u128::from(self.a) * u128::from(m.j)) % n) as u64
    }

    pub fn is_invariant(&self, m: MonomialExponent) -> bool {
        self.weight(m) == 0
    }

    /// Every valid `(n, a)` pair with `n` in the given range, in order.
    pub fn all_with_order(orders: std::ops::RangeInclusive<u64>) -> impl Iterator<Item = CyclicType> {
        orders.flat_map(|n| (1..n).filter_map(move |a| CyclicType::validate(n, a).ok()))
    }
}

impl fmt::Display for CyclicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/{}(1,{})", self.n, self.a)
    }
}

/// Exponent pair `(i, j)` of the monomial `u^i v^j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialExponent {
    pub i: u64,
    pub j: u64,
}

impl MonomialExponent {
    pub const fn new(i: u64, j: u64) -> Self {
        MonomialExponent { i, j }
    }

    /// Componentwise divisibility: `self | other`.
    pub fn divides(&self, other: &MonomialExponent) -> bool {
        self.i <= other.i && self.j <= other.j
    }

    pub fn lcm(&self, other: &MonomialExponent) -> MonomialExponent {
        MonomialExponent::new(self.i.max(other.i), self.j.max(other.j))
    }
}

impl From<(u64, u64)> for MonomialExponent {
    fn from((i, j): (u64, u64)) -> Self {
        MonomialExponent::new(i, j)
    }
}

/// Minimal monomial generators of the invariant maximal ideal, sorted by
/// strictly decreasing `i` (so strictly increasing `j`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Staircase {
    generators: Vec<MonomialExponent>,
}

impl Staircase {
    pub fn generators(&self) -> &[MonomialExponent] {
        &self.generators
    }

    /// Number of generators, `mu`.
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn as_pairs(&self) -> Vec<(u64, u64)> {
        self.generators.iter().map(|m| (m.i, m.j)).collect()
    }
}

/// Walks `i` upward from 0; for each `i` the smallest invariant `j` is
/// `-i * a^{-1} mod n` (with `j = n` at `i = 0`), and a point is a corner of
/// the staircase exactly when its `j` undercuts every earlier one.
pub fn minimal_generators(t: CyclicType) -> Staircase {
    let n = t.n;
    let a_inv = u128::from(mod_inverse(t.a, n).expect("validated type has a unit exponent"));
    let mut corners = Vec::new();
    let mut lowest_j = u64::MAX;
    for i in 0..=n {
        let j = if i == 0 {
            n
        } else {
            ((u128::from(n - i % n) % u128::from(n)) * a_inv % u128::from(n)) as u64
        };
        if j < lowest_j {
            corners.push(MonomialExponent::new(i, j));
            lowest_j = j;
        }
    }
    corners.reverse();
    Staircase { generators: corners }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: u64, a: u64) -> CyclicType {
        CyclicType::validate(n, a).unwrap()
    }

    fn box_oracle(t: CyclicType) -> Vec<(u64, u64)> {
        let n = t.n();
        let inv: Vec<MonomialExponent> = (0..=n)
            .flat_map(|i| (0..=n).map(move |j| MonomialExponent::new(i, j)))
            .filter(|&m| m != MonomialExponent::new(0, 0) && t.is_invariant(m))
            .collect();
        let mut min: Vec<(u64, u64)> = inv
            .iter()
            .filter(|m| !inv.iter().any(|p| p != *m && p.divides(m)))
            .map(|m| (m.i, m.j))
            .collect();
        min.sort_by(|x, y| y.0.cmp(&x.0));
        min
    }

    #[test]
    fn validation() {
        assert!(CyclicType::validate(5, 2).is_ok());
        assert!(CyclicType::validate(2, 1).is_ok());
        assert_eq!(
            CyclicType::validate(4, 2),
            Err(Error::NotSmall { n: 4, a: 2, gcd: 2 })
        );
        assert_eq!(CyclicType::validate(1, 1), Err(Error::OrderTooSmall { n: 1 }));
        assert_eq!(CyclicType::validate(5, 0), Err(Error::ExponentOutOfRange { n: 5, a: 0 }));
        assert_eq!(CyclicType::validate(5, 5), Err(Error::ExponentOutOfRange { n: 5, a: 5 }));
        let msg = CyclicType::validate(4, 2).unwrap_err().to_string();
        assert!(msg.contains("a and n must be coprime"));
    }

    #[test]
    fn invariance_and_weights() {
        let s = t(5, 2);
        assert!(s.is_invariant((3, 1).into()));
        assert!(!s.is_invariant((1, 1).into()));
        assert_eq!(s.weight((5, 1).into()), 2);
        for ty in CyclicType::all_with_order(2..=15) {
            assert!(ty.is_invariant((ty.n(), 0).into()));
            assert_eq!(ty.weight((1, 0).into()), 1);
            assert_eq!(ty.weight((0, 1).into()), ty.a());
        }
    }

    #[test]
    fn staircase_examples() {
        assert_eq!(minimal_generators(t(5, 2)).as_pairs(), vec![(5, 0), (3, 1), (1, 2), (0, 5)]);
        assert_eq!(minimal_generators(t(2, 1)).as_pairs(), vec![(2, 0), (1, 1), (0, 2)]);
    }

    #[test]
    fn staircase_matches_box_oracle() {
        for ty in CyclicType::all_with_order(2..=30) {
            assert_eq!(minimal_generators(ty).as_pairs(), box_oracle(ty), "{ty}");
        }
    }

    #[test]
    fn staircase_shape() {
        for ty in CyclicType::all_with_order(2..=40) {
            let s = minimal_generators(ty);
            let g = s.generators();
            let (n, a) = (ty.n(), ty.a());
            assert!(s.len() >= 3 && s.len() as u64 <= n + 1);
            assert_eq!(g[0], MonomialExponent::new(n, 0));
            assert_eq!(g[1], MonomialExponent::new(n - a, 1));
            assert_eq!(*g.last().unwrap(), MonomialExponent::new(0, n));
            for w in g.windows(2) {
                assert!(w[0].i > w[1].i && w[0].j < w[1].j);
            }
            for p in g {
                assert_eq!(ty.weight(*p), 0);
                assert!(g.iter().all(|q| q == p || !q.divides(p)));
            }
        }
    }

    #[test]
    fn gorenstein_case() {
        for n in 2..=20 {
            let s = minimal_generators(t(n, n - 1));
            assert_eq!(s.as_pairs(), vec![(n, 0), (1, 1), (0, n)]);
        }
    }

    #[test]
    fn staircase_generates_invariant_semigroup() {
        for ty in CyclicType::all_with_order(2..=12) {
            let n = ty.n() as usize;
            let side = 2 * n + 1;
            let gens = minimal_generators(ty);
            // reachable[i][j]: (i, j) is a nonnegative combination of generators
            let mut reachable = vec![vec![false; side]; side];
            reachable[0][0] = true;
            for i in 0..side {
                for j in 0..side {
                    if reachable[i][j] {
                        continue;
                    }
                    reachable[i][j] = gens.generators().iter().any(|g| {
                        let (gi, gj) = (g.i as usize, g.j as usize);
                        gi <= i && gj <= j && reachable[i - gi][j - gj]
                    });
                }
            }
            for i in 0..side {
                for j in 0..side {
                    let m = MonomialExponent::new(i as u64, j as u64);
                    assert_eq!(reachable[i][j], ty.is_invariant(m), "{ty} at {m:?}");
                }
            }
        }
    }
}
