//! Diagonal representations of finite abelian groups and the multiplicities
//! of characters inside their symmetric powers.
//!
//! A group `Z/n_1 x ... x Z/n_k` is identified with its character group by
//! fixing a primitive root of unity once, so characters are plain residue
//! vectors and nothing here touches roots of unity. Group elements are
//! indexed by their mixed-radix encoding (first component fastest).

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::binomial;

/// `Z/n_1 x ... x Z/n_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    moduli: Vec<u64>,
    order: u64,
}

impl AbelianGroup {
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        if moduli.is_empty() || moduli.contains(&0) {
            return Err(Error::InvalidModuli(moduli));
        }
        let order = moduli
            .iter()
            .try_fold(1u64, |acc, &m| acc.checked_mul(m))
            .filter(|&o| usize::try_from(o).is_ok())
            .ok_or(Error::GroupTooLarge)?;
        Ok(AbelianGroup { moduli, order })
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn identity(&self) -> Character {
        Character::new(vec![0; self.moduli.len()])
    }

    pub fn contains(&self, c: &Character) -> bool {
        c.components.len() == self.moduli.len()
            && c.components.iter().zip(&self.moduli).all(|(x, m)| x < m)
    }

    pub(crate) fn check(&self, c: &Character) -> Result<()> {
        if self.contains(c) {
            Ok(())
        } else {
            Err(Error::GroupMismatch {
                character: c.components.clone(),
                moduli: self.moduli.clone(),
            })
        }
    }

    /// Reduces an arbitrary integer vector into the group.
    pub fn reduce(&self, components: &[i128]) -> Result<Character> {
        if components.len() != self.moduli.len() {
            return Err(Error::GroupMismatch {
                character: components.iter().map(|&x| x as u64).collect(),
                moduli: self.moduli.clone(),
            });
        }
        Ok(Character::new(
            components
                .iter()
                .zip(&self.moduli)
                .map(|(&x, &m)| x.mod_floor(&i128::from(m)) as u64)
                .collect(),
        ))
    }

    pub fn index_of(&self, c: &Character) -> usize {
        let mut idx = 0u64;
        for (x, m) in c.components.iter().zip(&self.moduli).rev() {
            idx = idx * m + x;
        }
        idx as usize
    }

    pub fn element(&self, mut idx: usize) -> Character {
        let mut comps = Vec::with_capacity(self.moduli.len());
        for &m in &self.moduli {
            comps.push((idx as u64) % m);
            idx /= m as usize;
        }
        Character::new(comps)
    }

    pub fn elements(&self) -> impl Iterator<Item = Character> + '_ {
        (0..self.order as usize).map(|i| self.element(i))
    }

    pub fn add(&self, x: &Character, y: &Character) -> Character {
        Character::new(
            x.components
                .iter()
                .zip(&y.components)
                .zip(&self.moduli)
                .map(|((a, b), m)| ((u128::from(*a) + u128::from(*b)) % u128::from(*m)) as u64)
                .collect(),
        )
    }

    pub fn scale(&self, x: &Character, k: u64) -> Character {
        Character::new(
            x.components
                .iter()
                .zip(&self.moduli)
                .map(|(a, m)| (u128::from(*a) * u128::from(k) % u128::from(*m)) as u64)
                .collect(),
        )
    }

    /// Index permutation `g -> g + shift`.
    pub(crate) fn translation(&self, shift: &Character) -> Vec<usize> {
        self.elements()
            .map(|g| self.index_of(&self.add(&g, shift)))
            .collect()
    }

    /// Membership bitmap of the subgroup generated by `generators`.
    pub fn generated_subgroup(&self, generators: &[Character]) -> Result<Vec<bool>> {
        for g in generators {
            self.check(g)?;
        }
        let shifts: Vec<Vec<usize>> = generators.iter().map(|g| self.translation(g)).collect();
        let mut seen = vec![false; self.order as usize];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(x) = queue.pop_front() {
            for s in &shifts {
                let y = s[x];
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        Ok(seen)
    }
}

/// A character of an [`AbelianGroup`], one residue per cyclic factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    components: Vec<u64>,
}

impl Character {
    pub fn new(components: Vec<u64>) -> Self {
        Character { components }
    }

    pub fn cyclic(c: u64) -> Self {
        Character::new(vec![c])
    }

    pub fn components(&self) -> &[u64] {
        &self.components
    }

    pub fn is_trivial(&self) -> bool {
        self.components.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `V = V_1 + ... + V_nu`, each line acted on through one character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalRepresentation {
    group: AbelianGroup,
    weights: Vec<Character>,
}

impl DiagonalRepresentation {
    pub fn new(group: AbelianGroup, weights: Vec<Character>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::EmptyRepresentation);
        }
        for w in &weights {
            group.check(w)?;
        }
        Ok(DiagonalRepresentation { group, weights })
    }

    /// Representation of `Z/n` with the given weights reduced mod `n`.
    pub fn cyclic(n: u64, weights: &[u64]) -> Result<Self> {
        let group = AbelianGroup::cyclic(n)?;
        let weights = weights.iter().map(|&w| Character::cyclic(w % n)).collect();
        Self::new(group, weights)
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn weights(&self) -> &[Character] {
        &self.weights
    }

    /// `nu = dim V`.
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// Weight of the monomial with exponent vector `x`.
    pub fn monomial_weight(&self, x: &[u64]) -> Character {
        let mut acc = self.group.identity();
        for (w, &e) in self.weights.iter().zip(x) {
            acc = self.group.add(&acc, &self.group.scale(w, e));
        }
        acc
    }

    /// A nonzero group element acting trivially on every line, if any.
    ///
    /// The element `g` acts on the line with character `w` by
    /// `exp(2 pi i * sum_j w_j g_j / n_j)`.
    pub fn kernel_element(&self) -> Option<Character> {
        let moduli = self.group.moduli();
        let lcm = moduli.iter().fold(1u128, |acc, &m| acc.lcm(&u128::from(m)));
        self.group.elements().skip(1).find(|g| {
            self.weights.iter().all(|w| {
                let pairing: u128 = w
                    .components()
                    .iter()
                    .zip(g.components())
                    .zip(moduli)
                    .map(|((&wj, &gj), &nj)| {
                        u128::from(wj) * u128::from(gj) % u128::from(nj) * (lcm / u128::from(nj))
                    })
                    .sum();
                pairing.is_multiple_of(lcm)
            })
        })
    }
}

/// `dim Sym^q(V)` for `dim V = nu`, i.e. `C(q + nu - 1, nu - 1)`.
pub fn sym_dim(nu: u64, q: u64) -> BigUint {
    if nu == 0 {
        return if q == 0 { BigUint::one() } else { BigUint::zero() };
    }
    binomial(q + nu - 1, nu - 1)
}

/// Multiplicities of every character in `Sym^q(V)` for all `q <= max_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityTable {
    group: AbelianGroup,
    by_degree: Vec<Vec<BigUint>>,
}

impl MultiplicityTable {
    /// Counts `#{x in N^nu : |x| = q, sum x_i w_i = chi}` for every `q` and
    /// `chi` at once.
    ///
    /// Adding the weights one at a time, the count for degree `d` after
    /// admitting weight `w` is the old count plus the new count at degree
    /// `d - 1` shifted by `w`, so each weight costs one sweep over
    /// `degree x group`.
    pub fn build(rep: &DiagonalRepresentation, max_degree: u64) -> Self {
        let group = rep.group.clone();
        let order = group.order() as usize;
        let degrees = max_degree as usize + 1;
        let mut table = vec![vec![BigUint::zero(); order]; degrees];
        table[0][0] = BigUint::one();
        for w in &rep.weights {
            let shift = group.translation(w);
            for d in 1..degrees {
                let (lower, upper) = table.split_at_mut(d);
                let prev = &lower[d - 1];
                let cur = &mut upper[0];
                for (g, count) in prev.iter().enumerate() {
                    if !count.is_zero() {
                        cur[shift[g]] += count;
                    }
                }
            }
        }
        MultiplicityTable {
            group,
            by_degree: table,
        }
    }

    pub fn max_degree(&self) -> u64 {
        self.by_degree.len() as u64 - 1
    }

    pub fn get(&self, chi: &Character, q: u64) -> Result<&BigUint> {
        self.group.check(chi)?;
        if q > self.max_degree() {
            return Err(Error::InvalidGrid(format!(
                "degree {q} exceeds table bound {}",
                self.max_degree()
            )));
        }
        Ok(&self.by_degree[q as usize][self.group.index_of(chi)])
    }

    /// Multiplicities of every character in one degree, in index order.
    pub fn degree(&self, q: u64) -> &[BigUint] {
        &self.by_degree[q as usize]
    }
}

/// `mult(chi, Sym^q(V))` by dynamic programming.
pub fn multiplicity(rep: &DiagonalRepresentation, chi: &Character, q: u64) -> Result<BigUint> {
    rep.group.check(chi)?;
    Ok(MultiplicityTable::build(rep, q).get(chi, q)?.clone())
}

/// `mult(chi, Sym^q(V))` as a coefficient of the truncated product
/// `prod_i sum_{d <= q} t^d z^{d w_i}` in `Z[G][t] / t^{q+1}`.
pub fn multiplicity_oracle(rep: &DiagonalRepresentation, chi: &Character, q: u64) -> Result<BigUint> {
    let group = &rep.group;
    group.check(chi)?;
    let order = group.order() as usize;
    let degrees = q as usize + 1;
    let elements: Vec<Character> = group.elements().collect();

    // series[d][g] is the coefficient of t^d z^g
    let mut series = vec![vec![BigUint::zero(); order]; degrees];
    series[0][0] = BigUint::one();
    for w in &rep.weights {
        let factor: Vec<usize> = (0..degrees)
            .map(|d| group.index_of(&group.scale(w, d as u64)))
            .collect();
        let mut product = vec![vec![BigUint::zero(); order]; degrees];
        for (d1, row) in series.iter().enumerate() {
            for (g, coeff) in row.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                for (d2, &h) in factor.iter().enumerate().take(degrees - d1) {
                    let target = group.index_of(&group.add(&elements[g], &elements[h]));
                    product[d1 + d2][target] += coeff;
                }
            }
        }
        series = product;
    }
    Ok(series[q as usize][group.index_of(chi)].clone())
}

/// Order of the subgroup generated by `generators`, by closure enumeration.
/// Meant for groups of order up to about `10^4`.
pub fn subgroup_order(generators: &[Character], group: &AbelianGroup) -> Result<u64> {
    Ok(group
        .generated_subgroup(generators)?
        .into_iter()
        .filter(|&b| b)
        .count() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn group_validation() {
        assert!(AbelianGroup::new(vec![]).is_err());
        assert!(AbelianGroup::new(vec![3, 0]).is_err());
        assert!(matches!(
            AbelianGroup::new(vec![u64::MAX, 3]),
            Err(Error::GroupTooLarge)
        ));
        let g = AbelianGroup::new(vec![2, 3]).unwrap();
        assert_eq!(g.order(), 6);
        for i in 0..6 {
            assert_eq!(g.index_of(&g.element(i)), i);
        }
    }

    #[test]
    fn rep_validation() {
        let g = AbelianGroup::cyclic(4).unwrap();
        assert_eq!(
            DiagonalRepresentation::new(g.clone(), vec![]),
            Err(Error::EmptyRepresentation)
        );
        assert!(DiagonalRepresentation::new(g.clone(), vec![Character::cyclic(4)]).is_err());
        assert!(DiagonalRepresentation::new(g, vec![Character::new(vec![1, 1])]).is_err());
    }

    #[test]
    fn sym_dim_examples() {
        assert_eq!(sym_dim(3, 0), big(1));
        assert_eq!(sym_dim(3, 3), big(10));
        assert_eq!(sym_dim(1, 7), big(1));
    }

    #[test]
    fn multiplicity_examples() {
        let a1 = DiagonalRepresentation::cyclic(2, &[1, 1]).unwrap();
        assert_eq!(multiplicity(&a1, &Character::cyclic(0), 4).unwrap(), big(5));
        assert_eq!(multiplicity_oracle(&a1, &Character::cyclic(0), 4).unwrap(), big(5));

        let r = DiagonalRepresentation::cyclic(5, &[2, 2, 1]).unwrap();
        assert_eq!(multiplicity(&r, &Character::cyclic(0), 0).unwrap(), big(1));
        assert_eq!(multiplicity(&r, &Character::cyclic(1), 1).unwrap(), big(1));
        assert_eq!(multiplicity_oracle(&r, &Character::cyclic(1), 1).unwrap(), big(1));

        let c3 = DiagonalRepresentation::cyclic(3, &[1]).unwrap();
        assert_eq!(multiplicity_oracle(&c3, &Character::cyclic(2), 2).unwrap(), big(1));
        assert_eq!(multiplicity_oracle(&c3, &Character::cyclic(0), 2).unwrap(), big(0));
        assert_eq!(multiplicity(&c3, &Character::cyclic(2), 2).unwrap(), big(1));
    }

    #[test]
    fn group_mismatch_is_an_error() {
        let r = DiagonalRepresentation::cyclic(5, &[2, 2, 1]).unwrap();
        assert!(matches!(
            multiplicity(&r, &Character::cyclic(5), 1),
            Err(Error::GroupMismatch { .. })
        ));
        assert!(multiplicity_oracle(&r, &Character::new(vec![0, 0]), 1).is_err());
    }

    #[test]
    fn subgroup_orders() {
        let g = AbelianGroup::new(vec![4, 4]).unwrap();
        let c = |a, b| Character::new(vec![a, b]);
        assert_eq!(subgroup_order(&[c(2, 0)], &g).unwrap(), 2);
        assert_eq!(subgroup_order(&[], &g).unwrap(), 1);
        assert_eq!(subgroup_order(&[c(1, 2), c(0, 2)], &g).unwrap(), 8);
    }

    #[test]
    fn kernel_elements() {
        let r = DiagonalRepresentation::cyclic(4, &[2]).unwrap();
        assert_eq!(r.kernel_element(), Some(Character::cyclic(2)));
        let r = DiagonalRepresentation::cyclic(5, &[2, 2, 1]).unwrap();
        assert_eq!(r.kernel_element(), None);
        let g = AbelianGroup::new(vec![2, 2]).unwrap();
        let r = DiagonalRepresentation::new(g.clone(), vec![Character::new(vec![1, 0])]).unwrap();
        assert_eq!(r.kernel_element(), Some(Character::new(vec![0, 1])));
        let r = DiagonalRepresentation::new(
            g,
            vec![Character::new(vec![1, 0]), Character::new(vec![0, 1])],
        )
        .unwrap();
        assert_eq!(r.kernel_element(), None);
    }

    #[test]
    fn characters_outside_weight_span_never_occur() {
        let r = DiagonalRepresentation::cyclic(6, &[2, 4]).unwrap();
        let table = MultiplicityTable::build(&r, 12);
        for q in 0..=12 {
            for odd in [1, 3, 5] {
                assert!(table.get(&Character::cyclic(odd), q).unwrap().is_zero());
            }
        }
    }
}
