//! The kernel lattice of the weight map and lattice points of its cosets in
//! dilated standard simplices.
//!
//! For a diagonal representation with weights `w_1, ..., w_nu` the weight map
//! sends `x in Z^nu` to `sum x_i w_i`. Its kernel `L` has index equal to the
//! order of the subgroup generated by the weights, and the monomials of
//! degree `q` with a fixed character are the points of one coset `a0 + L`
//! on the hyperplane `|x| = q`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::abelian_rep::{AbelianGroup, Character, DiagonalRepresentation, MultiplicityTable};
use crate::error::{Error, Result};
use crate::exact_arith::{abs_det_of_full_rank_kernel, snf, IntegerMatrix, SnfDecomposition};

/// A full-rank sublattice `L = A Z^nu` with its Smith decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightLattice {
    ambient_dim: usize,
    basis: IntegerMatrix,
    index: BigUint,
    snf: SnfDecomposition,
}

impl WeightLattice {
    /// Wraps a square basis matrix (columns are basis vectors).
    pub fn from_basis(basis: IntegerMatrix) -> Result<Self> {
        let dim = basis.rows();
        if basis.cols() != dim {
            return Err(Error::RankDeficient {
                rank: basis.cols().min(dim),
                dim,
            });
        }
        let snf = snf(&basis)?;
        let index = abs_det_of_full_rank_kernel(&snf)?;
        Ok(WeightLattice {
            ambient_dim: dim,
            basis,
            index,
            snf,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &IntegerMatrix {
        &self.basis
    }

    /// `[Z^nu : L]`.
    pub fn index(&self) -> &BigUint {
        &self.index
    }

    pub fn snf(&self) -> &SnfDecomposition {
        &self.snf
    }

    /// Coordinates `y` with `A y = x`, or `None` when `x` is not in `L`.
    ///
    /// With `U A V = D` this is `y = V D^{-1} U x`.
    pub fn solve(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(x.len(), self.ambient_dim, "vector length mismatch");
        let ux = self.snf.u.mul_vec(x);
        let mut scaled = Vec::with_capacity(ux.len());
        for (i, c) in ux.into_iter().enumerate() {
            let (q, r) = c.div_rem(self.snf.d.get(i, i));
            if !r.is_zero() {
                return None;
            }
            scaled.push(q);
        }
        Some(self.snf.v.mul_vec(&scaled))
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.solve(x).is_some()
    }

    /// `Z^nu / L` as a product of cyclic groups, with the images of the unit
    /// vectors as weights. Its kernel lattice is `L` again.
    pub fn quotient_representation(&self) -> DiagonalRepresentation {
        let (moduli, rows) = self.quotient_factors();
        let group = AbelianGroup::new(moduli).expect("invariant factors are positive");
        let weights = (0..self.ambient_dim)
            .map(|col| {
                let comps: Vec<i128> = if rows.is_empty() {
                    vec![0]
                } else {
                    rows.iter()
                        .map(|&r| small(self.snf.u.get(r, col)))
                        .collect()
                };
                group.reduce(&comps).expect("component count matches")
            })
            .collect();
        DiagonalRepresentation::new(group, weights).expect("quotient weights lie in the quotient")
    }

    /// Image of `x` in [`Self::quotient_representation`]'s group.
    pub fn quotient_character(&self, x: &[BigInt]) -> Character {
        let (moduli, rows) = self.quotient_factors();
        if rows.is_empty() {
            return Character::cyclic(0);
        }
        let ux = self.snf.u.mul_vec(x);
        Character::new(
            rows.iter()
                .zip(&moduli)
                .map(|(&r, &m)| {
                    let v = ux[r].mod_floor(&BigInt::from(m));
                    u64::try_from(v).expect("residue fits")
                })
                .collect(),
        )
    }

    /// Nontrivial invariant factors and the rows of `U` they belong to.
    fn quotient_factors(&self) -> (Vec<u64>, Vec<usize>) {
        let mut moduli = Vec::new();
        let mut rows = Vec::new();
        for (i, d) in self.snf.diagonal().iter().enumerate() {
            if !d.is_one() {
                moduli.push(u64::try_from(d).expect("quotient group order fits in u64"));
                rows.push(i);
            }
        }
        if moduli.is_empty() {
            moduli.push(1);
        }
        (moduli, rows)
    }
}

fn small(x: &BigInt) -> i128 {
    i128::try_from(x).expect("transform entry fits in i128")
}

/// A point `a0` whose weight is a prescribed character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetPoint {
    a0: Vec<u64>,
}

impl CosetPoint {
    pub fn new(a0: Vec<u64>) -> Self {
        CosetPoint { a0 }
    }

    pub fn zero(dim: usize) -> Self {
        CosetPoint { a0: vec![0; dim] }
    }

    pub fn coords(&self) -> &[u64] {
        &self.a0
    }

    pub fn to_bigint(&self) -> Vec<BigInt> {
        self.a0.iter().map(|&x| BigInt::from(x)).collect()
    }
}

/// Basis and index of `ker(x -> sum x_i w_i)`.
///
/// The weight map is presented by the stacked relation matrix
/// `[W | diag(n_1, ..., n_k)]`; the last `nu` columns of its right Smith
/// transform span the integer kernel, and dropping the auxiliary
/// coordinates maps that kernel isomorphically onto `L`. The index is taken
/// from the same decomposition as `prod n_j / prod d_i` and cross-checked
/// against the determinant of the basis.
pub fn kernel_lattice(rep: &DiagonalRepresentation) -> Result<WeightLattice> {
    let moduli = rep.group().moduli();
    let k = moduli.len();
    let nu = rep.dim();

    let mut relations = IntegerMatrix::zeros(k, nu + k);
    for (i, w) in rep.weights().iter().enumerate() {
        for (j, &c) in w.components().iter().enumerate() {
            relations.set(j, i, BigInt::from(c));
        }
    }
    for (j, &m) in moduli.iter().enumerate() {
        relations.set(j, nu + j, BigInt::from(m));
    }
    let stacked = snf(&relations)?;
    if stacked.rank() != k {
        return Err(Error::InvariantViolation(format!(
            "relation matrix has rank {} instead of {k}",
            stacked.rank()
        )));
    }

    let columns: Vec<Vec<BigInt>> = (k..nu + k)
        .map(|c| stacked.v.column(c)[..nu].to_vec())
        .collect();
    let basis = IntegerMatrix::from_columns(&columns);

    let group_order = BigUint::from(rep.group().order());
    let cokernel: BigUint = stacked
        .invariant_factors()
        .iter()
        .map(|d| d.magnitude().clone())
        .product();
    let subgroup = &group_order / &cokernel;

    let lattice = WeightLattice::from_basis(basis)?;
    if lattice.index != subgroup {
        return Err(Error::InvariantViolation(format!(
            "kernel basis determinant {} disagrees with subgroup order {subgroup}",
            lattice.index
        )));
    }
    Ok(lattice)
}

/// `|det A|` recomputed from the stored Smith decomposition.
pub fn index_of_lattice(lat: &WeightLattice) -> Result<BigUint> {
    abs_det_of_full_rank_kernel(&lat.snf)
}

/// Whether the weights generate the whole character group, which holds
/// exactly when `[Z^nu : L] = |G|`.
pub fn is_faithful(rep: &DiagonalRepresentation) -> Result<bool> {
    Ok(*kernel_lattice(rep)?.index() == BigUint::from(rep.group().order()))
}

/// Lexicographically smallest nonnegative `a0` with weight `chi`, or `None`
/// when `chi` lies outside the span of the weights.
///
/// Coordinates are fixed left to right, each as small as possible while the
/// remaining weights can still absorb the residual character.
pub fn coset_representative(rep: &DiagonalRepresentation, chi: &Character) -> Result<Option<CosetPoint>> {
    let group = rep.group();
    if !group.contains(chi) {
        return Err(Error::GroupMismatch {
            character: chi.components().to_vec(),
            moduli: group.moduli().to_vec(),
        });
    }
    let weights = rep.weights();
    let nu = weights.len();
    // reach[i]: subgroup generated by weights[i..], grown from the back
    let mut reach = vec![Vec::new(); nu + 1];
    reach[nu] = group.generated_subgroup(&[])?;
    for i in (0..nu).rev() {
        reach[i] = close_under(group, &reach[i + 1], &weights[i]);
    }
    if !reach[0][group.index_of(chi)] {
        return Ok(None);
    }

    let mut residual = chi.clone();
    let mut a0 = Vec::with_capacity(nu);
    for (i, w) in weights.iter().enumerate() {
        let neg_w = group.scale(w, group.order() - 1);
        let mut c = 0u64;
        while !reach[i + 1][group.index_of(&residual)] {
            residual = group.add(&residual, &neg_w);
            c += 1;
            if c > group.order() {
                return Err(Error::InvariantViolation(format!(
                    "no coset representative completion for {chi}"
                )));
            }
        }
        a0.push(c);
    }
    Ok(Some(CosetPoint::new(a0)))
}

/// Smallest superset of the subgroup `members` closed under adding `step`.
fn close_under(group: &AbelianGroup, members: &[bool], step: &Character) -> Vec<bool> {
    let shift = group.translation(step);
    let mut out = members.to_vec();
    let mut stack: Vec<usize> = (0..out.len()).filter(|&g| out[g]).collect();
    while let Some(g) = stack.pop() {
        let h = shift[g];
        if !out[h] {
            out[h] = true;
            stack.push(h);
        }
    }
    out
}

/// `#{x in N^nu : |x| <= n_max, x in a0 + L}` through the multiplicity
/// recursion over `Z^nu / L`.
pub fn count_coset_points(lat: &WeightLattice, a0: &CosetPoint, n_max: u64) -> Result<BigUint> {
    check_dim(lat, a0)?;
    let quotient = lat.quotient_representation();
    let chi = lat.quotient_character(&a0.to_bigint());
    let table = MultiplicityTable::build(&quotient, n_max);
    let idx = quotient.group().index_of(&chi);
    Ok((0..=n_max).map(|q| &table.degree(q)[idx]).sum())
}

/// Same count by walking every lattice point of the dilated simplex and
/// testing membership of `x - a0` in `L`. Exponential in `nu`.
pub fn count_coset_points_geometric(lat: &WeightLattice, a0: &CosetPoint, n_max: u64) -> Result<BigUint> {
    check_dim(lat, a0)?;
    let offset = a0.to_bigint();
    let mut count = BigUint::zero();
    let mut point = vec![0u64; lat.ambient_dim];
    visit_simplex(&mut point, 0, n_max, &mut |x| {
        let shifted: Vec<BigInt> = x.iter().zip(&offset).map(|(&xi, o)| BigInt::from(xi) - o).collect();
        if lat.contains(&shifted) {
            count += 1u32;
        }
    });
    Ok(count)
}

fn check_dim(lat: &WeightLattice, a0: &CosetPoint) -> Result<()> {
    if a0.a0.len() != lat.ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: lat.ambient_dim,
            got: a0.a0.len(),
        });
    }
    Ok(())
}

/// Calls `f` on every `x in N^len` with `|x| <= budget`.
pub(crate) fn visit_simplex(point: &mut [u64], pos: usize, budget: u64, f: &mut impl FnMut(&[u64])) {
    if pos == point.len() {
        f(point);
        return;
    }
    for c in 0..=budget {
        point[pos] = c;
        visit_simplex(point, pos + 1, budget - c, f);
    }
    point[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian_rep::{multiplicity, subgroup_order};
    use crate::exact_arith::binomial;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cyclic_single_weight() {
        for n in 2..=9 {
            let rep = DiagonalRepresentation::cyclic(n, &[1]).unwrap();
            let lat = kernel_lattice(&rep).unwrap();
            assert_eq!(lat.index(), &big(n));
            assert!(lat.contains(&ints(&[n as i64])));
            assert!(!lat.contains(&ints(&[1])));
        }
    }

    #[test]
    fn a1_lattice_is_even_sum() {
        let rep = DiagonalRepresentation::cyclic(2, &[1, 1]).unwrap();
        let lat = kernel_lattice(&rep).unwrap();
        assert_eq!(lat.index(), &big(2));
        for x in -3i64..=3 {
            for y in -3i64..=3 {
                assert_eq!(lat.contains(&ints(&[x, y])), (x + y) % 2 == 0);
            }
        }
    }

    #[test]
    fn syzygy_rep_of_five_two() {
        let rep = DiagonalRepresentation::cyclic(5, &[2, 2, 1]).unwrap();
        let lat = kernel_lattice(&rep).unwrap();
        assert_eq!(lat.index(), &big(5));
        assert_eq!(subgroup_order(rep.weights(), rep.group()).unwrap(), 5);
        assert!(is_faithful(&rep).unwrap());
    }

    #[test]
    fn basis_columns_have_trivial_weight() {
        let g = AbelianGroup::new(vec![4, 6]).unwrap();
        let c = |a, b| Character::new(vec![a, b]);
        let rep = DiagonalRepresentation::new(g, vec![c(1, 2), c(2, 3), c(3, 0)]).unwrap();
        let lat = kernel_lattice(&rep).unwrap();
        for col in 0..3 {
            let v: Vec<u64> = lat
                .basis()
                .column(col)
                .iter()
                .map(|x| x.mod_floor(&BigInt::from(12)).try_into().unwrap())
                .collect();
            assert!(rep.monomial_weight(&v).is_trivial());
        }
        assert_eq!(lat.index(), &big(subgroup_order(rep.weights(), rep.group()).unwrap()));
    }

    #[test]
    fn index_examples() {
        let lat = WeightLattice::from_basis(IntegerMatrix::from_rows(&[vec![2, 0], vec![1, 3]])).unwrap();
        assert_eq!(index_of_lattice(&lat).unwrap(), big(6));
        let lat = WeightLattice::from_basis(IntegerMatrix::from_rows(&[vec![1, 0], vec![0, 6]])).unwrap();
        assert_eq!(index_of_lattice(&lat).unwrap(), big(6));
        let lat = WeightLattice::from_basis(IntegerMatrix::from_rows(&[vec![7]])).unwrap();
        assert_eq!(index_of_lattice(&lat).unwrap(), big(7));
        assert!(matches!(
            WeightLattice::from_basis(IntegerMatrix::from_rows(&[vec![1, 2], vec![2, 4]])),
            Err(Error::RankDeficient { .. })
        ));
    }

    #[test]
    fn solve_returns_basis_coordinates() {
        let lat = WeightLattice::from_basis(IntegerMatrix::from_rows(&[vec![2, 0], vec![1, 3]])).unwrap();
        let x = ints(&[4, 5]);
        let y = lat.solve(&x).unwrap();
        assert_eq!(lat.basis().mul_vec(&y), x);
        assert!(lat.solve(&ints(&[1, 0])).is_none());
    }

    #[test]
    fn coset_representatives() {
        let rep = DiagonalRepresentation::cyclic(5, &[2, 2, 1]).unwrap();
        let zero = coset_representative(&rep, &Character::cyclic(0)).unwrap().unwrap();
        assert_eq!(zero.coords(), &[0, 0, 0]);
        let one = coset_representative(&rep, &Character::cyclic(1)).unwrap().unwrap();
        assert_eq!(one.coords(), &[0, 0, 1]);

        let rep = DiagonalRepresentation::cyclic(4, &[2]).unwrap();
        assert_eq!(coset_representative(&rep, &Character::cyclic(1)).unwrap(), None);
        assert_eq!(
            coset_representative(&rep, &Character::cyclic(2)).unwrap(),
            Some(CosetPoint::new(vec![1]))
        );
    }

    #[test]
    fn representatives_have_the_right_weight() {
        let g = AbelianGroup::new(vec![3, 4]).unwrap();
        let c = |a, b| Character::new(vec![a, b]);
        let rep = DiagonalRepresentation::new(g.clone(), vec![c(1, 2), c(0, 3), c(2, 2)]).unwrap();
        for chi in g.elements() {
            let a0 = coset_representative(&rep, &chi).unwrap().unwrap();
            assert_eq!(rep.monomial_weight(a0.coords()), chi);
        }
    }

    #[test]
    fn full_lattice_counts_simplex_points() {
        for nu in 1..=5usize {
            let lat = WeightLattice::from_basis(IntegerMatrix::identity(nu)).unwrap();
            for n in [0u64, 1, 7, 30] {
                let expected = binomial(n + nu as u64, nu as u64);
                assert_eq!(count_coset_points(&lat, &CosetPoint::zero(nu), n).unwrap(), expected);
            }
        }
    }

    #[test]
    fn a1_even_points() {
        let rep = DiagonalRepresentation::cyclic(2, &[1, 1]).unwrap();
        let lat = kernel_lattice(&rep).unwrap();
        let a0 = CosetPoint::zero(2);
        assert_eq!(count_coset_points(&lat, &a0, 4).unwrap(), big(9));
        assert_eq!(count_coset_points_geometric(&lat, &a0, 4).unwrap(), big(9));
    }

    #[test]
    fn dp_geometric_and_multiplicity_agree() {
        let rep = DiagonalRepresentation::cyclic(5, &[2, 2, 1]).unwrap();
        let lat = kernel_lattice(&rep).unwrap();
        for chi in rep.group().elements() {
            let a0 = coset_representative(&rep, &chi).unwrap().unwrap();
            let direct: BigUint = (0..=20).map(|q| multiplicity(&rep, &chi, q).unwrap()).sum();
            assert_eq!(count_coset_points(&lat, &a0, 20).unwrap(), direct);
            assert_eq!(count_coset_points_geometric(&lat, &a0, 12).unwrap(),
                (0..=12).map(|q| multiplicity(&rep, &chi, q).unwrap()).sum::<BigUint>());
        }
    }

    #[test]
    fn cosets_partition_the_simplex() {
        let rep = DiagonalRepresentation::cyclic(7, &[3, 1, 5]).unwrap();
        let lat = kernel_lattice(&rep).unwrap();
        let total: BigUint = rep
            .group()
            .elements()
            .map(|chi| {
                let a0 = coset_representative(&rep, &chi).unwrap().unwrap();
                count_coset_points(&lat, &a0, 15).unwrap()
            })
            .sum();
        assert_eq!(total, binomial(15 + 3, 3));
    }

    #[test]
    fn dimension_mismatch() {
        let lat = WeightLattice::from_basis(IntegerMatrix::identity(2)).unwrap();
        assert!(matches!(
            count_coset_points(&lat, &CosetPoint::zero(3), 2),
            Err(Error::DimensionMismatch { expected: 2, got: 3 })
        ));
    }
}
