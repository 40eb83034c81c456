//! Generalized symmetric signatures of cyclic quotient singularities.
//!
//! The limit value comes from the lattice index, `1 / [Z^nu : L]`. The
//! partial-sum ratios `r_N = sum_{q<=N} mult / sum_{q<=N} dim` are computed
//! separately and exactly so that convergence towards that value can be
//! observed, never extrapolated.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::abelian_rep::{sym_dim, Character, DiagonalRepresentation, MultiplicityTable};
use crate::cyclic_singularity::CyclicType;
use crate::error::{Error, Result};
use crate::lattice_counting::{coset_representative, index_of_lattice, kernel_lattice};
use crate::syzygy_rep::syzygy_weights;

/// One partial sum of the ratio series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesEntry {
    pub degree_bound: u64,
    pub numerator: BigUint,
    pub denominator: BigUint,
    pub ratio: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioSeries {
    pub entries: Vec<SeriesEntry>,
    pub target: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergenceReport {
    pub final_gap: BigRational,
    /// `(N, N * |r_N - target|)` for every entry.
    pub scaled_gaps: Vec<(u64, BigRational)>,
    pub monotone_tail: bool,
}

/// Validates a character of `Z/n` given as a plain residue.
pub fn cyclic_character(t: CyclicType, chi: u64) -> Result<Character> {
    if chi >= t.n() {
        return Err(Error::CharacterOutOfRange { chi, n: t.n() });
    }
    Ok(Character::cyclic(chi))
}

/// `1 / index` of the kernel lattice of the syzygy representation.
///
/// The representation must be faithful and `chi` must occur in it; a
/// failure of either is reported as an internal invariant violation.
pub fn exact_signature(t: CyclicType, chi: u64) -> Result<BigRational> {
    let chi = cyclic_character(t, chi)?;
    let syz = syzygy_weights(t);
    if !syz.is_faithful() {
        return Err(Error::InvariantViolation(format!(
            "syzygy representation of {t} with weights {:?} is not faithful",
            syz.weights()
        )));
    }
    lattice_signature(&syz.to_diagonal(), &chi)
}

fn lattice_signature(rep: &DiagonalRepresentation, chi: &Character) -> Result<BigRational> {
    let lattice = kernel_lattice(rep)?;
    if coset_representative(rep, chi)?.is_none() {
        return Err(Error::InvariantViolation(format!(
            "character {chi} does not occur in a faithful representation"
        )));
    }
    let index = index_of_lattice(&lattice)?;
    Ok(BigRational::new(BigInt::from(1), BigInt::from(index)))
}

/// Exact partial sums of the ratio series at the given degree bounds.
///
/// Multiplicities are tabulated once up to `n_max` and accumulated, so each
/// degree is counted exactly once regardless of the grid.
pub fn ratio_series(t: CyclicType, chi: u64, n_max: u64, grid: &[u64]) -> Result<RatioSeries> {
    let target = exact_signature(t, chi)?;
    let rep = syzygy_weights(t).to_diagonal();
    series_for(&rep, &Character::cyclic(chi), n_max, grid, target)
}

fn series_for(
    rep: &DiagonalRepresentation,
    chi: &Character,
    n_max: u64,
    grid: &[u64],
    target: BigRational,
) -> Result<RatioSeries> {
    if n_max == 0 {
        return Err(Error::InvalidGrid("N_max must be at least 1".into()));
    }
    if let Some(bad) = grid.iter().find(|&&g| g > n_max) {
        return Err(Error::InvalidGrid(format!("grid point {bad} exceeds N_max = {n_max}")));
    }
    let mut wanted = grid.to_vec();
    wanted.sort_unstable();
    wanted.dedup();

    let table = MultiplicityTable::build(rep, n_max);
    let idx = rep.group().index_of(chi);
    let nu = rep.dim() as u64;

    let mut entries = Vec::with_capacity(wanted.len());
    let mut numerator = BigUint::zero();
    let mut denominator = BigUint::zero();
    let mut next = wanted.iter().peekable();
    for q in 0..=n_max {
        if next.peek().is_none() {
            break;
        }
        numerator += &table.degree(q)[idx];
        denominator += sym_dim(nu, q);
        if next.peek() == Some(&&q) {
            next.next();
            entries.push(SeriesEntry {
                degree_bound: q,
                ratio: BigRational::new(
                    BigInt::from(numerator.clone()),
                    BigInt::from(denominator.clone()),
                ),
                numerator: numerator.clone(),
                denominator: denominator.clone(),
            });
        }
    }
    Ok(RatioSeries { entries, target })
}

/// Exact value `1 / |G|` for a faithful representation together with the
/// empirical series on [`default_grid`].
pub fn general_signature(
    rep: &DiagonalRepresentation,
    chi: &Character,
    n_max: u64,
) -> Result<(BigRational, RatioSeries)> {
    if !rep.group().contains(chi) {
        return Err(Error::GroupMismatch {
            character: chi.components().to_vec(),
            moduli: rep.group().moduli().to_vec(),
        });
    }
    if let Some(g) = rep.kernel_element() {
        return Err(Error::NotFaithful {
            kernel_element: g.components().to_vec(),
        });
    }
    let value = lattice_signature(rep, chi)?;
    if value != BigRational::new(BigInt::from(1), BigInt::from(rep.group().order())) {
        return Err(Error::InvariantViolation(format!(
            "faithful representation has lattice signature {value} instead of 1/{}",
            rep.group().order()
        )));
    }
    let series = series_for(rep, chi, n_max, &default_grid(n_max), value.clone())?;
    Ok((value, series))
}

/// `1, 2, 5, 10, 20, 50, ...` up to and including `n_max`.
pub fn default_grid(n_max: u64) -> Vec<u64> {
    let mut grid = Vec::new();
    let mut decade = 1u64;
    'outer: loop {
        for step in [1, 2, 5] {
            match decade.checked_mul(step) {
                Some(g) if g < n_max => grid.push(g),
                _ => break 'outer,
            }
        }
        decade = match decade.checked_mul(10) {
            Some(d) => d,
            None => break,
        };
    }
    grid.push(n_max);
    grid
}

pub fn convergence_report(series: &RatioSeries) -> Result<ConvergenceReport> {
    let last = series
        .entries
        .last()
        .ok_or_else(|| Error::InvalidGrid("empty series".into()))?;
    let gap = |e: &SeriesEntry| (&e.ratio - &series.target).abs();
    let gaps: Vec<BigRational> = series.entries.iter().map(gap).collect();
    let scaled_gaps = series
        .entries
        .iter()
        .zip(&gaps)
        .map(|(e, g)| (e.degree_bound, g * BigRational::from_integer(BigInt::from(e.degree_bound))))
        .collect();
    let tail = &gaps[gaps.len() / 2..];
    Ok(ConvergenceReport {
        final_gap: gap(last),
        scaled_gaps,
        monotone_tail: tail.windows(2).all(|w| w[1] <= w[0]),
    })
}

/// The engineering bound `|r_N - 1/n| <= 2 nu n / N` used by the
/// convergence checks. The limit argument itself supplies no rate.
pub fn gap_tolerance(nu: u64, n: u64, degree_bound: u64) -> BigRational {
    BigRational::new(BigInt::from(2 * nu * n), BigInt::from(degree_bound))
}

impl RatioSeries {
    pub fn gap_at(&self, degree_bound: u64) -> Option<BigRational> {
        self.entries
            .iter()
            .find(|e| e.degree_bound == degree_bound)
            .map(|e| (&e.ratio - &self.target).abs())
    }
}
