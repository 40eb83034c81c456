//! Cross-checks every pipeline stage against its oracle over all
//! singularity types up to a given order.

use num_bigint::BigUint;
use num_bigint::BigInt;
use num_rational::BigRational;

use crate::abelian_rep::{multiplicity_oracle, subgroup_order, sym_dim, MultiplicityTable};
use crate::cyclic_singularity::{minimal_generators, CyclicType};
use crate::error::Result;
use crate::lattice_counting::{
    coset_representative, count_coset_points, count_coset_points_geometric, index_of_lattice, kernel_lattice,
};
use crate::oracle::{multiplicity_histogram_by_enumeration, staircase_by_enumeration, syzygy_weights_from};
use crate::signature::exact_signature;
use crate::syzygy_rep::syzygy_weights;

/// Degrees checked against brute-force monomial enumeration.
const ENUMERATION_DEGREE: u64 = 6;
/// Degrees checked against the group-algebra series.
const SERIES_DEGREE: u64 = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    /// Descriptions of the first few failing cases.
    pub failures: Vec<String>,
    pub failure_count: usize,
}

impl CheckOutcome {
    fn new(name: &'static str) -> Self {
        CheckOutcome {
            name,
            cases: 0,
            failures: Vec::new(),
            failure_count: 0,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < 5 {
                self.failures.push(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub n_max: u64,
    pub checks: Vec<CheckOutcome>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }
}

/// Runs the full oracle grid for every valid `(n, a)` with `2 <= n <= n_max`.
pub fn run_verification(n_max: u64) -> Result<VerificationReport> {
    let mut staircase = CheckOutcome::new("staircase_vs_box_enumeration");
    let mut weights = CheckOutcome::new("syzygy_weights_vs_oracle_staircase");
    let mut faithful = CheckOutcome::new("faithful_with_first_weight_a");
    let mut index = CheckOutcome::new("lattice_index_eq_subgroup_order_eq_n");
    let mut signature = CheckOutcome::new("exact_signature_eq_one_over_n");
    let mut dp_enum = CheckOutcome::new("multiplicity_dp_vs_enumeration");
    let mut dp_series = CheckOutcome::new("multiplicity_dp_vs_series_oracle");
    let mut partition = CheckOutcome::new("partition_identity");
    let mut geometric = CheckOutcome::new("coset_count_dp_vs_geometric");

    for t in CyclicType::all_with_order(2..=n_max) {
        let n = t.n();
        let oracle_stairs = staircase_by_enumeration(t);
        staircase.record(minimal_generators(t).as_pairs() == oracle_stairs, || format!("{t}"));

        let syz = syzygy_weights(t);
        weights.record(syz.weights() == syzygy_weights_from(t, &oracle_stairs), || format!("{t}"));
        faithful.record(syz.is_faithful() && syz.weights()[0] == t.a(), || {
            format!("{t}: weights {:?}", syz.weights())
        });

        let rep = syz.to_diagonal();
        let lattice = kernel_lattice(&rep)?;
        let det = index_of_lattice(&lattice)?;
        let closure = subgroup_order(rep.weights(), rep.group())?;
        index.record(det == BigUint::from(closure) && closure == n, || {
            format!("{t}: det {det}, closure {closure}")
        });

        let expected = BigRational::new(BigInt::from(1), BigInt::from(n));
        for chi in 0..n {
            let value = exact_signature(t, chi)?;
            signature.record(value == expected, || format!("{t} chi={chi}: {value}"));
        }

        let table = MultiplicityTable::build(&rep, SERIES_DEGREE);
        let hist = multiplicity_histogram_by_enumeration(&rep, ENUMERATION_DEGREE);
        for q in 0..=SERIES_DEGREE {
            let row = table.degree(q);
            let total: BigUint = row.iter().sum();
            partition.record(total == sym_dim(rep.dim() as u64, q), || format!("{t} q={q}"));
            for (idx, chi) in rep.group().elements().enumerate() {
                let series = multiplicity_oracle(&rep, &chi, q)?;
                dp_series.record(row[idx] == series, || format!("{t} chi={chi} q={q}"));
                if q <= ENUMERATION_DEGREE {
                    let count = BigUint::from(hist[q as usize][idx]);
                    dp_enum.record(row[idx] == count, || format!("{t} chi={chi} q={q}"));
                }
            }
        }

        let bound = if rep.dim() <= 4 { 10 } else { 4 };
        for chi in rep.group().elements() {
            let Some(a0) = coset_representative(&rep, &chi)? else {
                geometric.record(false, || format!("{t} chi={chi}: no representative"));
                continue;
            };
            let dp = count_coset_points(&lattice, &a0, bound)?;
            let walk = count_coset_points_geometric(&lattice, &a0, bound)?;
            geometric.record(dp == walk, || format!("{t} chi={chi}: {dp} vs {walk}"));
        }
    }

    Ok(VerificationReport {
        n_max,
        checks: vec![
            staircase, weights, faithful, index, signature, dp_enum, dp_series, partition, geometric,
        ],
    })
}
