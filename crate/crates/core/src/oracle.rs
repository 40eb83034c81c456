//! Slow, independent reference computations.
//!
//! None of these share code paths with the production routines they check;
//! they are brute-force enumerations meant for small inputs only.

use num_bigint::BigInt;

use crate::abelian_rep::{AbelianGroup, Character, DiagonalRepresentation};
use crate::cyclic_singularity::{CyclicType, MonomialExponent};
use crate::error::Result;
use crate::lattice_counting::visit_simplex;

/// Minimal invariant exponents in the box `[0, n]^2`, decreasing in `i`.
pub fn staircase_by_enumeration(t: CyclicType) -> Vec<(u64, u64)> {
    let n = t.n();
    let invariant: Vec<MonomialExponent> = (0..=n)
        .flat_map(|i| (0..=n).map(move |j| MonomialExponent::new(i, j)))
        .filter(|m| (m.i, m.j) != (0, 0) && (m.i + t.a() * m.j).is_multiple_of(n))
        .collect();
    let mut minimal: Vec<(u64, u64)> = invariant
        .iter()
        .filter(|m| !invariant.iter().any(|p| p != *m && p.i <= m.i && p.j <= m.j))
        .map(|m| (m.i, m.j))
        .collect();
    minimal.sort_by_key(|x| std::cmp::Reverse(x.0));
    minimal
}

/// Weights of the consecutive-corner syzygies, from an explicit staircase.
pub fn syzygy_weights_from(t: CyclicType, staircase: &[(u64, u64)]) -> Vec<u64> {
    staircase
        .windows(2)
        .map(|p| (p[0].0.max(p[1].0) + t.a() * p[0].1.max(p[1].1)) % t.n())
        .collect()
}

/// Counts degree-`q` monomials of weight `chi` one by one.
pub fn multiplicity_by_enumeration(rep: &DiagonalRepresentation, chi: &Character, q: u64) -> u64 {
    let moduli = rep.group().moduli();
    let mut count = 0u64;
    let mut point = vec![0u64; rep.dim()];
    visit_simplex(&mut point, 0, q, &mut |x| {
        if x.iter().sum::<u64>() != q {
            return;
        }
        let hit = moduli.iter().enumerate().all(|(j, &m)| {
            let s: u64 = x
                .iter()
                .zip(rep.weights())
                .map(|(&e, w)| e * w.components()[j])
                .sum();
            s % m == chi.components()[j]
        });
        if hit {
            count += 1;
        }
    });
    count
}

/// Histogram `[q][character index]` of all monomials of degree `<= q_max`.
pub fn multiplicity_histogram_by_enumeration(rep: &DiagonalRepresentation, q_max: u64) -> Vec<Vec<u64>> {
    let group = rep.group();
    let mut hist = vec![vec![0u64; group.order() as usize]; q_max as usize + 1];
    let mut point = vec![0u64; rep.dim()];
    visit_simplex(&mut point, 0, q_max, &mut |x| {
        let degree = x.iter().sum::<u64>() as usize;
        hist[degree][group.index_of(&rep.monomial_weight(x))] += 1;
    });
    hist
}

/// `|Hom(H, Z/n)|` for the subgroup `H` of `(Z/n)^k` generated by
/// `generators`, by trying every assignment of generator images and keeping
/// the ones that extend to a well-defined homomorphism.
pub fn count_homomorphisms(generators: &[Character], n: u64, k: usize) -> Result<u64> {
    let group = AbelianGroup::new(vec![n; k])?;
    let members: Vec<usize> = group
        .generated_subgroup(generators)?
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i))
        .collect();
    let gens = generators.len() as u32;
    let assignments = n.pow(gens);
    let mut count = 0;
    for code in 0..assignments {
        let images: Vec<u64> = (0..gens).map(|g| code / n.pow(g) % n).collect();
        if extends_to_homomorphism(&group, generators, &images, n, &members) {
            count += 1;
        }
    }
    Ok(count)
}

fn extends_to_homomorphism(
    group: &AbelianGroup,
    generators: &[Character],
    images: &[u64],
    n: u64,
    members: &[usize],
) -> bool {
    // Propagate values along generator steps; a conflict means some relation
    // among the generators is violated by the chosen images.
    let mut value: Vec<Option<u64>> = vec![None; group.order() as usize];
    value[0] = Some(0);
    let mut stack = vec![0usize];
    while let Some(x) = stack.pop() {
        let vx = value[x].expect("visited");
        let ex = group.element(x);
        for (g, &img) in generators.iter().zip(images) {
            let y = group.index_of(&group.add(&ex, g));
            let vy = (vx + img) % n;
            match value[y] {
                None => {
                    value[y] = Some(vy);
                    stack.push(y);
                }
                Some(existing) if existing != vy => return false,
                Some(_) => {}
            }
        }
    }
    members.iter().all(|&m| value[m].is_some())
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
    match m.len() {
        0 => BigInt::from(1),
        1 => m[0][0].clone(),
        size => (0..size)
            .map(|j| {
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * cofactor_det(&minor);
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum(),
    }
}
