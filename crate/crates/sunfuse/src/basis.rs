//! Fusion bases: elementary couplings, their affine closure under the
//! outer automorphism, the generator matrix V, and the dual inequality
//! system whose solution counts reproduce fusion coefficients.
//!
//! The construction runs in four steps:
//! 1. the Hilbert basis of the LR system gives the elementary *tensor*
//!    couplings;
//! 2. each is extended to its threshold level and closed under the
//!    simultaneous outer automorphism `(λ̂, μ̂, ν̂) ↦ (aⁿλ̂, aᵐμ̂, aⁿ⁺ᵐν̂)`,
//!    re-expanded into tableaux, yielding the elementary *fusion*
//!    couplings (plus the scalar coupling carried by the level alone);
//! 3. the couplings form the columns of a matrix V;
//! 4. the Hilbert basis of `{u : uᵀV ≥ 0}` gives inequality rows, and the
//!    nonnegative solutions of those rows at level k count fusion
//!    coefficients.

use std::collections::BTreeSet;

use crate::affine::{kac_walton, threshold_levels};
use crate::cones::{decompose, hilbert_dual, hilbert_nonneg, SolutionBasis};
use crate::error::{Error, Result};
use crate::tableaux::{
    enumerate_lr, fill_slots, lr_system, var_names, weights_of, InequalitySystem, LRTableau,
};
use crate::weights::{affine_extend, AffineWeight, FiniteWeight};

fn check_rank_supported(rank_n: usize) -> Result<()> {
    if !(2..=4).contains(&rank_n) {
        return Err(Error::Domain(format!(
            "basis construction supports su(N) for 2 <= N <= 4, got N = {rank_n}"
        )));
    }
    Ok(())
}

/// One elementary coupling: a coupling that is not the stretched product
/// of two nonempty couplings. Tensor couplings live in the coordinates
/// `(λ, n)`; fusion couplings prepend the level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementaryCoupling {
    name: String,
    vector: Vec<i64>,
    lambda: FiniteWeight,
    mu: FiniteWeight,
    nu: FiniteWeight,
    threshold: i64,
    fusion: bool,
}

impl ElementaryCoupling {
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Coordinates `(λ, n)`, or `(k, λ, n)` for fusion couplings.
    pub fn vector(&self) -> &[i64] {
        &self.vector
    }

    pub fn lambda(&self) -> &FiniteWeight {
        &self.lambda
    }

    pub fn mu(&self) -> &FiniteWeight {
        &self.mu
    }

    pub fn nu(&self) -> &FiniteWeight {
        &self.nu
    }

    /// The threshold level k₀ of the coupling.
    pub fn threshold(&self) -> i64 {
        self.threshold
    }

    pub fn is_fusion(&self) -> bool {
        self.fusion
    }

    /// The scalar coupling carries only level: λ = μ = ν = 0.
    pub fn is_scalar(&self) -> bool {
        self.lambda.is_zero() && self.mu.is_zero() && self.nu.is_zero()
    }

    /// The triple affinely extended at the threshold level.
    pub fn affine_triple(&self) -> (AffineWeight, AffineWeight, AffineWeight) {
        (
            affine_extend(&self.lambda, self.threshold),
            affine_extend(&self.mu, self.threshold),
            affine_extend(&self.nu, self.threshold),
        )
    }

    /// The underlying tableau (fills of the coupling's λ).
    pub fn tableau(&self) -> Result<LRTableau> {
        let n = self.lambda.rank_n();
        let skip = if self.fusion { n } else { n - 1 };
        LRTableau::new(self.lambda.clone(), self.vector[skip..].to_vec())
    }

    /// JSON form: name, threshold, the triple (affine at the threshold for
    /// fusion couplings, finite otherwise), and the coordinate vector.
    pub fn to_json(&self) -> serde_json::Value {
        let triple = if self.fusion {
            let (l, m, v) = self.affine_triple();
            serde_json::json!({
                "lambda": l.labels(),
                "mu": m.labels(),
                "nu": v.labels(),
            })
        } else {
            serde_json::json!({
                "lambda": self.lambda.labels(),
                "mu": self.mu.labels(),
                "nu": self.nu.labels(),
            })
        };
        serde_json::json!({
            "name": self.name,
            "threshold": self.threshold,
            "triple": triple,
            "vector": self.vector,
        })
    }
}

fn coupling_from_vector(name: String, fusion: bool, vector: Vec<i64>, rank_n: usize) -> Result<ElementaryCoupling> {
    let skip = if fusion { 1 } else { 0 };
    let lambda = FiniteWeight::new(vector[skip..skip + rank_n - 1].to_vec())?;
    let fills = vector[skip + rank_n - 1..].to_vec();
    let tableau = LRTableau::new(lambda.clone(), fills)?;
    let (_, mu, nu) = weights_of(&tableau);
    let threshold = if fusion {
        vector[0]
    } else {
        *threshold_levels(&lambda, &mu, &nu)?.first().ok_or_else(|| {
            Error::Internal(format!("coupling {vector:?} has no threshold level"))
        })?
    };
    Ok(ElementaryCoupling { name, vector, lambda, mu, nu, threshold, fusion })
}

/// The elementary tensor couplings of su(N): the Hilbert basis of the LR
/// system, in descending lexicographic order, named E1, E2, ….
pub fn elementary_tensor_couplings(rank_n: usize) -> Result<Vec<ElementaryCoupling>> {
    check_rank_supported(rank_n)?;
    let basis = hilbert_nonneg(&lr_system(rank_n)?)?;
    basis
        .generators()
        .iter()
        .enumerate()
        .map(|(i, g)| coupling_from_vector(format!("E{}", i + 1), false, g.clone(), rank_n))
        .collect()
}

/// Rewrites a tensor coupling in fusion coordinates by prepending its
/// threshold level (the name gains a circumflex: E3 → Ê3).
pub fn affine_extend_elementary(coupling: &ElementaryCoupling) -> Result<ElementaryCoupling> {
    if coupling.fusion {
        return Err(Error::Domain(format!(
            "{} is already a fusion coupling",
            coupling.name
        )));
    }
    let mut vector = Vec::with_capacity(coupling.vector.len() + 1);
    vector.push(coupling.threshold);
    vector.extend_from_slice(&coupling.vector);
    let name = format!("Ê{}", coupling.name.trim_start_matches('E'));
    Ok(ElementaryCoupling {
        name,
        vector,
        lambda: coupling.lambda.clone(),
        mu: coupling.mu.clone(),
        nu: coupling.nu.clone(),
        threshold: coupling.threshold,
        fusion: true,
    })
}

/// True if `x` is a nonnegative integer combination of `others` (each
/// nonzero and nonnegative).
fn combo_of(x: &[i64], others: &[&Vec<i64>]) -> bool {
    fn rec(r: &[i64], idx: usize, others: &[&Vec<i64>]) -> bool {
        if r.iter().all(|&v| v == 0) {
            return true;
        }
        if idx == others.len() {
            return false;
        }
        if rec(r, idx + 1, others) {
            return true;
        }
        let o = others[idx];
        let mut rr = r.to_vec();
        loop {
            for (a, b) in rr.iter_mut().zip(o) {
                *a -= b;
            }
            if rr.iter().any(|&v| v < 0) {
                return false;
            }
            if rec(&rr, idx + 1, others) {
                return true;
            }
        }
    }
    rec(x, 0, others)
}

/// The elementary fusion couplings of su(N): the scalar coupling plus the
/// outer-automorphism closure of the affinely extended tensor couplings,
/// reduced to the vectors that are not sums of others. Canonical order:
/// the scalar coupling Ê0 first, then descending lexicographic (Ê1, …).
pub fn fusion_elementaries(rank_n: usize) -> Result<Vec<ElementaryCoupling>> {
    check_rank_supported(rank_n)?;
    let tensor = elementary_tensor_couplings(rank_n)?;
    let nv = (rank_n - 1) + fill_slots(rank_n).len();
    let mut pool: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut scalar = vec![0i64; nv + 1];
    scalar[0] = 1;
    pool.insert(scalar.clone());
    for coupling in &tensor {
        let (lh, mh, nh) = coupling.affine_triple();
        for a in 0..rank_n {
            for b in 0..rank_n {
                let lf = lh.outer_auto(a as i64).finite_part();
                let mf = mh.outer_auto(b as i64).finite_part();
                let nf = nh.outer_auto((a + b) as i64).finite_part();
                if lf.is_zero() && mf.is_zero() && nf.is_zero() {
                    continue; // the scalar coupling is already seeded
                }
                let thresholds = threshold_levels(&lf, &mf, &nf)?;
                let Some(&t) = thresholds.first() else {
                    return Err(Error::Inconsistency(format!(
                        "rotated coupling {lf} ⊗ {mf} ⊃ {nf} has no threshold level"
                    )));
                };
                for tab in enumerate_lr(&lf, &mf)? {
                    let (_, _, nu3) = weights_of(&tab);
                    if nu3 == nf {
                        pool.insert(tab.coupling_vector(Some(t)));
                    }
                }
            }
        }
    }
    // Keep only elementary vectors: repeatedly drop the most complex one
    // that is a combination of the others.
    let mut cand: Vec<Vec<i64>> = pool.into_iter().collect();
    loop {
        let mut order = cand.clone();
        order.sort_by(|x, y| {
            (y.iter().sum::<i64>(), y).cmp(&(x.iter().sum::<i64>(), x))
        });
        let mut removed = false;
        for x in &order {
            let others: Vec<&Vec<i64>> = cand.iter().filter(|v| *v != x).collect();
            if combo_of(x, &others) {
                cand.retain(|v| v != x);
                removed = true;
                break;
            }
        }
        if !removed {
            break;
        }
    }
    // Canonical order: scalar coupling first, then descending lex.
    let mut scalars: Vec<Vec<i64>> = Vec::new();
    let mut rest: Vec<Vec<i64>> = Vec::new();
    for v in cand {
        if v[1..].iter().all(|&x| x == 0) {
            scalars.push(v);
        } else {
            rest.push(v);
        }
    }
    rest.sort_by(|x, y| y.cmp(x));
    debug_assert_eq!(scalars, vec![scalar]);
    let mut out = Vec::with_capacity(scalars.len() + rest.len());
    for (i, v) in scalars.into_iter().chain(rest).enumerate() {
        out.push(coupling_from_vector(format!("Ê{i}"), true, v, rank_n)?);
    }
    Ok(out)
}

/// The generator matrix V: one row per coordinate, one column per
/// coupling, in the couplings' order.
pub fn build_v(couplings: &[ElementaryCoupling]) -> Result<Vec<Vec<i64>>> {
    let Some(first) = couplings.first() else {
        return Err(Error::Domain("no couplings given".into()));
    };
    let m = first.vector.len();
    if couplings.iter().any(|c| c.vector.len() != m) {
        return Err(Error::Domain("couplings have mixed coordinate lengths".into()));
    }
    Ok((0..m)
        .map(|i| couplings.iter().map(|c| c.vector[i]).collect())
        .collect())
}

/// One verification mismatch: the basis counted `count` solutions for the
/// cell but the fusion coefficient is `expected`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub lambda: FiniteWeight,
    pub mu: FiniteWeight,
    pub nu: FiniteWeight,
    pub k: i64,
    pub count: i64,
    pub expected: i64,
}

/// Result of checking a fusion basis against fusion coefficients on a
/// grid of weights and levels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub max_label: i64,
    pub max_level: i64,
    pub cells: u64,
    pub mismatches: Vec<Mismatch>,
}

/// A fusion basis for su(N): the inequality system over `(k, λ, n)` whose
/// nonnegative solution counts are fusion coefficients, together with the
/// elementary couplings and matrix V it was dualized from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionBasis {
    rank_n: usize,
    system: InequalitySystem,
    elementaries: Vec<ElementaryCoupling>,
    v: Vec<Vec<i64>>,
    verified: Option<VerifyReport>,
}

impl FusionBasis {
    pub fn rank_n(&self) -> usize {
        self.rank_n
    }

    pub fn system(&self) -> &InequalitySystem {
        &self.system
    }

    pub fn elementaries(&self) -> &[ElementaryCoupling] {
        &self.elementaries
    }

    pub fn v_matrix(&self) -> &[Vec<i64>] {
        &self.v
    }

    pub fn verified(&self) -> Option<&VerifyReport> {
        self.verified.as_ref()
    }

    pub fn record_verification(&mut self, report: VerifyReport) {
        self.verified = Some(report);
    }

    /// JSON form: the inequality system plus a provenance object holding
    /// the elementary couplings, V, and the verified bounds (null until a
    /// verification is recorded).
    pub fn to_json(&self) -> serde_json::Value {
        let elems: Vec<serde_json::Value> =
            self.elementaries.iter().map(|e| e.to_json()).collect();
        let verified = match &self.verified {
            None => serde_json::Value::Null,
            Some(r) => serde_json::json!({
                "max_label": r.max_label,
                "max_level": r.max_level,
                "cells": r.cells,
                "mismatches": r.mismatches.len(),
                "mismatch_list": r.mismatches.iter().map(|m| serde_json::json!({
                    "lambda": m.lambda.labels(),
                    "mu": m.mu.labels(),
                    "nu": m.nu.labels(),
                    "k": m.k,
                    "count": m.count,
                    "expected": m.expected,
                })).collect::<Vec<_>>(),
            }),
        };
        serde_json::json!({
            "vars": self.system.vars(),
            "rows": self.system.rows(),
            "provenance": {
                "elementaries": elems,
                "V": self.v,
                "verified_bounds": verified,
            },
        })
    }
}

/// Runs the four-step construction for su(N), N ∈ {2, 3, 4}.
pub fn construct_fusion_basis(rank_n: usize) -> Result<FusionBasis> {
    check_rank_supported(rank_n)?;
    let elementaries = fusion_elementaries(rank_n)?;
    let v = build_v(&elementaries)?;
    let rows = hilbert_dual(&v)?;
    let system = InequalitySystem::new(var_names(rank_n, true), rows)?;
    for e in &elementaries {
        debug_assert!(system.satisfies(e.vector()), "{} violates its own system", e.name());
    }
    Ok(FusionBasis { rank_n, system, elementaries, v, verified: None })
}

/// All weights with labels in `[0, max_label]`, ascending lex.
fn weight_grid(rank_n: usize, max_label: i64) -> Vec<Vec<i64>> {
    let digits = rank_n - 1;
    let base = (max_label + 1) as usize;
    let total = base.pow(digits as u32);
    (0..total)
        .map(|mut t| {
            let mut w = vec![0i64; digits];
            for d in (0..digits).rev() {
                w[d] = (t % base) as i64;
                t /= base;
            }
            w
        })
        .collect()
}

/// All fill vectors (slot order) whose per-letter totals match `budgets`,
/// with no LR filtering.
fn raw_fill_combos(rank_n: usize, budgets: &[i64]) -> Vec<Vec<i64>> {
    let slots = fill_slots(rank_n);
    let mut out = Vec::new();
    let mut cur = vec![0i64; slots.len()];
    let mut rem = budgets.to_vec();
    fn rec(
        idx: usize,
        slots: &[(usize, usize)],
        rank_n: usize,
        cur: &mut Vec<i64>,
        rem: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if idx == slots.len() {
            out.push(cur.clone());
            return;
        }
        let (i, j) = slots[idx];
        let r = rem[i - 1];
        let lo = if j == rank_n { r } else { 0 };
        for v in lo..=r {
            cur[idx] = v;
            rem[i - 1] -= v;
            rec(idx + 1, slots, rank_n, cur, rem, out);
            rem[i - 1] += v;
            cur[idx] = 0;
        }
    }
    rec(0, &slots, rank_n, &mut cur, &mut rem, &mut out);
    out
}

/// Checks the basis against fusion coefficients for every λ, μ, ν with
/// labels in `[0, max_label]` and every level in `[0, max_level]`: the
/// number of candidate vectors `(k, λ, n)` with μ's letter counts, ν's
/// resulting shape, and all basis inequalities satisfied must equal the
/// fusion coefficient from the reflection algorithm.
pub fn verify_basis(basis: &FusionBasis, max_label: i64, max_level: i64) -> Result<VerifyReport> {
    if max_label < 0 || max_level < 0 {
        return Err(Error::Domain("verification bounds must be nonnegative".into()));
    }
    let n = basis.rank_n;
    let weights = weight_grid(n, max_label);
    let mut cells: u64 = 0;
    let mut mismatches = Vec::new();
    for lam in &weights {
        let lam_w = FiniteWeight::new(lam.clone())?;
        let lam_sum: i64 = lam.iter().sum();
        let shape_l: Vec<i64> = (0..n).map(|j| if j < n - 1 { lam[j..].iter().sum() } else { 0 }).collect();
        for mu in &weights {
            let mu_w = FiniteWeight::new(mu.clone())?;
            let mu_sum: i64 = mu.iter().sum();
            let budgets: Vec<i64> = (0..n - 1).map(|i| mu[i..].iter().sum()).collect();
            // candidate (ν, λ+fills) pairs, ν from the filled shape
            let slots = fill_slots(n);
            let cands: Vec<(Vec<i64>, Vec<i64>)> = raw_fill_combos(n, &budgets)
                .into_iter()
                .map(|fills| {
                    let shape: Vec<i64> = (1..=n)
                        .map(|j| {
                            shape_l[j - 1]
                                + slots
                                    .iter()
                                    .zip(&fills)
                                    .filter(|((_, sj), _)| *sj == j)
                                    .map(|(_, f)| *f)
                                    .sum::<i64>()
                        })
                        .collect();
                    let nu: Vec<i64> = (0..n - 1).map(|j| shape[j] - shape[j + 1]).collect();
                    let mut tail = lam.clone();
                    tail.extend(fills);
                    (nu, tail)
                })
                .collect();
            for k in 0..=max_level {
                let oracle = if lam_sum <= k && mu_sum <= k {
                    kac_walton(k, &affine_extend(&lam_w, k), &affine_extend(&mu_w, k))?
                        .coefficients
                } else {
                    Default::default()
                };
                let mut counts: std::collections::HashMap<&[i64], i64> = Default::default();
                for (nu, tail) in &cands {
                    let mut x = Vec::with_capacity(1 + tail.len());
                    x.push(k);
                    x.extend_from_slice(tail);
                    if basis.system.satisfies(&x) {
                        *counts.entry(nu.as_slice()).or_insert(0) += 1;
                    }
                }
                for nu in &weights {
                    cells += 1;
                    let found = counts.get(nu.as_slice()).copied().unwrap_or(0);
                    let nu_w = FiniteWeight::new(nu.clone())?;
                    let expected = oracle
                        .get(&affine_extend(&nu_w, k))
                        .copied()
                        .unwrap_or(0);
                    if found != expected {
                        mismatches.push(Mismatch {
                            lambda: lam_w.clone(),
                            mu: mu_w.clone(),
                            nu: nu_w,
                            k,
                            count: found,
                            expected,
                        });
                    }
                }
            }
        }
    }
    Ok(VerifyReport { max_label, max_level, cells, mismatches })
}

/// Decomposes the coupling `(k, tableau)` over the basis's elementary
/// couplings. Returns every coefficient vector (ascending lex, in the
/// couplings' order) and the threshold level k₀ of the coupling: the
/// smallest total threshold carried by the non-scalar couplings across
/// all decompositions.
pub fn decompose_fusion(
    tableau: &LRTableau,
    level: i64,
    basis: &FusionBasis,
) -> Result<(Vec<Vec<i64>>, i64)> {
    if tableau.rank_n() != basis.rank_n {
        return Err(Error::RankMismatch(format!(
            "su({}) tableau against an su({}) basis",
            tableau.rank_n(),
            basis.rank_n
        )));
    }
    let x = tableau.coupling_vector(Some(level));
    let gens: Vec<Vec<i64>> = basis.elementaries.iter().map(|e| e.vector.clone()).collect();
    let sb = SolutionBasis::from_parts(basis.system.clone(), gens);
    let decs = decompose(&x, &sb)?;
    let k0 = decs
        .iter()
        .map(|a| {
            a.iter()
                .zip(&basis.elementaries)
                .filter(|(_, e)| !e.is_scalar())
                .map(|(c, e)| c * e.vector[0])
                .sum::<i64>()
        })
        .min()
        .expect("decompose returns at least one decomposition");
    Ok((decs, k0))
}
