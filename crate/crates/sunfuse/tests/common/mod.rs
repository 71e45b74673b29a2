//! Shared test support: independent oracles and reusable property suites.
//!
//! The oracles here deliberately avoid the code paths they check. Tensor
//! products are recomputed from semistandard tableaux via the Klimyk
//! formula (no LR tableaux involved), and Hilbert bases are recomputed by
//! brute-force enumeration over a box (no completion procedure involved).
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use sunfuse::affine::{fusion_coeff, kac_walton, threshold_levels, threshold_su2_tableau};
use sunfuse::basis::construct_fusion_basis;
use sunfuse::cones::hilbert_nonneg;
use sunfuse::tableaux::{enumerate_lr, lr_system, tensor_decompose, InequalitySystem};
use sunfuse::weights::{affine_extend, FiniteWeight};

pub fn dot(r: &[i64], x: &[i64]) -> i64 {
    r.iter().zip(x).map(|(a, b)| a * b).sum()
}

fn le(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

// ---------------------------------------------------------------------
// Klimyk oracle: tensor multiplicities from weight multiplicities.
// ---------------------------------------------------------------------

/// Weight multiplicities of the irrep `mu`, by enumerating semistandard
/// tableaux of its Young shape with entries 1..=N.
fn ssyt_weights(rank_n: usize, mu: &[i64]) -> HashMap<Vec<i64>, i64> {
    let shape: Vec<usize> = (0..rank_n - 1)
        .map(|j| mu[j..].iter().sum::<i64>() as usize)
        .filter(|&l| l > 0)
        .collect();
    let mut out: HashMap<Vec<i64>, i64> = HashMap::new();
    if shape.is_empty() {
        out.insert(vec![0; rank_n - 1], 1);
        return out;
    }
    let mut t: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();

    fn fill(
        r: usize,
        c: usize,
        shape: &[usize],
        rank_n: usize,
        t: &mut [Vec<usize>],
        out: &mut HashMap<Vec<i64>, i64>,
    ) {
        if r == shape.len() {
            let mut cnt = vec![0i64; rank_n + 2];
            for row in t.iter() {
                for &e in row {
                    cnt[e] += 1;
                }
            }
            let w: Vec<i64> = (1..rank_n).map(|i| cnt[i] - cnt[i + 1]).collect();
            *out.entry(w).or_insert(0) += 1;
            return;
        }
        if c == shape[r] {
            fill(r + 1, 0, shape, rank_n, t, out);
            return;
        }
        // Rows weakly increase left to right; columns strictly increase
        // top to bottom.
        let left = if c > 0 { t[r][c - 1] } else { 1 };
        let above = if r > 0 && c < shape[r - 1] { t[r - 1][c] + 1 } else { 1 };
        let lo = left.max(above);
        for e in lo..=rank_n {
            t[r][c] = e;
            fill(r, c + 1, shape, rank_n, t, out);
        }
        t[r][c] = 0;
    }

    fill(0, 0, &shape, rank_n, &mut t, &mut out);
    out
}

/// ρ-shifted straightening under the finite Weyl group: returns the
/// dominant weight and sign, or `None` when the shifted weight lies on a
/// wall.
fn dominant_straighten(rank_n: usize, xi: &[i64]) -> Option<(Vec<i64>, i64)> {
    let mut x: Vec<i64> = (0..rank_n - 1)
        .map(|j| xi[j..].iter().sum::<i64>() + (rank_n - 1 - j) as i64)
        .collect();
    x.push(0);
    for a in 0..x.len() {
        for b in a + 1..x.len() {
            if x[a] == x[b] {
                return None;
            }
        }
    }
    // Bubble sort descending; each swap is one reflection.
    let mut sign = 1i64;
    let m = x.len();
    for a in 0..m {
        for b in 0..m - 1 - a {
            if x[b] < x[b + 1] {
                x.swap(b, b + 1);
                sign = -sign;
            }
        }
    }
    let nu: Vec<i64> = (0..rank_n - 1).map(|j| x[j] - x[j + 1] - 1).collect();
    Some((nu, sign))
}

/// Independent tensor-product oracle: λ ⊗ μ by adding every weight of μ to
/// λ and straightening. Shares nothing with the LR-tableau implementation.
pub fn klimyk_tensor(rank_n: usize, lam: &[i64], mu: &[i64]) -> BTreeMap<Vec<i64>, i64> {
    let mut out: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (m, mult) in ssyt_weights(rank_n, mu) {
        let xi: Vec<i64> = lam.iter().zip(&m).map(|(l, w)| l + w).collect();
        if let Some((nu, sign)) = dominant_straighten(rank_n, &xi) {
            *out.entry(nu).or_insert(0) += mult * sign;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

// ---------------------------------------------------------------------
// Brute-force Hilbert oracles over a box.
// ---------------------------------------------------------------------

/// Visits every point of {0..=bound}^nvars exactly once (odometer order)
/// without materializing the box.
pub fn for_each_box_point(nvars: usize, bound: i64, mut f: impl FnMut(&[i64])) {
    let mut x = vec![0i64; nvars];
    loop {
        f(&x);
        let mut i = nvars;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if x[i] < bound {
                x[i] += 1;
                break;
            }
            x[i] = 0;
        }
    }
}

/// All points of {0..=bound}^nvars, odometer order.
pub fn box_points(nvars: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::with_capacity(((bound + 1) as usize).pow(nvars as u32));
    for_each_box_point(nvars, bound, |x| out.push(x.to_vec()));
    out
}

/// Pair-order-minimal nonzero solutions of `rows · x ≥ 0` inside the box,
/// by exhaustive enumeration. A solution is reducible exactly when some
/// other solution is ≤ it both coordinatewise and in all row values — and
/// any such witness lies inside the box too, so the box is self-contained.
pub fn brute_hilbert_box(rows: &[Vec<i64>], nvars: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut sols: Vec<Vec<i64>> = Vec::new();
    for_each_box_point(nvars, bound, |x| {
        if x.iter().any(|&c| c != 0) && rows.iter().all(|r| dot(r, x) >= 0) {
            sols.push(x.to_vec());
        }
    });
    let vals: Vec<Vec<i64>> = sols
        .iter()
        .map(|x| rows.iter().map(|r| dot(r, x)).collect())
        .collect();
    let mut out = Vec::new();
    for (i, x) in sols.iter().enumerate() {
        let reducible = sols
            .iter()
            .enumerate()
            .any(|(j, y)| j != i && le(y, x) && le(&vals[j], &vals[i]));
        if !reducible {
            out.push(x.clone());
        }
    }
    out.sort();
    out
}

/// All solutions of the system inside the box, as a set.
pub fn box_solutions(system: &InequalitySystem, bound: i64) -> BTreeSet<Vec<i64>> {
    let mut out = BTreeSet::new();
    for_each_box_point(system.num_vars(), bound, |x| {
        if system.satisfies(x) {
            out.insert(x.to_vec());
        }
    });
    out
}

/// Every nonnegative-integer combination of `gens` whose coordinates all
/// stay within the box, grown breadth-first from the origin.
pub fn monoid_in_box(gens: &[Vec<i64>], nvars: usize, bound: i64) -> BTreeSet<Vec<i64>> {
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut stack = vec![vec![0i64; nvars]];
    seen.insert(stack[0].clone());
    while let Some(x) = stack.pop() {
        for g in gens {
            let y: Vec<i64> = x.iter().zip(g).map(|(a, b)| a + b).collect();
            if y.iter().any(|&c| c > bound) {
                continue;
            }
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen
}

/// All weight-label vectors for su(N) with labels in 0..=max_label.
pub fn weight_grid(rank_n: usize, max_label: i64) -> Vec<Vec<i64>> {
    box_points(rank_n - 1, max_label)
}

// ---------------------------------------------------------------------
// Property suites, parameterized by bounds so the acceptance gate and the
// property tests can share them.
// ---------------------------------------------------------------------

/// Fusion coefficients grow monotonically with the level, never exceed the
/// tensor multiplicity, and reach it once k ≥ |λ| + |μ|.
pub fn suite_fusion_monotone_stabilize(rank_n: usize, max_label: i64, max_k: i64) {
    let grid = weight_grid(rank_n, max_label);
    for lam_labels in &grid {
        let lam = FiniteWeight::new(lam_labels.clone()).unwrap();
        for mu_labels in &grid {
            let mu = FiniteWeight::new(mu_labels.clone()).unwrap();
            let tensor = tensor_decompose(&lam, &mu).unwrap();
            let kmin = lam.label_sum().max(mu.label_sum());
            let kstable = lam.label_sum() + mu.label_sum();
            let mut prev: BTreeMap<FiniteWeight, i64> = BTreeMap::new();
            for k in kmin..=max_k.min(kstable) {
                let out = kac_walton(k, &affine_extend(&lam, k), &affine_extend(&mu, k))
                    .unwrap()
                    .coefficients;
                let cur: BTreeMap<FiniteWeight, i64> =
                    out.iter().map(|(w, &c)| (w.finite_part(), c)).collect();
                for (nu, &c) in &cur {
                    let cap = tensor.get(nu).copied().unwrap_or(0);
                    assert!(
                        c <= cap,
                        "fusion {lam} x {mu} > {nu} at k={k}: coefficient {c} exceeds tensor multiplicity {cap}"
                    );
                    let p = prev.get(nu).copied().unwrap_or(0);
                    assert!(
                        c >= p,
                        "fusion {lam} x {mu} > {nu}: coefficient dropped from {p} to {c} at k={k}"
                    );
                }
                for (nu, &p) in &prev {
                    let c = cur.get(nu).copied().unwrap_or(0);
                    assert!(c >= p, "fusion {lam} x {mu} > {nu}: term vanished at k={k}");
                }
                prev = cur;
            }
            if kstable <= max_k {
                assert_eq!(
                    prev, tensor,
                    "fusion of {lam} x {mu} at k=|λ|+|μ|={kstable} must equal the tensor product"
                );
            }
        }
    }
}

/// Fusion coefficients are invariant under the outer automorphism acting
/// simultaneously on all three weights: rotating λ̂ by a^p and μ̂ by a^q
/// rotates every product term by a^(p+q) with the same coefficient.
pub fn suite_outer_auto_invariance(rank_n: usize, max_label: i64, max_k: i64) {
    let grid = weight_grid(rank_n, max_label);
    for lam_labels in &grid {
        let lam = FiniteWeight::new(lam_labels.clone()).unwrap();
        for mu_labels in &grid {
            let mu = FiniteWeight::new(mu_labels.clone()).unwrap();
            let kmin = lam.label_sum().max(mu.label_sum());
            for k in kmin..=max_k {
                let lh = affine_extend(&lam, k);
                let mh = affine_extend(&mu, k);
                let base = kac_walton(k, &lh, &mh).unwrap().coefficients;
                for p in 0..rank_n as i64 {
                    for q in 0..rank_n as i64 {
                        let rot = kac_walton(k, &lh.outer_auto(p), &mh.outer_auto(q))
                            .unwrap()
                            .coefficients;
                        assert_eq!(
                            rot.len(),
                            base.len(),
                            "outer automorphism (p={p}, q={q}) changed the number of terms of {lh} x {mh}"
                        );
                        for (nu_hat, &c) in &base {
                            let image = nu_hat.outer_auto(p + q);
                            assert_eq!(
                                rot.get(&image).copied().unwrap_or(0),
                                c,
                                "outer automorphism broke {lh} x {mh} > {nu_hat} at k={k}, p={p}, q={q}"
                            );
                        }
                    }
                }
            }
        }
    }
}

/// The su(2) threshold read off a tableau (λ1 + n11) agrees with the
/// thresholds scanned from Kac-Walton, as multisets over all couplings.
pub fn suite_su2_threshold_rule(max_label: i64) {
    for l1 in 0..=max_label {
        for m1 in 0..=max_label {
            let lam = FiniteWeight::new(vec![l1]).unwrap();
            let mu = FiniteWeight::new(vec![m1]).unwrap();
            let mut from_tableaux: Vec<i64> = enumerate_lr(&lam, &mu)
                .unwrap()
                .iter()
                .map(|t| threshold_su2_tableau(t).unwrap())
                .collect();
            from_tableaux.sort_unstable();
            let mut from_scan: Vec<i64> = Vec::new();
            for nu in tensor_decompose(&lam, &mu).unwrap().keys() {
                from_scan.extend(threshold_levels(&lam, &mu, nu).unwrap());
            }
            from_scan.sort_unstable();
            assert_eq!(
                from_tableaux, from_scan,
                "threshold multisets disagree for ({l1}) x ({m1})"
            );
        }
    }
}

/// Completeness of the computed Hilbert basis of the LR system: inside the
/// box, its nonnegative combinations account for every solution, and
/// nothing else.
pub fn suite_hilbert_completeness(rank_n: usize, bound: i64) {
    let system = lr_system(rank_n).unwrap();
    let basis = hilbert_nonneg(&system).unwrap();
    for g in basis.generators() {
        assert!(system.satisfies(g), "generator {g:?} violates the system");
    }
    let monoid = monoid_in_box(basis.generators(), system.num_vars(), bound);
    let sols = box_solutions(&system, bound);
    assert_eq!(
        monoid, sols,
        "generated monoid and solution set differ inside the box (su({rank_n}), bound {bound})"
    );
}

/// Minimality and completeness of the computed Hilbert basis against the
/// brute-force pair-order oracle on a box.
pub fn suite_hilbert_minimality(rank_n: usize, bound: i64) {
    let system = lr_system(rank_n).unwrap();
    let basis = hilbert_nonneg(&system).unwrap();
    let mut in_box: Vec<Vec<i64>> = basis
        .generators()
        .iter()
        .filter(|g| g.iter().all(|&c| c <= bound))
        .cloned()
        .collect();
    in_box.sort();
    let brute = brute_hilbert_box(system.rows(), system.num_vars(), bound);
    assert_eq!(
        in_box, brute,
        "Hilbert basis disagrees with the brute-force box oracle (su({rank_n}), bound {bound})"
    );
}

/// The dualized fusion-basis system is solution-equivalent, inside a box,
/// to the monoid generated by the fusion elementary couplings.
pub fn suite_dual_box_equivalence(rank_n: usize, bound: i64) {
    let basis = construct_fusion_basis(rank_n).unwrap();
    let gens: Vec<Vec<i64>> = basis
        .elementaries()
        .iter()
        .map(|e| e.vector().to_vec())
        .collect();
    let monoid = monoid_in_box(&gens, basis.system().num_vars(), bound);
    let sols = box_solutions(basis.system(), bound);
    assert_eq!(
        monoid, sols,
        "fusion-basis solutions and coupling monoid differ inside the box (su({rank_n}), bound {bound})"
    );
}

/// Exhaustive cross-check of the LR tensor decomposition against the
/// Klimyk oracle on a grid of weights.
pub fn suite_tensor_vs_klimyk(rank_n: usize, max_label: i64) {
    let grid = weight_grid(rank_n, max_label);
    for lam_labels in &grid {
        let lam = FiniteWeight::new(lam_labels.clone()).unwrap();
        for mu_labels in &grid {
            let mu = FiniteWeight::new(mu_labels.clone()).unwrap();
            let got: BTreeMap<Vec<i64>, i64> = tensor_decompose(&lam, &mu)
                .unwrap()
                .into_iter()
                .map(|(nu, c)| (nu.labels().to_vec(), c))
                .collect();
            let want = klimyk_tensor(rank_n, lam_labels, mu_labels);
            assert_eq!(got, want, "tensor product {lam} x {mu} disagrees with the Klimyk oracle");
        }
    }
}

/// Fusion never exceeds tensor, and the threshold list for each coupling
/// is consistent with fusion_coeff level by level.
pub fn suite_threshold_consistency(rank_n: usize, max_label: i64) {
    let grid = weight_grid(rank_n, max_label);
    for lam_labels in &grid {
        let lam = FiniteWeight::new(lam_labels.clone()).unwrap();
        for mu_labels in &grid {
            let mu = FiniteWeight::new(mu_labels.clone()).unwrap();
            for (nu, mult) in tensor_decompose(&lam, &mu).unwrap() {
                let ks = threshold_levels(&lam, &mu, &nu).unwrap();
                assert_eq!(ks.len() as i64, mult, "one threshold per coupling");
                // Sorted, and the coefficient at each threshold equals the
                // number of thresholds at or below it.
                for w in ks.windows(2) {
                    assert!(w[0] <= w[1]);
                }
                for (idx, &k0) in ks.iter().enumerate() {
                    let at = fusion_coeff(k0, &lam, &mu, &nu).unwrap();
                    assert!(at > idx as i64, "coefficient at threshold {k0} too small");
                    if k0 > 0 {
                        let below = fusion_coeff(k0 - 1, &lam, &mu, &nu).unwrap();
                        assert!(below <= idx as i64, "coupling active below its threshold {k0}");
                    }
                }
            }
        }
    }
}
