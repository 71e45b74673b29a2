//! Affine ŝu(N) machinery: the affine Cartan matrix, reflection of shifted
//! weights to the dominant chamber, fusion products via reflected tensor
//! decompositions, and threshold levels of couplings.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::tableaux::tensor_decompose;
use crate::weights::{affine_extend, AffineWeight, FiniteWeight};

/// The affine Cartan matrix of ŝu(N) (N×N, indices 0…N−1 cyclic):
/// 2 on the diagonal, −1 between cyclic neighbours, accumulated so that
/// N = 2 yields off-diagonal −2.
pub fn cartan(rank_n: usize) -> Result<Vec<Vec<i64>>> {
    if rank_n < 2 {
        return Err(Error::Domain(format!("su({rank_n}) is not supported; N >= 2")));
    }
    let mut a = vec![vec![0i64; rank_n]; rank_n];
    for i in 0..rank_n {
        a[i][i] = 2;
        a[i][(i + 1) % rank_n] -= 1;
        a[i][(i + rank_n - 1) % rank_n] -= 1;
    }
    Ok(a)
}

/// Outcome of reflecting a shifted affine weight into the dominant chamber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReflectionResult {
    /// Equivalent dominant weight (shift already removed) and the sign
    /// (−1)^(number of reflections).
    Dominant { weight: AffineWeight, sign: i64 },
    /// The shifted weight hits a reflection hyperplane; it contributes
    /// nothing.
    OnWall,
}

/// Reflects `w` to the dominant chamber under the shifted affine Weyl
/// action: x = w + ρ̂ is reflected by s_i (x ↦ x − x_i·A_i) at the most
/// negative label (lowest index on ties) until all labels are positive
/// (→ `Dominant(x − ρ̂, ±1)`) or some label is zero (→ `OnWall`).
pub fn reflect_to_dominant(w: &AffineWeight) -> Result<ReflectionResult> {
    let n = w.rank_n();
    let a = cartan(n)?;
    let mut x: Vec<i64> = w.labels().iter().map(|&l| l + 1).collect();
    let mut sign = 1i64;
    // The shifted action preserves the level of x; a bounded walk either
    // terminates or cycles, so cap the number of reflections.
    let level = w.level();
    let max_iters = 10 * (level.max(0) as usize + n);
    for _ in 0..=max_iters {
        if x.contains(&0) {
            return Ok(ReflectionResult::OnWall);
        }
        if x.iter().all(|&v| v > 0) {
            let labels = x.iter().map(|&v| v - 1).collect();
            return Ok(ReflectionResult::Dominant { weight: AffineWeight::new(labels)?, sign });
        }
        let mut i = 0;
        for j in 1..n {
            if x[j] < x[i] {
                i = j;
            }
        }
        let xi = x[i];
        for j in 0..n {
            x[j] -= xi * a[i][j];
        }
        sign = -sign;
    }
    Err(Error::Internal(format!(
        "reflection of {w} did not terminate within {max_iters} steps"
    )))
}

/// A fusion product decomposition at a fixed level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionResult {
    pub level: i64,
    /// Integrable affine weights at `level` with their fusion coefficients.
    pub coefficients: BTreeMap<AffineWeight, i64>,
}

/// The fusion product `λ̂ × μ̂` at the given level: each tensor product
/// term, affinely extended, is reflected to the dominant chamber and
/// accumulated with its sign. Zero coefficients are dropped.
pub fn kac_walton(level: i64, lambda: &AffineWeight, mu: &AffineWeight) -> Result<FusionResult> {
    let n = lambda.rank_n();
    if mu.rank_n() != n {
        return Err(Error::RankMismatch(format!(
            "cannot fuse su({n}) with su({}) weights",
            mu.rank_n()
        )));
    }
    if lambda.level() != level || mu.level() != level {
        return Err(Error::LevelMismatch(format!(
            "{lambda} and {mu} must both have level {level}"
        )));
    }
    if !lambda.is_integrable() || !mu.is_integrable() {
        return Err(Error::Domain(format!("{lambda} × {mu}: factors must be integrable")));
    }
    let mut coeffs: BTreeMap<AffineWeight, i64> = BTreeMap::new();
    let lam_fin = lambda.finite_part();
    let mu_fin = mu.finite_part();
    for (nu, mult) in tensor_decompose(&lam_fin, &mu_fin)? {
        let nu_hat = affine_extend(&nu, level);
        match reflect_to_dominant(&nu_hat)? {
            ReflectionResult::OnWall => {}
            ReflectionResult::Dominant { weight, sign } => {
                *coeffs.entry(weight).or_insert(0) += sign * mult;
            }
        }
    }
    for (w, c) in &coeffs {
        if *c < 0 {
            return Err(Error::Internal(format!(
                "negative fusion coefficient {c} for {w} in {lambda} × {mu}"
            )));
        }
    }
    coeffs.retain(|_, c| *c != 0);
    Ok(FusionResult { level, coefficients: coeffs })
}

/// One fusion coefficient N^(k) for finite weights λ, μ, ν. Weights that
/// do not fit at level k (label sum exceeding k) give 0.
pub fn fusion_coeff(
    level: i64,
    lambda: &FiniteWeight,
    mu: &FiniteWeight,
    nu: &FiniteWeight,
) -> Result<i64> {
    let n = lambda.rank_n();
    if mu.rank_n() != n || nu.rank_n() != n {
        return Err(Error::RankMismatch("all three weights must share one rank".into()));
    }
    if !lambda.is_integrable() || !mu.is_integrable() || !nu.is_integrable() {
        return Err(Error::Domain("fusion coefficients need integrable weights".into()));
    }
    if level < 0 {
        return Ok(0);
    }
    if lambda.label_sum() > level || mu.label_sum() > level || nu.label_sum() > level {
        return Ok(0);
    }
    let result = kac_walton(level, &affine_extend(lambda, level), &affine_extend(mu, level))?;
    let nu_hat = affine_extend(nu, level);
    Ok(result.coefficients.get(&nu_hat).copied().unwrap_or(0))
}

/// The threshold levels of the coupling `λ ⊗ μ ⊃ ν`: the multiset of
/// levels at which each of its tensor multiplicity's copies first appears
/// in the fusion product. Fusion coefficients are weakly increasing in the
/// level and stabilise at the tensor multiplicity, so listing each k with
/// multiplicity N^(k) − N^(k−1) yields exactly that many entries.
pub fn threshold_levels(
    lambda: &FiniteWeight,
    mu: &FiniteWeight,
    nu: &FiniteWeight,
) -> Result<Vec<i64>> {
    let n = lambda.rank_n();
    if mu.rank_n() != n || nu.rank_n() != n {
        return Err(Error::RankMismatch("all three weights must share one rank".into()));
    }
    let tensor_mult = tensor_decompose(lambda, mu)?.get(nu).copied().unwrap_or(0);
    if !nu.is_integrable() {
        return Err(Error::Domain(format!("{nu} has a negative label")));
    }
    let lo = lambda.label_sum().max(mu.label_sum()).max(nu.label_sum());
    let hi = lambda.label_sum() + mu.label_sum();
    let mut out = Vec::with_capacity(tensor_mult as usize);
    for k in lo..=hi {
        let coeff = fusion_coeff(k, lambda, mu, nu)?;
        while (out.len() as i64) < coeff {
            out.push(k);
        }
        if out.len() as i64 == tensor_mult {
            break;
        }
    }
    if out.len() as i64 != tensor_mult {
        return Err(Error::Internal(format!(
            "fusion coefficients did not reach the tensor multiplicity {tensor_mult} by level {hi}"
        )));
    }
    Ok(out)
}

/// For su(2) only: the threshold level of a single LR tableau, `λ1 + n11`.
pub fn threshold_su2_tableau(tableau: &crate::tableaux::LRTableau) -> Result<i64> {
    if tableau.rank_n() != 2 {
        return Err(Error::Domain(
            "per-tableau threshold levels are only defined for su(2)".into(),
        ));
    }
    Ok(tableau.lambda().labels()[0] + tableau.fill(1, 1))
}
