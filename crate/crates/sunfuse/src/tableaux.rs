//! Littlewood-Richardson tableaux as integer fill-count data, the LR
//! inequality system, coupling enumeration, and the stretched product.
//!
//! A coupling `λ ⊗ μ ⊃ ν` of su(N) is encoded by the shape of λ together
//! with the counts `n_{ij}` of letters `i ∈ {1, …, N−1}` placed in row `j`
//! (letters can only sit in rows `j ≥ i`). The admissible fills are exactly
//! the nonnegative integer solutions of a homogeneous linear inequality
//! system: column regularity ties `n_{ij}` to the shape of λ, and the
//! lattice-word conditions order the letters. Everything downstream (Hilbert
//! bases, fusion bases) works in the fixed coordinate order
//! `(λ1, …, λ_{N−1}, n_{11}, n_{12}, …)`, letters major.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::weights::FiniteWeight;

/// The `(letter, row)` index pairs of the fill variables for su(N), in the
/// canonical order: letter-major, rows `i ≤ j ≤ N`.
pub fn fill_slots(rank_n: usize) -> Vec<(usize, usize)> {
    let mut slots = Vec::new();
    for i in 1..rank_n {
        for j in i..=rank_n {
            slots.push((i, j));
        }
    }
    slots
}

/// Variable names for the LR system of su(N): `l1, …, n11, n12, …`; with
/// `with_level` a leading `k` is included (fusion coordinates).
pub fn var_names(rank_n: usize, with_level: bool) -> Vec<String> {
    let mut names = Vec::new();
    if with_level {
        names.push("k".to_string());
    }
    for i in 1..rank_n {
        names.push(format!("l{i}"));
    }
    for (i, j) in fill_slots(rank_n) {
        names.push(format!("n{i}{j}"));
    }
    names
}

/// A homogeneous system of linear inequalities `Ax ≥ 0` over named integer
/// variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalitySystem {
    vars: Vec<String>,
    rows: Vec<Vec<i64>>,
}

impl InequalitySystem {
    pub fn new(vars: Vec<String>, rows: Vec<Vec<i64>>) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::Domain("an inequality system needs at least one variable".into()));
        }
        for row in &rows {
            if row.len() != vars.len() {
                return Err(Error::Domain(format!(
                    "row has {} coefficients but there are {} variables",
                    row.len(),
                    vars.len()
                )));
            }
        }
        Ok(Self { vars, rows })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    /// Does `x` satisfy every inequality? `x` must use the system's
    /// variable order and length.
    pub fn satisfies(&self, x: &[i64]) -> bool {
        debug_assert_eq!(x.len(), self.vars.len());
        self.rows
            .iter()
            .all(|row| row.iter().zip(x).map(|(c, v)| c * v).sum::<i64>() >= 0)
    }

    /// JSON form `{"vars": [...], "rows": [[...], ...]}` (sorted keys).
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "vars": self.vars, "rows": self.rows })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text)
            .map_err(|e| Error::Domain(format!("invalid JSON: {e}")))?;
        let vars = value["vars"]
            .as_array()
            .ok_or_else(|| Error::Domain("missing `vars` array".into()))?
            .iter()
            .map(|v| {
                v.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| Error::Domain("`vars` entries must be strings".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let rows = value["rows"]
            .as_array()
            .ok_or_else(|| Error::Domain("missing `rows` array".into()))?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::Domain("`rows` entries must be arrays".into()))?
                    .iter()
                    .map(|c| {
                        c.as_i64().ok_or_else(|| Error::Domain("row coefficients must be integers".into()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(vars, rows)
    }

    /// Renders one row as a readable inequality, e.g. `k - l1 - n11 >= 0`.
    pub fn render_row(&self, row: &[i64]) -> String {
        let mut out = String::new();
        for (coeff, name) in row.iter().zip(&self.vars) {
            if *coeff == 0 {
                continue;
            }
            if out.is_empty() {
                if *coeff < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if *coeff < 0 { " - " } else { " + " });
            }
            let mag = coeff.abs();
            if mag != 1 {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(name);
        }
        if out.is_empty() {
            out.push('0');
        }
        out.push_str(" >= 0");
        out
    }
}

/// The Littlewood-Richardson inequality system for su(N) over
/// `(λ1, …, λ_{N−1}, n_{11}, …)`: column-regularity rows, lattice-word rows,
/// then one nonnegativity row per variable.
pub fn lr_system(rank_n: usize) -> Result<InequalitySystem> {
    if rank_n < 2 {
        return Err(Error::Domain(format!("su({rank_n}) is not supported; N >= 2")));
    }
    let slots = fill_slots(rank_n);
    let nvars = (rank_n - 1) + slots.len();
    let slot_pos = |i: usize, j: usize| -> Option<usize> {
        slots.iter().position(|&s| s == (i, j)).map(|p| rank_n - 1 + p)
    };
    let mut rows = Vec::new();
    // Column regularity: λ_{j−1} + Σ_{i<k} n_{i,j−1} − Σ_{i≤k} n_{ij} ≥ 0
    // for 1 ≤ k < j ≤ N (absent slots read as zero).
    for j in 2..=rank_n {
        for k in 1..j {
            let mut row = vec![0i64; nvars];
            row[j - 2] += 1;
            for i in 1..k {
                if let Some(p) = slot_pos(i, j - 1) {
                    row[p] += 1;
                }
            }
            for i in 1..=k {
                if let Some(p) = slot_pos(i, j) {
                    row[p] -= 1;
                }
            }
            rows.push(row);
        }
    }
    // Lattice word: Σ_{j'=i−1}^{k−1} n_{i−1,j'} − Σ_{j'=i}^{k} n_{ij'} ≥ 0
    // for 2 ≤ i ≤ k ≤ N with i ≤ N−1.
    for i in 2..rank_n {
        for k in i..=rank_n {
            let mut row = vec![0i64; nvars];
            for j in i..=k {
                if let Some(p) = slot_pos(i - 1, j - 1) {
                    row[p] += 1;
                }
                if let Some(p) = slot_pos(i, j) {
                    row[p] -= 1;
                }
            }
            rows.push(row);
        }
    }
    for v in 0..nvars {
        let mut row = vec![0i64; nvars];
        row[v] = 1;
        rows.push(row);
    }
    InequalitySystem::new(var_names(rank_n, false), rows)
}

/// Row lengths of the left-justified tableau of shape λ: row j has
/// `λ_j + … + λ_{N−1}` boxes.
pub fn shape_rows(lambda: &FiniteWeight) -> Result<Vec<i64>> {
    if !lambda.is_integrable() {
        return Err(Error::Domain(format!("{lambda} has a negative label; shapes need integrable weights")));
    }
    let labels = lambda.labels();
    Ok((0..labels.len()).map(|j| labels[j..].iter().sum()).collect())
}

/// One LR tableau: the first factor's shape plus the fill counts `n_{ij}`
/// in canonical slot order. Valid by construction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LRTableau {
    lambda: FiniteWeight,
    fills: Vec<i64>,
}

impl LRTableau {
    /// Validates the fill counts against the LR system.
    pub fn new(lambda: FiniteWeight, fills: Vec<i64>) -> Result<Self> {
        let n = lambda.rank_n();
        let slots = fill_slots(n);
        if fills.len() != slots.len() {
            return Err(Error::RankMismatch(format!(
                "su({n}) tableaux have {} fill slots, got {}",
                slots.len(),
                fills.len()
            )));
        }
        let system = lr_system(n)?;
        let tableau = Self { lambda, fills };
        if !system.satisfies(&tableau.coupling_vector(None)) {
            return Err(Error::Domain("fill counts violate the LR constraints".into()));
        }
        Ok(tableau)
    }

    /// The empty tableau (scalar ⊗ scalar ⊃ scalar).
    pub fn empty(rank_n: usize) -> Result<Self> {
        let lambda = FiniteWeight::zero(rank_n)?;
        let fills = vec![0; fill_slots(rank_n).len()];
        Ok(Self { lambda, fills })
    }

    /// Internal constructor for fills already known to satisfy the system.
    pub(crate) fn from_checked(lambda: FiniteWeight, fills: Vec<i64>) -> Self {
        Self { lambda, fills }
    }

    pub fn rank_n(&self) -> usize {
        self.lambda.rank_n()
    }

    pub fn lambda(&self) -> &FiniteWeight {
        &self.lambda
    }

    /// Fill counts in canonical slot order (see [`fill_slots`]).
    pub fn fills(&self) -> &[i64] {
        &self.fills
    }

    /// The count `n_{ij}`; zero for slots outside the triangular range.
    pub fn fill(&self, i: usize, j: usize) -> i64 {
        fill_slots(self.rank_n())
            .iter()
            .position(|&s| s == (i, j))
            .map_or(0, |p| self.fills[p])
    }

    /// The tableau's coordinates `(λ1, …, n11, …)`, optionally prefixed
    /// with a level coordinate.
    pub fn coupling_vector(&self, level: Option<i64>) -> Vec<i64> {
        let mut x = Vec::with_capacity(1 + self.lambda.labels().len() + self.fills.len());
        if let Some(k) = level {
            x.push(k);
        }
        x.extend_from_slice(self.lambda.labels());
        x.extend_from_slice(&self.fills);
        x
    }

    /// JSON form `{"lambda": [...], "n": [[n_i1, …, n_iN], …]}` where row i
    /// lists letter i's counts across all N tableau rows (zeros where the
    /// letter cannot sit).
    pub fn to_json(&self) -> serde_json::Value {
        let n = self.rank_n();
        let grid: Vec<Vec<i64>> = (1..n)
            .map(|i| (1..=n).map(|j| self.fill(i, j)).collect())
            .collect();
        serde_json::json!({ "lambda": self.lambda.labels(), "n": grid })
    }
}

impl fmt::Display for LRTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fills: Vec<String> = self.fills.iter().map(|x| x.to_string()).collect();
        write!(f, "{} | {}", self.lambda, fills.join(","))
    }
}

/// All LR tableaux of `λ ⊗ μ`: fills with letter counts fixed by μ
/// (count of letter i is `μ_i + … + μ_{N−1}`) solving the LR system.
/// Canonically ordered ascending in the fill vector.
pub fn enumerate_lr(lambda: &FiniteWeight, mu: &FiniteWeight) -> Result<Vec<LRTableau>> {
    let n = lambda.rank_n();
    if mu.rank_n() != n {
        return Err(Error::RankMismatch(format!(
            "cannot pair su({n}) with su({}) weights",
            mu.rank_n()
        )));
    }
    if !lambda.is_integrable() || !mu.is_integrable() {
        return Err(Error::Domain(format!("{lambda} ⊗ {mu}: factors must be integrable")));
    }
    let slots = fill_slots(n);
    let system = lr_system(n)?;
    let nvars = system.num_vars();
    // For each row, the last variable position with a nonzero coefficient:
    // the row can be checked as soon as that variable is assigned.
    let last_var: Vec<usize> = system
        .rows()
        .iter()
        .map(|row| row.iter().rposition(|&c| c != 0).unwrap_or(0))
        .collect();
    let mut rows_by_last: Vec<Vec<usize>> = vec![Vec::new(); nvars];
    for (ri, &lv) in last_var.iter().enumerate() {
        rows_by_last[lv].push(ri);
    }
    let check_at = |x: &[i64], pos: usize| -> bool {
        rows_by_last[pos].iter().all(|&ri| {
            system.rows()[ri].iter().zip(x).map(|(c, v)| c * v).sum::<i64>() >= 0
        })
    };

    let mu_labels = mu.labels();
    // budget[i−1] = count of letter i = μ_i + … + μ_{N−1}
    let mut budget: Vec<i64> = (0..n - 1).map(|i| mu_labels[i..].iter().sum()).collect();
    let mut x = vec![0i64; nvars];
    x[..n - 1].copy_from_slice(lambda.labels());
    for pos in 0..n - 1 {
        if !check_at(&x, pos) {
            return Ok(Vec::new()); // cannot happen for integrable λ, defensive
        }
    }
    let mut out = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        idx: usize,
        slots: &[(usize, usize)],
        n: usize,
        x: &mut Vec<i64>,
        budget: &mut Vec<i64>,
        check_at: &dyn Fn(&[i64], usize) -> bool,
        lambda: &FiniteWeight,
        out: &mut Vec<LRTableau>,
    ) {
        if idx == slots.len() {
            debug_assert!(budget.iter().all(|&b| b == 0));
            out.push(LRTableau::from_checked(
                lambda.clone(),
                x[n - 1..].to_vec(),
            ));
            return;
        }
        let (i, j) = slots[idx];
        let pos = n - 1 + idx;
        let rem = budget[i - 1];
        // The last row available to a letter must absorb its whole budget.
        let lo = if j == n { rem } else { 0 };
        for v in lo..=rem {
            x[pos] = v;
            budget[i - 1] -= v;
            if check_at(x, pos) {
                rec(idx + 1, slots, n, x, budget, check_at, lambda, out);
            }
            budget[i - 1] += v;
            x[pos] = 0;
        }
    }
    rec(0, &slots, n, &mut x, &mut budget, &check_at, lambda, &mut out);
    Ok(out)
}

/// Recovers the triple `(λ, μ, ν)` of a tableau: μ from letter counts, ν
/// from the resulting row lengths with complete columns of N boxes deleted.
pub fn weights_of(tableau: &LRTableau) -> (FiniteWeight, FiniteWeight, FiniteWeight) {
    let n = tableau.rank_n();
    let counts: Vec<i64> = (1..n)
        .map(|i| (i..=n).map(|j| tableau.fill(i, j)).sum())
        .collect();
    let mu: Vec<i64> = (0..n - 1)
        .map(|i| counts[i] - if i + 1 < n - 1 { counts[i + 1] } else { 0 })
        .collect();
    let lam = tableau.lambda().labels();
    // R_j = (boxes of λ in row j) + (fills landing in row j); the ν labels
    // are consecutive differences, which silently deletes full columns.
    let shape: Vec<i64> = (1..=n)
        .map(|j| {
            let from_lambda: i64 = if j < n { lam[j - 1..].iter().sum() } else { 0 };
            let from_fills: i64 = (1..n).map(|i| tableau.fill(i, j)).sum();
            from_lambda + from_fills
        })
        .collect();
    let nu: Vec<i64> = (0..n - 1).map(|j| shape[j] - shape[j + 1]).collect();
    debug_assert!(mu.iter().all(|&m| m >= 0) && nu.iter().all(|&v| v >= 0));
    (
        tableau.lambda().clone(),
        FiniteWeight::new(mu).expect("rank >= 2"),
        FiniteWeight::new(nu).expect("rank >= 2"),
    )
}

/// The tensor product decomposition `λ ⊗ μ = Σ N_{λμ}^ν ν` as a
/// weight → multiplicity map.
pub fn tensor_decompose(
    lambda: &FiniteWeight,
    mu: &FiniteWeight,
) -> Result<BTreeMap<FiniteWeight, i64>> {
    let mut out = BTreeMap::new();
    for tableau in enumerate_lr(lambda, mu)? {
        let (_, m, nu) = weights_of(&tableau);
        debug_assert_eq!(&m, mu);
        *out.entry(nu).or_insert(0) += 1;
    }
    Ok(out)
}

/// The stretched product: componentwise sum of the shapes and of all fill
/// counts. Sums of solutions solve the (homogeneous) LR system, so the
/// result is always a valid tableau.
pub fn stretched_product(t1: &LRTableau, t2: &LRTableau) -> Result<LRTableau> {
    if t1.rank_n() != t2.rank_n() {
        return Err(Error::RankMismatch(format!(
            "cannot multiply su({}) and su({}) tableaux",
            t1.rank_n(),
            t2.rank_n()
        )));
    }
    let lambda = FiniteWeight::new(
        t1.lambda()
            .labels()
            .iter()
            .zip(t2.lambda().labels())
            .map(|(a, b)| a + b)
            .collect(),
    )?;
    let fills = t1.fills().iter().zip(t2.fills()).map(|(a, b)| a + b).collect();
    LRTableau::new(lambda, fills)
}
