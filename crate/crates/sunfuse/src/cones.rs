//! Hilbert bases of the integer-point monoids behind coupling systems.
//!
//! Two monoids matter here: the nonnegative solutions of an inequality
//! system `{x ∈ ℕ^m : Ax ≥ 0}` (whose Hilbert basis yields the elementary
//! couplings) and the dual side `{u ∈ ℤ^m : uᵀV ≥ 0}` for a generator
//! matrix V (whose Hilbert basis yields a defining inequality system).
//!
//! The completion works row by row (a staged Pottier procedure): starting
//! from the unit vectors of ℕ^m, each inequality is imposed in turn by
//! combining cross-sign pairs, fully reducing every candidate against the
//! current pool, and finally keeping the irreducible elements of the
//! nonnegative side. Irreducibility throughout is with respect to the
//! *pair order* — componentwise on the vector **and** on the values of all
//! rows imposed so far — plain componentwise minimality is not sound for
//! inequality systems (e.g. for `λ1 ≥ n12` the generator (1,0,1) exceeds
//! (1,0,0) componentwise yet is irreducible, because (0,0,1) is not a
//! solution).

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::tableaux::InequalitySystem;

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn le(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

#[derive(Clone)]
struct PoolEntry {
    x: Vec<i64>,
    /// Value of the row currently being imposed.
    aval: i64,
    /// Values of the rows already imposed (in `done` order).
    dvals: Vec<i64>,
}

/// Fully reduces `c` against the pool: repeatedly subtracts any entry that
/// is below `c` in the pair order and whose current-row value stays inside
/// the sign window of `c`'s value (so the subtraction cannot overshoot the
/// row being imposed). Returns `None` if `c` reduces to zero.
fn reduce_full(mut c: Vec<i64>, pool: &[PoolEntry], a: &[i64], done: &[Vec<i64>]) -> Option<Vec<i64>> {
    let mut cv = dot(a, &c);
    let mut cd: Vec<i64> = done.iter().map(|r| dot(r, &c)).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for g in pool {
            let gv = g.aval;
            let window_ok = match cv.cmp(&0) {
                std::cmp::Ordering::Greater => 0 <= gv && gv <= cv,
                std::cmp::Ordering::Less => cv <= gv && gv <= 0,
                std::cmp::Ordering::Equal => gv == 0,
            };
            if !window_ok {
                continue;
            }
            if le(&g.x, &c) && le(&g.dvals, &cd) {
                for (ci, gi) in c.iter_mut().zip(&g.x) {
                    *ci -= gi;
                }
                cv -= gv;
                for (di, gi) in cd.iter_mut().zip(&g.dvals) {
                    *di -= gi;
                }
                changed = true;
                if c.iter().all(|&v| v == 0) {
                    return None;
                }
            }
        }
    }
    Some(c)
}

/// The Hilbert basis of `{x ∈ ℕ^nvars : rows·x ≥ 0}`, ascending lex.
fn staged_hilbert(rows: &[Vec<i64>], nvars: usize) -> Vec<Vec<i64>> {
    let mut gens: Vec<Vec<i64>> = (0..nvars)
        .map(|i| {
            let mut e = vec![0i64; nvars];
            e[i] = 1;
            e
        })
        .collect();
    let mut done: Vec<Vec<i64>> = Vec::new();
    for a in rows {
        if a.iter().all(|&c| c >= 0) {
            // Satisfied on all of ℕ^m; its values also respect the pair
            // order automatically, so it never constrains a reduction.
            done.push(a.clone());
            continue;
        }
        let mut pool: Vec<PoolEntry> = gens
            .iter()
            .map(|g| PoolEntry {
                aval: dot(a, g),
                dvals: done.iter().map(|r| dot(r, g)).collect(),
                x: g.clone(),
            })
            .collect();
        let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
        for p in 0..pool.len() {
            for q in 0..pool.len() {
                if pool[p].aval > 0 && pool[q].aval < 0 {
                    queue.push_back((p, q));
                }
            }
        }
        let mut seen: HashSet<Vec<i64>> = pool.iter().map(|g| g.x.clone()).collect();
        while let Some((p, q)) = queue.pop_front() {
            let c: Vec<i64> = pool[p].x.iter().zip(&pool[q].x).map(|(x, y)| x + y).collect();
            let Some(c) = reduce_full(c, &pool, a, &done) else { continue };
            if !seen.insert(c.clone()) {
                continue;
            }
            let cv = dot(a, &c);
            let idx = pool.len();
            for (gi, g) in pool.iter().enumerate() {
                if g.aval * cv < 0 {
                    queue.push_back(if g.aval > 0 { (gi, idx) } else { (idx, gi) });
                }
            }
            pool.push(PoolEntry {
                aval: cv,
                dvals: done.iter().map(|r| dot(r, &c)).collect(),
                x: c,
            });
        }
        done.push(a.clone());
        // Keep the nonnegative side, irreducible in the pair order over
        // all rows imposed so far.
        let keep: Vec<&PoolEntry> = pool.iter().filter(|g| g.aval >= 0).collect();
        let vals: Vec<Vec<i64>> = keep
            .iter()
            .map(|g| {
                let mut v = g.dvals.clone();
                v.push(g.aval);
                v
            })
            .collect();
        gens = keep
            .iter()
            .enumerate()
            .filter(|(i, g)| {
                !keep.iter().enumerate().any(|(j, h)| {
                    j != *i && h.x != g.x && le(&h.x, &g.x) && le(&vals[j], &vals[*i])
                })
            })
            .map(|(_, g)| g.x.clone())
            .collect();
    }
    gens.sort();
    gens
}

/// A finite generating set for the nonnegative integer solutions of an
/// inequality system: every solution is a nonnegative integer combination
/// of the generators, and no generator is a sum of other solutions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionBasis {
    system: InequalitySystem,
    generators: Vec<Vec<i64>>,
}

impl SolutionBasis {
    /// Pairs a system with an externally computed generating set (used for
    /// decomposing over fusion elementaries, whose canonical order differs
    /// from plain descending lex).
    pub(crate) fn from_parts(system: InequalitySystem, generators: Vec<Vec<i64>>) -> Self {
        Self { system, generators }
    }

    pub fn system(&self) -> &InequalitySystem {
        &self.system
    }

    /// Generators in canonical (descending lexicographic) order.
    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }
}

/// Computes the Hilbert basis of `{x ∈ ℕ^m : Ax ≥ 0}` for the given
/// system. Generators are returned in descending lexicographic order.
pub fn hilbert_nonneg(system: &InequalitySystem) -> Result<SolutionBasis> {
    let mut gens = staged_hilbert(system.rows(), system.num_vars());
    gens.sort_by(|a, b| b.cmp(a));
    debug_assert!(gens.iter().all(|g| system.satisfies(g)));
    Ok(SolutionBasis { system: system.clone(), generators: gens })
}

/// Computes a minimal generating set of `{u ∈ ℤ^m : uᵀV ≥ 0}` where V is
/// given row-major with one row per variable and one column per generator.
/// The integer-sided monoid is handled by splitting `u = p − q` with
/// `p, q ∈ ℕ^m`, taking the Hilbert basis of the doubled system, and then
/// removing the vectors that are nonnegative integer combinations of the
/// others. Rows are returned in descending lexicographic order.
pub fn hilbert_dual(v: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let m = v.len();
    if m == 0 {
        return Err(Error::Domain("the generator matrix has no rows".into()));
    }
    let ncols = v[0].len();
    if v.iter().any(|row| row.len() != ncols) {
        return Err(Error::Domain("the generator matrix is ragged".into()));
    }
    if v.iter().all(|row| row.iter().all(|&c| c == 0)) {
        return Err(Error::Domain("the generator matrix is zero".into()));
    }
    // Doubled system over (p, q): for each column c, Σ_i V[i][c]·(p_i − q_i) ≥ 0.
    let rows: Vec<Vec<i64>> = (0..ncols)
        .map(|c| {
            let mut row: Vec<i64> = (0..m).map(|i| v[i][c]).collect();
            row.extend((0..m).map(|i| -v[i][c]));
            row
        })
        .collect();
    let hb = staged_hilbert(&rows, 2 * m);
    let mut cand: Vec<Vec<i64>> = Vec::new();
    for z in hb {
        let u: Vec<i64> = (0..m).map(|i| z[i] - z[m + i]).collect();
        if u.iter().any(|&x| x != 0) && !cand.contains(&u) {
            cand.push(u);
        }
    }
    // Weight used to bound decomposition coefficients: φ(u) = Σ_c (u·column c),
    // which is nonnegative on every solution and additive.
    let phi_w: Vec<i64> = (0..m).map(|i| v[i].iter().sum()).collect();
    let phi = |u: &[i64]| dot(u, &phi_w);
    let row_vals = |u: &[i64]| -> Vec<i64> {
        (0..ncols).map(|c| (0..m).map(|i| v[i][c] * u[i]).sum()).collect()
    };
    fn decomposable_rec(
        r: &[i64],
        idx: usize,
        used: i64,
        others: &[&Vec<i64>],
        phi: &dyn Fn(&[i64]) -> i64,
        row_vals: &dyn Fn(&[i64]) -> Vec<i64>,
    ) -> bool {
        if r.iter().all(|&x| x == 0) {
            return used >= 2;
        }
        if phi(r) < 0 || row_vals(r).iter().any(|&x| x < 0) {
            // Any residual of a valid decomposition is itself a sum of
            // solutions, hence a solution.
            return false;
        }
        if idx >= others.len() {
            return false;
        }
        let v = others[idx];
        let pv = phi(v);
        let cap = if pv > 0 { (phi(r) / pv).min(10) } else { 10 };
        for a in (0..=cap).rev() {
            let r2: Vec<i64> = r.iter().zip(v).map(|(x, y)| x - a * y).collect();
            if decomposable_rec(&r2, idx + 1, used + a, others, phi, row_vals) {
                return true;
            }
        }
        false
    }
    loop {
        let mut order: Vec<Vec<i64>> = cand.clone();
        order.sort_by_key(|u| {
            (-(u.iter().map(|x| x.abs()).sum::<i64>()), u.clone())
        });
        let mut removed = false;
        for u in &order {
            let others: Vec<&Vec<i64>> = cand.iter().filter(|v| *v != u).collect();
            if decomposable_rec(u, 0, 0, &others, &phi, &row_vals) {
                cand.retain(|v| v != u);
                removed = true;
                break;
            }
        }
        if !removed {
            break;
        }
    }
    cand.sort_by(|a, b| b.cmp(a));
    Ok(cand)
}

/// Is `x` an elementary solution of the system — nonzero and not the sum
/// of two nonzero solutions? Errors if `x` is not a nonzero solution in
/// ℕ^m to begin with.
pub fn is_elementary(system: &InequalitySystem, x: &[i64]) -> Result<bool> {
    check_solution(system, x)?;
    if x.iter().all(|&v| v == 0) {
        return Err(Error::Domain("the zero vector is not a coupling".into()));
    }
    // Any decomposition x = y + z over ℕ^m forces y ≤ x componentwise.
    let mut y = vec![0i64; x.len()];
    loop {
        // advance the odometer over the box [0, x]
        let mut pos = 0;
        while pos < y.len() {
            if y[pos] < x[pos] {
                y[pos] += 1;
                break;
            }
            y[pos] = 0;
            pos += 1;
        }
        if pos == y.len() {
            return Ok(true); // wrapped: box exhausted
        }
        if y == x {
            continue;
        }
        if system.satisfies(&y) {
            let z: Vec<i64> = x.iter().zip(&y).map(|(a, b)| a - b).collect();
            if system.satisfies(&z) {
                return Ok(false);
            }
        }
    }
}

fn check_solution(system: &InequalitySystem, x: &[i64]) -> Result<()> {
    if x.len() != system.num_vars() {
        return Err(Error::Domain(format!(
            "vector has {} entries but the system has {} variables",
            x.len(),
            system.num_vars()
        )));
    }
    if x.iter().any(|&v| v < 0) {
        return Err(Error::Domain("vector has a negative entry".into()));
    }
    if !system.satisfies(x) {
        return Err(Error::Domain("vector does not satisfy the system".into()));
    }
    Ok(())
}

/// All ways of writing `x` as a nonnegative integer combination of the
/// basis generators, as coefficient vectors in the generators' order,
/// ascending lexicographically. The zero vector has exactly the trivial
/// decomposition. Errors with [`Error::Inconsistency`] if no decomposition
/// exists (impossible for a genuine Hilbert basis).
pub fn decompose(x: &[i64], basis: &SolutionBasis) -> Result<Vec<Vec<i64>>> {
    check_solution(basis.system(), x)?;
    let gens = basis.generators();
    if gens.iter().any(|g| g.iter().all(|&v| v == 0) || g.iter().any(|&v| v < 0)) {
        return Err(Error::Domain("generators must be nonzero and nonnegative".into()));
    }
    let mut out = Vec::new();
    let mut coeffs = vec![0i64; gens.len()];
    fn rec(
        r: &[i64],
        idx: usize,
        gens: &[Vec<i64>],
        coeffs: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if idx == gens.len() {
            if r.iter().all(|&v| v == 0) {
                out.push(coeffs.clone());
            }
            return;
        }
        let g = &gens[idx];
        let cap = r
            .iter()
            .zip(g)
            .filter(|(_, &gi)| gi > 0)
            .map(|(&ri, &gi)| ri / gi)
            .min()
            .unwrap_or(0);
        for a in 0..=cap {
            coeffs[idx] = a;
            let r2: Vec<i64> = r.iter().zip(g).map(|(ri, gi)| ri - a * gi).collect();
            rec(&r2, idx + 1, gens, coeffs, out);
        }
        coeffs[idx] = 0;
    }
    rec(x, 0, gens, &mut coeffs, &mut out);
    if out.is_empty() {
        return Err(Error::Inconsistency(format!(
            "{x:?} is a solution but is not generated by the basis"
        )));
    }
    Ok(out)
}
