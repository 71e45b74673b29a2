//! Finite and affine su(N) weights in Dynkin-label coordinates.
//!
//! A finite weight stores the labels `(λ1, …, λ_{N−1})`; an affine weight
//! additionally carries the zeroth label, `[λ0, λ1, …, λ_{N−1}]`, so its
//! level `k = Σ λ_i` is part of the data. Non-integrable weights (negative
//! labels) are first-class values: the Kac-Walton algorithm manipulates them
//! as intermediates, and integrability is checked only where an operation
//! requires it.

use std::fmt;

use crate::error::{Error, Result};

/// An su(N) weight given by its N−1 Dynkin labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteWeight {
    labels: Vec<i64>,
}

impl FiniteWeight {
    pub fn new(labels: Vec<i64>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::Domain(
                "a finite su(N) weight needs at least one Dynkin label (N >= 2)".into(),
            ));
        }
        Ok(Self { labels })
    }

    /// The zero (scalar) weight of su(N).
    pub fn zero(rank_n: usize) -> Result<Self> {
        if rank_n < 2 {
            return Err(Error::Domain(format!("su({rank_n}) is not supported; N >= 2")));
        }
        Ok(Self { labels: vec![0; rank_n - 1] })
    }

    pub fn rank_n(&self) -> usize {
        self.labels.len() + 1
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn label_sum(&self) -> i64 {
        self.labels.iter().sum()
    }

    pub fn is_integrable(&self) -> bool {
        self.labels.iter().all(|&x| x >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.labels.iter().all(|&x| x == 0)
    }

    /// Parses the CLI/JSON text form `(2,0,1)`. Whitespace-insensitive.
    pub fn parse(s: &str) -> Result<Self> {
        Self::new(parse_label_list(s, '(', ')')?)
    }
}

impl fmt::Display for FiniteWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join_labels(&self.labels))
    }
}

/// An affine su(N) weight `[λ0, …, λ_{N−1}]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineWeight {
    labels: Vec<i64>,
}

impl AffineWeight {
    pub fn new(labels: Vec<i64>) -> Result<Self> {
        if labels.len() < 2 {
            return Err(Error::Domain(
                "an affine su(N) weight needs at least two labels (N >= 2)".into(),
            ));
        }
        Ok(Self { labels })
    }

    pub fn rank_n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    /// The level `k = Σ_i λ_i`; any integer for non-integrable intermediates.
    pub fn level(&self) -> i64 {
        self.labels.iter().sum()
    }

    pub fn is_integrable(&self) -> bool {
        self.labels.iter().all(|&x| x >= 0)
    }

    /// Drops the zeroth label.
    pub fn finite_part(&self) -> FiniteWeight {
        FiniteWeight { labels: self.labels[1..].to_vec() }
    }

    /// Applies the basic outer automorphism `a` n times (n taken mod N):
    /// `a [λ0, …, λ_{N−1}] = [λ_{N−1}, λ0, …, λ_{N−2}]`. Preserves the level.
    pub fn outer_auto(&self, n: i64) -> AffineWeight {
        let len = self.labels.len();
        let shift = n.rem_euclid(len as i64) as usize;
        let labels = (0..len)
            .map(|i| self.labels[(i + len - shift) % len])
            .collect();
        AffineWeight { labels }
    }

    /// Parses the CLI/JSON text form `[1,2,0,1]`. Whitespace-insensitive.
    pub fn parse(s: &str) -> Result<Self> {
        Self::new(parse_label_list(s, '[', ']')?)
    }
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", join_labels(&self.labels))
    }
}

/// The affine extension of λ at level k: `[k − Σλ_i, λ1, …, λ_{N−1}]`.
pub fn affine_extend(lambda: &FiniteWeight, k: i64) -> AffineWeight {
    let mut labels = Vec::with_capacity(lambda.rank_n());
    labels.push(k - lambda.label_sum());
    labels.extend_from_slice(lambda.labels());
    AffineWeight { labels }
}

fn join_labels(labels: &[i64]) -> String {
    labels.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn parse_label_list(s: &str, open: char, close: char) -> Result<Vec<i64>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix(open)
        .and_then(|t| t.strip_suffix(close))
        .ok_or_else(|| {
            Error::Domain(format!("expected a weight of the form {open}a,b,…{close}, got `{s}`"))
        })?;
    inner
        .split(',')
        .map(|part| {
            part.parse::<i64>()
                .map_err(|_| Error::Domain(format!("invalid integer label `{part}` in `{s}`")))
        })
        .collect()
}
