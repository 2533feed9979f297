//! Moment vectors and their determinant sequence.
//!
//! A `MomentVector` holds α₀…α_n, the prescribed values of ∫₀¹ x^k f(x) dx.
//! The Δ_k sequence measures how far the vector is from the moments of a
//! linear function: Δ_k vanishes for every k exactly when some u + vx has
//! these moments.

use num::bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polynomial::{poly_moment_integral, Polynomial};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MomentVector {
    alphas: Vec<Rational>,
}

/// Δ₀…Δ_{n−2} of an owning moment vector; empty when n < 2.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DeltaSequence {
    pub deltas: Vec<Rational>,
}

/// Result of the linear-solvability test.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LinearConsistency {
    pub is_linear: bool,
    /// The unique (u, v) with f(x) = u + vx matching the moments, when linear.
    pub coefficients: Option<(Rational, Rational)>,
}

impl MomentVector {
    /// Panics on an empty list; a moment vector has at least α₀.
    pub fn new(alphas: Vec<Rational>) -> Self {
        assert!(!alphas.is_empty(), "moment vector needs at least one entry");
        MomentVector { alphas }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        MomentVector::new(values.iter().map(|&v| Rational::from(v)).collect())
    }

    /// Degree n of the vector α₀…α_n.
    pub fn n(&self) -> usize {
        self.alphas.len() - 1
    }

    pub fn len(&self) -> usize {
        self.alphas.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn alpha(&self, k: usize) -> &Rational {
        &self.alphas[k]
    }

    pub fn alphas(&self) -> &[Rational] {
        &self.alphas
    }

    /// The vector α₀…α_m of the first m+1 entries.
    pub fn truncated(&self, m: usize) -> MomentVector {
        assert!(m <= self.n(), "cannot truncate degree {} to {m}", self.n());
        MomentVector::new(self.alphas[..=m].to_vec())
    }

    /// Δ_k = ((k+3)(k+4)/2) α_{k+2} − (k+2)(k+3) α_{k+1} + ((k+1)(k+2)/2) α_k.
    ///
    /// Requires k + 2 <= n. Δ₀ = 6α₂ − 6α₁ + α₀ and Δ₁ = 10α₃ − 12α₂ + 3α₁
    /// are the two low-degree special cases.
    pub fn delta(&self, k: usize) -> Result<Rational> {
        let n = self.n();
        if k + 2 > n {
            return Err(Error::IndexOutOfRange { index: k, n });
        }
        let kk = k as i64;
        let c2 = Rational::ratio((kk + 3) * (kk + 4), 2);
        let c1 = Rational::from((kk + 2) * (kk + 3));
        let c0 = Rational::ratio((kk + 1) * (kk + 2), 2);
        Ok(c2 * &self.alphas[k + 2] - c1 * &self.alphas[k + 1] + c0 * &self.alphas[k])
    }

    /// All Δ_k for k = 0…n−2; empty when n < 2.
    pub fn delta_sequence(&self) -> DeltaSequence {
        let n = self.n();
        let deltas = if n < 2 {
            Vec::new()
        } else {
            (0..=n - 2).map(|k| self.delta(k).expect("k+2 <= n")).collect()
        };
        DeltaSequence { deltas }
    }

    /// Moments of x ↦ f(1−x): α_k(g) = Σ_{j<=k} C(k,j) (−1)^j α_j(f), the
    /// binomial expansion of ∫ (1−u)^k f(u) du. An involution.
    pub fn reflect(&self) -> MomentVector {
        let alphas = (0..self.alphas.len())
            .map(|k| {
                let mut acc = Rational::zero();
                for j in 0..=k {
                    let b = num::integer::binomial(BigInt::from(k), BigInt::from(j));
                    let term = Rational::from_bigint(b) * &self.alphas[j];
                    acc = if j % 2 == 0 { acc + term } else { acc - term };
                }
                acc
            })
            .collect();
        MomentVector::new(alphas)
    }

    /// Moments of −f.
    pub fn negate(&self) -> MomentVector {
        MomentVector::new(self.alphas.iter().map(|a| -a).collect())
    }

    /// Decides whether some f(x) = u + vx has exactly these moments.
    ///
    /// Two independent tests run when n >= 2: solvability of the full system
    /// u/(k+1) + v/(k+2) = α_k (the rank condition on the augmented matrix)
    /// and vanishing of every Δ_k. They are equivalent; a disagreement would
    /// be an implementation bug and panics.
    ///
    /// Requires n >= 1 (a single moment is always realized by a line).
    pub fn linear_consistency(&self) -> LinearConsistency {
        let n = self.n();
        assert!(n >= 1, "linear consistency test needs at least two moments");
        // unique candidate from the first two equations:
        //   u + v/2 = α₀, u/2 + v/3 = α₁
        let u = Rational::from(2) * (Rational::from(2) * &self.alphas[0] - Rational::from(3) * &self.alphas[1]);
        let v = Rational::from(6) * (Rational::from(2) * &self.alphas[1] - &self.alphas[0]);
        let rank_ok = (0..=n).all(|k| {
            let lhs = &u / Rational::from(k as i64 + 1) + &v / Rational::from(k as i64 + 2);
            lhs == self.alphas[k]
        });
        if n >= 2 {
            let deltas_ok = self.delta_sequence().deltas.iter().all(Rational::is_zero);
            assert_eq!(
                rank_ok, deltas_ok,
                "rank test and delta-vanishing test disagree"
            );
        }
        LinearConsistency {
            is_linear: rank_ok,
            coefficients: rank_ok.then_some((u, v)),
        }
    }
}

impl DeltaSequence {
    pub fn len(&self) -> usize {
        self.deltas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.deltas.is_empty()
    }
}

/// Exact moments α₀…α_n of a polynomial, the main oracle for everything that
/// claims to reproduce moments.
pub fn moments_of_polynomial(p: &Polynomial, n: usize) -> MomentVector {
    let zero = Rational::zero();
    let one = Rational::one();
    MomentVector::new(
        (0..=n)
            .map(|k| poly_moment_integral(p, k, &zero, &one))
            .collect(),
    )
}

/// Parses a comma-separated list of rational literals.
pub fn parse_moments(text: &str) -> Result<MomentVector> {
    let mut alphas = Vec::new();
    let mut offset = 0;
    for token in text.split(',') {
        let trimmed = token.trim();
        let position = offset + (token.len() - token.trim_start().len());
        let value: Rational = trimmed.parse().map_err(|e| match e {
            Error::Parse { message, .. } => Error::Parse { position, message },
            other => other,
        })?;
        alphas.push(value);
        offset += token.len() + 1;
    }
    Ok(MomentVector::new(alphas))
}

pub fn serialize_moments(m: &MomentVector) -> String {
    m.alphas()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
