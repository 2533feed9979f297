//! Widest certificate over moments constrained to the cube [−1, 1]^(n+1).
//!
//! Each D_{k,n} is linear in α, so the spread max_k D − min_k D is a maximum
//! of linear forms and attains its cube maximum at a sign vertex. Maximizing
//! every ordered difference D_i − D_j needs only the coefficient vectors:
//! the optimum of a linear form over the cube is the sum of the absolute
//! coefficients, attained where each moment carries the coefficient's sign.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::bernstein::{d_linear_form, d_table};
use crate::error::{Error, Result};
use crate::moments::MomentVector;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtremalResult {
    pub n: usize,
    pub max_width: Rational,
    /// A ±1 vertex of the moment cube attaining the width.
    pub argmax: MomentVector,
    /// (k_max, k_min): the pair with D_{k_max} − D_{k_min} = max_width at
    /// `argmax`.
    pub pair: (usize, usize),
}

impl Serialize for ExtremalResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ExtremalResult", 4)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("max_width", &self.max_width)?;
        st.serialize_field("argmax", self.argmax.alphas())?;
        st.serialize_field("pair", &[self.pair.0, self.pair.1])?;
        st.end()
    }
}

/// Per-degree report on whether the alternating vertex (1, −1, 1, …) attains
/// the maximum spread.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AlternatingCheck {
    pub n: usize,
    pub alternating_width: Rational,
    pub max_width: Rational,
    pub attains: bool,
}

/// Vertex signs ordered with +1 before −1, for deterministic tie-breaking.
fn vertex_rank(v: &[Rational]) -> Vec<u8> {
    v.iter().map(|x| u8::from(x.is_negative())).collect()
}

/// Maximizes B_n − A_n over α ∈ [−1, 1]^(n+1).
///
/// Every ordered pair (i, j) contributes the linear form D_i − D_j whose
/// cube maximum is the sum of absolute coefficients at the matching sign
/// vertex (zero coefficients resolve to +1). Ties between pairs are broken
/// by the lexicographically smallest argmax under +1 < −1, then by the
/// smallest (i, j); since the two pairs (i, j) and (j, i) reach the same
/// width at opposite vertices, the winner always starts with +1.
pub fn maximize_spread(n: usize) -> Result<ExtremalResult> {
    if n < 2 {
        return Err(Error::DegreeTooSmall {
            actual: n,
            required: 2,
        });
    }
    let forms: Vec<Vec<Rational>> = (1..=n)
        .map(|k| d_linear_form(n, k).expect("1 <= k <= n"))
        .collect();

    let mut best: Option<ExtremalResult> = None;
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let diff: Vec<Rational> = forms[i - 1]
                .iter()
                .zip(&forms[j - 1])
                .map(|(a, b)| a - b)
                .collect();
            let width: Rational = diff.iter().map(Rational::abs).sum();
            let vertex: Vec<Rational> = diff
                .iter()
                .map(|c| {
                    if c.is_negative() {
                        Rational::from(-1)
                    } else {
                        Rational::from(1)
                    }
                })
                .collect();
            let candidate = ExtremalResult {
                n,
                max_width: width,
                argmax: MomentVector::new(vertex),
                pair: (i, j),
            };
            let replace = match &best {
                None => true,
                Some(current) => {
                    use std::cmp::Ordering::*;
                    match candidate.max_width.cmp(&current.max_width) {
                        Greater => true,
                        Less => false,
                        Equal => match vertex_rank(candidate.argmax.alphas())
                            .cmp(&vertex_rank(current.argmax.alphas()))
                        {
                            Less => true,
                            Greater => false,
                            Equal => candidate.pair < current.pair,
                        },
                    }
                }
            };
            if replace {
                best = Some(candidate);
            }
        }
    }
    Ok(best.expect("n >= 2 has at least one pair"))
}

/// Width of the certificate at a specific moment vector.
fn spread_at(m: &MomentVector) -> Rational {
    let table = d_table(m);
    let (_, a) = table.argmin();
    let (_, b) = table.argmax();
    b - a
}

/// For each 2 <= n <= n_max, reports whether the alternating vertex attains
/// `maximize_spread(n)`. No claim is made beyond the computed range.
pub fn alternating_conjecture_check(n_max: usize) -> Result<Vec<AlternatingCheck>> {
    if n_max < 2 {
        return Err(Error::DegreeTooSmall {
            actual: n_max,
            required: 2,
        });
    }
    (2..=n_max)
        .map(|n| {
            let alternating = MomentVector::new(
                (0..=n)
                    .map(|k| Rational::from(if k % 2 == 0 { 1 } else { -1 }))
                    .collect(),
            );
            let alternating_width = spread_at(&alternating);
            let max_width = maximize_spread(n)?.max_width;
            Ok(AlternatingCheck {
                n,
                attains: alternating_width == max_width,
                alternating_width,
                max_width,
            })
        })
        .collect()
}
