//! The certified derivative-range interval and its case analysis.
//!
//! For n >= 2 the certificate is the convex hull [A_n, B_n] of the
//! functional table: every continuously differentiable function with the
//! prescribed moments has a derivative whose range covers it. For n = 1 the
//! certificate collapses to the single value 12α₁ − 6α₀, and a lone moment
//! certifies nothing.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::bernstein::{d_table, d_value};
use crate::error::{Error, Result};
use crate::moments::MomentVector;
use crate::rational::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum CertStatus {
    NoCertificate,
    Degenerate,
    Interval,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RangeCertificate {
    pub n: usize,
    pub status: CertStatus,
    /// A_n; absent only for `NoCertificate`.
    pub lower: Option<Rational>,
    /// B_n; absent only for `NoCertificate`.
    pub upper: Option<Rational>,
    pub argmin_k: Option<usize>,
    pub argmax_k: Option<usize>,
}

impl RangeCertificate {
    /// (A, B) when the certificate exists.
    pub fn interval(&self) -> Option<(&Rational, &Rational)> {
        self.lower.as_ref().zip(self.upper.as_ref())
    }

    pub fn lower_bound(&self) -> &Rational {
        self.lower.as_ref().expect("certificate has no lower bound")
    }

    pub fn upper_bound(&self) -> &Rational {
        self.upper.as_ref().expect("certificate has no upper bound")
    }

    /// Whether this certificate interval is contained in `outer`'s.
    pub fn contained_in(&self, outer: &RangeCertificate) -> bool {
        match (self.interval(), outer.interval()) {
            (Some((a, b)), Some((oa, ob))) => oa <= a && b <= ob,
            _ => false,
        }
    }
}

impl Serialize for RangeCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("RangeCertificate", 7)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("status", &self.status)?;
        st.serialize_field("A", &self.lower)?;
        st.serialize_field("B", &self.upper)?;
        st.serialize_field("A_approx", &self.lower.as_ref().map(Rational::to_f64))?;
        st.serialize_field("B_approx", &self.upper.as_ref().map(Rational::to_f64))?;
        st.serialize_field("argmin_k", &self.argmin_k)?;
        st.serialize_field("argmax_k", &self.argmax_k)?;
        st.end()
    }
}

/// Hull of the functional table. n = 0 certifies nothing; n = 1 yields the
/// single guaranteed value 12α₁ − 6α₀. Ties in argmin/argmax go to the
/// smallest k.
pub fn certificate(m: &MomentVector) -> RangeCertificate {
    let n = m.n();
    if n == 0 {
        return RangeCertificate {
            n,
            status: CertStatus::NoCertificate,
            lower: None,
            upper: None,
            argmin_k: None,
            argmax_k: None,
        };
    }
    let table = d_table(m);
    let (kmin, a) = table.argmin();
    let (kmax, b) = table.argmax();
    if n == 1 {
        let single = Rational::from(12) * m.alpha(1) - Rational::from(6) * m.alpha(0);
        assert_eq!(&single, a, "n=1 value must equal D_{{1,1}}");
    }
    RangeCertificate {
        n,
        status: if a == b {
            CertStatus::Degenerate
        } else {
            CertStatus::Interval
        },
        lower: Some(a.clone()),
        upper: Some(b.clone()),
        argmin_k: Some(kmin),
        argmax_k: Some(kmax),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SharpnessStatus {
    ProvenSharp,
    Conjectured,
}

/// Which row of the case analysis applies.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum CaseId {
    /// n = 2: the single theorem with a sign split on Δ₀.
    #[serde(rename = "theorem_2")]
    Theorem2,
    #[serde(rename = "(i)")]
    RowI,
    #[serde(rename = "(ii)")]
    RowII,
    #[serde(rename = "(iii)")]
    RowIII,
    #[serde(rename = "(iv)")]
    RowIV,
    #[serde(rename = "(v)")]
    RowV,
    #[serde(rename = "(vi)")]
    RowVI,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CaseClassification {
    pub case: CaseId,
    /// All rows whose sign hypothesis holds; `case` is the lowest-numbered.
    pub matching_cases: Vec<CaseId>,
    #[serde(rename = "A")]
    pub a: Rational,
    #[serde(rename = "B")]
    pub b: Rational,
    #[serde(rename = "A_status")]
    pub a_status: SharpnessStatus,
    #[serde(rename = "B_status")]
    pub b_status: SharpnessStatus,
}

/// n = 2 case analysis. Δ₀ > 0 gives (A, B) = (12(4α₁−α₀−3α₂), 12(3α₂−2α₁)),
/// both sharp; Δ₀ < 0 swaps them; Δ₀ = 0 collapses to A = B = 12(3α₂−2α₁).
/// Always agrees with `certificate`.
pub fn classify_n2(m: &MomentVector) -> Result<CaseClassification> {
    if m.n() != 2 {
        return Err(Error::WrongDegree {
            expected: "2",
            actual: m.n(),
        });
    }
    let delta0 = m.delta(0).expect("n = 2");
    let lower_form = d_value(m, 1).expect("k=1"); // 12(4α₁ − α₀ − 3α₂)
    let upper_form = d_value(m, 2).expect("k=2"); // 12(3α₂ − 2α₁)
    let (a, b) = if delta0.is_negative() {
        (upper_form, lower_form)
    } else {
        (lower_form, upper_form)
    };
    Ok(CaseClassification {
        case: CaseId::Theorem2,
        matching_cases: vec![CaseId::Theorem2],
        a,
        b,
        a_status: SharpnessStatus::ProvenSharp,
        b_status: SharpnessStatus::ProvenSharp,
    })
}

/// n = 3 case analysis on the signs of (Δ₀, Δ₁).
///
/// With (E, D, C) = (D_{1,3}, D_{2,3}, D_{3,3}):
///   (i)   Δ₀ >= 0, Δ₁ <= 0      → (A, B) = (E, D), B proven sharp
///   (ii)  0 <= Δ₀ <= Δ₁         → (A, B) = (D, C), A proven sharp
///   (iii) 0 <= Δ₁ <= Δ₀         → (A, B) = (E, C)
///   (iv)  Δ₀ <= 0, Δ₁ >= 0      → (A, B) = (D, E), A proven sharp
///   (v)   Δ₁ <= Δ₀ <= 0         → (A, B) = (C, D), B proven sharp
///   (vi)  Δ₀ <= Δ₁ <= 0         → (A, B) = (C, E)
///
/// Rows overlap on sign boundaries; the lowest-numbered matching row wins and
/// all matches are reported. The (iv)/(v) sharp bounds follow from (i)/(ii)
/// by negating f. Δ₀ = Δ₁ = 0 means the moments are linear: A = B = C, both
/// proven.
pub fn classify_n3(m: &MomentVector) -> Result<CaseClassification> {
    if m.n() != 3 {
        return Err(Error::WrongDegree {
            expected: "3",
            actual: m.n(),
        });
    }
    let d0 = m.delta(0).expect("n = 3");
    let d1 = m.delta(1).expect("n = 3");
    let e = d_value(m, 1).expect("k=1");
    let d = d_value(m, 2).expect("k=2");
    let c = d_value(m, 3).expect("k=3");

    let zero = Rational::zero();
    let rows = [
        (CaseId::RowI, d0 >= zero && d1 <= zero),
        (CaseId::RowII, zero <= d0 && d0 <= d1),
        (CaseId::RowIII, zero <= d1 && d1 <= d0),
        (CaseId::RowIV, d0 <= zero && d1 >= zero),
        (CaseId::RowV, d1 <= d0 && d0 <= zero),
        (CaseId::RowVI, d0 <= d1 && d1 <= zero),
    ];
    let matching_cases: Vec<CaseId> = rows
        .iter()
        .filter(|(_, hit)| *hit)
        .map(|(id, _)| *id)
        .collect();
    let case = *matching_cases.first().expect("sign patterns cover the plane");

    let proven = SharpnessStatus::ProvenSharp;
    let conj = SharpnessStatus::Conjectured;
    let (a, b, a_status, b_status) = match case {
        CaseId::RowI => (e, d, conj, proven),
        CaseId::RowII => (d, c, proven, conj),
        CaseId::RowIII => (e, c, conj, conj),
        CaseId::RowIV => (d, e, proven, conj),
        CaseId::RowV => (c, d, conj, proven),
        CaseId::RowVI => (c, e, conj, conj),
        CaseId::Theorem2 => unreachable!(),
    };
    let (a_status, b_status) = if d0.is_zero() && d1.is_zero() {
        assert_eq!(a, b, "vanishing deltas force a degenerate certificate");
        (proven, proven)
    } else {
        (a_status, b_status)
    };
    Ok(CaseClassification {
        case,
        matching_cases,
        a,
        b,
        a_status,
        b_status,
    })
}

/// The proven window (12|Δ₀|, 32|Δ₀|) for the longest guaranteed sub-interval
/// length at n = 2.
pub fn problem2_bounds_n2(m: &MomentVector) -> Result<(Rational, Rational)> {
    if m.n() != 2 {
        return Err(Error::WrongDegree {
            expected: "2",
            actual: m.n(),
        });
    }
    let abs = m.delta(0).expect("n = 2").abs();
    Ok((Rational::from(12) * &abs, Rational::from(32) * abs))
}

/// Checks [A_{n−1}, B_{n−1}] ⊆ [A_n, B_n] for the vector and its one-shorter
/// truncation. Requires n >= 3 so both certificates are genuine hulls. The
/// nesting is a theorem; this always returns true and exists as an executable
/// cross-check.
pub fn nesting_check(m: &MomentVector) -> Result<bool> {
    let n = m.n();
    if n < 3 {
        return Err(Error::WrongDegree {
            expected: "at least 3",
            actual: n,
        });
    }
    let inner = certificate(&m.truncated(n - 1));
    let outer = certificate(m);
    Ok(inner.contained_in(&outer))
}

/// Note attached to proper intervals: the certificate can never be the whole
/// story for the guaranteed-length problem.
pub fn strictness_annotation(cert: &RangeCertificate) -> Option<&'static str> {
    match cert.status {
        CertStatus::Interval => Some(
            "every continuously differentiable function with these moments has a derivative \
             range strictly longer than B - A; the certified interval is not attained",
        ),
        _ => None,
    }
}
