//! Derivative functionals from Bernstein weights.
//!
//! Integrating f′ against the nonnegative weight x^k(1−x)^{n+1−k} and
//! normalizing by the weight's mass produces a value D_{k,n} that f′ must
//! attain somewhere on (0, 1). Integration by parts turns each D_{k,n} into
//! a linear form in the moments α₀…α_n, which is how everything here is
//! computed: exact monomial expansion, then a dot product with the moments.
//!
//! The same mechanism with weights of degree n+2 (so the weight and its
//! first derivative vanish at both endpoints) yields guaranteed values of
//! the second derivative.

use num::bigint::BigInt;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::moments::MomentVector;
use crate::polynomial::Polynomial;
use crate::rational::Rational;

/// The values D_{1,n}…D_{n,n}; empty when n = 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FunctionalTable {
    n: usize,
    values: Vec<Rational>,
}

/// Guaranteed second-derivative values for k = 2…n; empty when n < 2.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SecondDerivativeTable {
    n: usize,
    values: Vec<Rational>,
}

impl FunctionalTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// D_{k,n}; k is 1-based to match the weight exponent.
    pub fn value(&self, k: usize) -> &Rational {
        &self.values[k - 1]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// (k, D_{k,n}) minimizing the value; ties go to the smallest k.
    pub fn argmin(&self) -> (usize, &Rational) {
        self.extreme(|candidate, best| candidate < best)
    }

    /// (k, D_{k,n}) maximizing the value; ties go to the smallest k.
    pub fn argmax(&self) -> (usize, &Rational) {
        self.extreme(|candidate, best| candidate > best)
    }

    fn extreme(&self, better: impl Fn(&Rational, &Rational) -> bool) -> (usize, &Rational) {
        assert!(!self.values.is_empty(), "empty functional table");
        let mut best = (1, &self.values[0]);
        for (i, v) in self.values.iter().enumerate().skip(1) {
            if better(v, best.1) {
                best = (i + 1, v);
            }
        }
        best
    }
}

impl SecondDerivativeTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Value for weight exponent k, 2 <= k <= n.
    pub fn value(&self, k: usize) -> &Rational {
        &self.values[k - 2]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

struct KeyedValues<'a> {
    first_k: usize,
    values: &'a [Rational],
}

impl Serialize for KeyedValues<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.values.len()))?;
        for (i, v) in self.values.iter().enumerate() {
            map.serialize_entry(&(self.first_k + i).to_string(), v)?;
        }
        map.end()
    }
}

impl Serialize for FunctionalTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("FunctionalTable", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field(
            "D",
            &KeyedValues {
                first_k: 1,
                values: &self.values,
            },
        )?;
        st.end()
    }
}

impl Serialize for SecondDerivativeTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SecondDerivativeTable", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field(
            "D2",
            &KeyedValues {
                first_k: 2,
                values: &self.values,
            },
        )?;
        st.end()
    }
}

fn binomial(n: usize, k: usize) -> Rational {
    Rational::from_bigint(num::integer::binomial(BigInt::from(n), BigInt::from(k)))
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * BigInt::from(i))
}

/// Monomial expansion of x^k (1−x)^(m−k).
pub(crate) fn weight_poly(k: usize, m: usize) -> Polynomial {
    assert!(k <= m);
    let mut coeffs = vec![Rational::zero(); m + 1];
    for j in 0..=m - k {
        let term = binomial(m - k, j);
        coeffs[k + j] = if j % 2 == 0 { term } else { -term };
    }
    Polynomial::new(coeffs)
}

/// The Bernstein basis polynomial C(n,ν) x^ν (1−x)^(n−ν), expanded.
pub fn bernstein_poly(v: usize, n: usize) -> Result<Polynomial> {
    if v > n {
        return Err(Error::IndexOutOfRange { index: v, n });
    }
    Ok(weight_poly(v, n).scale(&binomial(n, v)))
}

/// Exact ∫₀¹ x^k (1−x)^(n+1−k) dx = 1/((n+2) · C(n+1, k)), for 1 <= k <= n.
pub fn beta_norm(k: usize, n: usize) -> Result<Rational> {
    if k < 1 || k > n {
        return Err(Error::IndexOutOfRange { index: k, n });
    }
    Ok((Rational::from(n as i64 + 2) * binomial(n + 1, k)).recip())
}

/// Coefficients of D_{k,n} as a linear form in α₀…α_n:
/// (n+1)(n+2) times the expansion of b_{k,n} − b_{k−1,n}.
pub fn d_linear_form(n: usize, k: usize) -> Result<Vec<Rational>> {
    if k < 1 || k > n {
        return Err(Error::IndexOutOfRange { index: k, n });
    }
    let diff = &bernstein_poly(k, n)? - &bernstein_poly(k - 1, n)?;
    let scale = Rational::from(((n + 1) * (n + 2)) as i64);
    Ok((0..=n).map(|i| diff.coeff(i) * &scale).collect())
}

/// D_{k,n} evaluated on a moment vector, for 1 <= k <= n.
pub fn d_value(m: &MomentVector, k: usize) -> Result<Rational> {
    let form = d_linear_form(m.n(), k)?;
    Ok(form
        .iter()
        .zip(m.alphas())
        .map(|(c, a)| c * a)
        .sum())
}

/// All D_{k,n} for k = 1…n.
pub fn d_table(m: &MomentVector) -> FunctionalTable {
    let n = m.n();
    let values = (1..=n)
        .map(|k| d_value(m, k).expect("1 <= k <= n"))
        .collect();
    FunctionalTable { n, values }
}

/// Projects a degree-(n+1) table down to degree n via the convex recurrence
/// D_{k,n} = ((n+2−k) D_{k,n+1} + (k+1) D_{k+1,n+1}) / (n+3).
///
/// Must equal the table of the truncated moment vector.
pub fn convexity_project(table: &FunctionalTable) -> FunctionalTable {
    assert!(table.n >= 2, "projection needs a table of degree >= 2");
    let np1 = table.n; // degree of the input table
    let n = np1 - 1;
    let denom = Rational::from(n as i64 + 3);
    let values = (1..=n)
        .map(|k| {
            let w1 = Rational::from((n + 2 - k) as i64);
            let w2 = Rational::from(k as i64 + 1);
            (w1 * table.value(k) + w2 * table.value(k + 1)) / &denom
        })
        .collect();
    FunctionalTable { n, values }
}

/// Both sides of Δ_k = (D_{k+2,k+2} − D_{k+1,k+1}) / (2(k+3)), computed
/// independently (deltas from the moments module, the diagonal values from
/// truncated tables). Callers assert equality.
pub fn connection_check(m: &MomentVector, k: usize) -> Result<(Rational, Rational)> {
    let lhs = m.delta(k)?;
    let upper = d_value(&m.truncated(k + 2), k + 2)?;
    let lower = d_value(&m.truncated(k + 1), k + 1)?;
    let rhs = (upper - lower) / Rational::from(2 * (k as i64 + 3));
    Ok((lhs, rhs))
}

/// D_{n,n} via the telescoped sum 6(2α₁−α₀) + 2 Σ_{k<=n−2} (k+3) Δ_k.
/// Must equal `d_value(m, n)`.
pub fn d_diag_via_deltas(m: &MomentVector) -> Rational {
    let n = m.n();
    assert!(n >= 1, "diagonal value needs n >= 1");
    let base = Rational::from(6)
        * (Rational::from(2) * m.alpha(1) - m.alpha(0));
    let mut acc = base;
    for k in 0..n.saturating_sub(1) {
        let delta = m.delta(k).expect("k + 2 <= n");
        acc += &(Rational::from(2 * (k as i64 + 3)) * delta);
    }
    acc
}

/// Both sides of k·α_{k−1} = (k+1)·α_k − D_{k,k}/((k+1)(k+2)), for
/// 1 <= k <= n. Callers assert equality.
pub fn monomial_identity_check(m: &MomentVector, k: usize) -> Result<(Rational, Rational)> {
    let n = m.n();
    if k < 1 || k > n {
        return Err(Error::IndexOutOfRange { index: k, n });
    }
    let lhs = Rational::from(k as i64) * m.alpha(k - 1);
    let diag = d_value(&m.truncated(k), k)?;
    let rhs = Rational::from(k as i64 + 1) * m.alpha(k)
        - diag / Rational::from(((k + 1) * (k + 2)) as i64);
    Ok((lhs, rhs))
}

/// Guaranteed second-derivative values from weights x^k (1−x)^(n+2−k),
/// 2 <= k <= n. Both the weight and its derivative vanish at the endpoints,
/// so integrating f·w″ and normalizing by ∫w is a mean value of f″.
pub fn second_derivative_values(m: &MomentVector) -> Result<SecondDerivativeTable> {
    let n = m.n();
    if n < 2 {
        return Err(Error::DegreeTooSmall {
            actual: n,
            required: 2,
        });
    }
    let values = (2..=n)
        .map(|k| {
            let w = weight_poly(k, n + 2);
            let second = w.derivative().derivative();
            let numerator: Rational = second
                .coeffs()
                .iter()
                .zip(m.alphas())
                .map(|(c, a)| c * a)
                .sum();
            // ∫₀¹ x^k (1−x)^(n+2−k) dx = k! (n+2−k)! / (n+3)!
            let mass = Rational::from_big(
                factorial(k) * factorial(n + 2 - k),
                factorial(n + 3),
            );
            numerator / mass
        })
        .collect();
    Ok(SecondDerivativeTable { n, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moments::moments_of_polynomial;
    use crate::polynomial::poly_moment_integral;
    use proptest::prelude::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::ratio(p, q)
    }

    fn m(values: &[i64]) -> MomentVector {
        MomentVector::from_ints(values)
    }

    /// Independent oracle from the defining integral: for polynomial f,
    /// D_{k,n} = −(n+2) ∫₀¹ f(x) · d/dx b_{k,n+1}(x) dx.
    fn d_oracle(f: &Polynomial, n: usize, k: usize) -> Rational {
        let basis = bernstein_poly(k, n + 1).unwrap().derivative();
        let product = f * &basis;
        let integral = poly_moment_integral(&product, 0, &Rational::zero(), &Rational::one());
        Rational::from(-(n as i64 + 2)) * integral
    }

    #[test]
    fn bernstein_poly_examples() {
        assert_eq!(bernstein_poly(1, 2).unwrap(), Polynomial::from_ints(&[0, 2, -2]));
        assert!(bernstein_poly(3, 2).is_err());

        // partition of unity at n = 5
        let sum = (0..=5).fold(Polynomial::zero(), |acc, v| {
            &acc + &bernstein_poly(v, 5).unwrap()
        });
        assert_eq!(sum, Polynomial::one());

        let zero = Rational::zero();
        let one = Rational::one();
        assert_eq!(bernstein_poly(0, 4).unwrap().eval(&zero), one);
        assert_eq!(bernstein_poly(4, 4).unwrap().eval(&one), one);
    }

    #[test]
    fn beta_norm_examples() {
        assert_eq!(beta_norm(1, 2).unwrap(), r(1, 12));
        assert_eq!(beta_norm(1, 1).unwrap(), r(1, 6));
        assert_eq!(beta_norm(2, 3).unwrap(), r(1, 30));
        assert!(beta_norm(0, 3).is_err());
        assert!(beta_norm(4, 3).is_err());
    }

    #[test]
    fn beta_norm_matches_direct_integral() {
        for n in 1..=8 {
            for k in 1..=n {
                let w = weight_poly(k, n + 1);
                let direct = poly_moment_integral(&w, 0, &Rational::zero(), &Rational::one());
                assert_eq!(beta_norm(k, n).unwrap(), direct, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn d_value_examples() {
        let v = m(&[1, 2, 3]);
        assert_eq!(d_value(&v, 1).unwrap(), Rational::from(-24));
        assert_eq!(d_value(&v, 2).unwrap(), Rational::from(60));

        assert_eq!(d_value(&m(&[1, 1]), 1).unwrap(), Rational::from(6));

        let v = m(&[1, 2, 3, 4]);
        assert_eq!(d_value(&v, 1).unwrap(), Rational::zero());
        assert_eq!(d_value(&v, 2).unwrap(), Rational::from(-60));
        assert_eq!(d_value(&v, 3).unwrap(), Rational::from(140));

        assert!(d_value(&v, 0).is_err());
        assert!(d_value(&v, 4).is_err());
    }

    #[test]
    fn d_table_examples() {
        assert_eq!(
            d_table(&m(&[1, 2, 3])).values(),
            &[Rational::from(-24), Rational::from(60)]
        );
        // moments of x^2
        let sq = MomentVector::new(vec![r(1, 3), r(1, 4), r(1, 5)]);
        assert_eq!(d_table(&sq).values(), &[r(4, 5), r(6, 5)]);
    }

    #[test]
    fn table_json_shape() {
        let t = d_table(&m(&[1, 2, 3, 4]));
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"{"n":3,"D":{"1":"0","2":"-60","3":"140"}}"#
        );
    }

    #[test]
    fn convexity_projection_examples() {
        let t3 = d_table(&m(&[1, 2, 3, 4]));
        let t2 = convexity_project(&t3);
        assert_eq!(t2.values(), &[Rational::from(-24), Rational::from(60)]);
        assert_eq!(t2, d_table(&m(&[1, 2, 3])));

        let t1 = convexity_project(&t2);
        assert_eq!(t1.values(), &[Rational::from(18)]);
    }

    #[test]
    fn connection_examples() {
        let (lhs, rhs) = connection_check(&m(&[1, 2, 3]), 0).unwrap();
        assert_eq!(lhs, Rational::from(7));
        assert_eq!(lhs, rhs);

        let (lhs, rhs) = connection_check(&m(&[1, 2, 3, 4]), 1).unwrap();
        assert_eq!(lhs, Rational::from(10));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn diagonal_via_deltas_examples() {
        assert_eq!(d_diag_via_deltas(&m(&[1, 2, 3, 4])), Rational::from(140));
        assert_eq!(d_diag_via_deltas(&m(&[1, 1])), Rational::from(6));
        assert_eq!(d_diag_via_deltas(&m(&[1, 2, 3])), Rational::from(60));
    }

    #[test]
    fn monomial_identity_examples() {
        let (lhs, rhs) = monomial_identity_check(&m(&[1, 2]), 1).unwrap();
        assert_eq!(lhs, Rational::from(1));
        assert_eq!(lhs, rhs);

        let (lhs, rhs) = monomial_identity_check(&m(&[1, 2, 3]), 2).unwrap();
        assert_eq!(lhs, Rational::from(4));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn second_derivative_examples() {
        let t = second_derivative_values(&m(&[1, 2, 3, 4])).unwrap();
        assert_eq!(t.values(), &[Rational::from(-360), Rational::from(1200)]);
        assert_eq!(t.value(2), &Rational::from(-360));
        assert_eq!(t.value(3), &Rational::from(1200));

        let t = second_derivative_values(&m(&[1, 2, 3])).unwrap();
        assert_eq!(t.values(), &[Rational::from(420)]);

        assert!(second_derivative_values(&m(&[1, 1])).is_err());

        // moments of a linear function: second derivative vanishes
        let lm = moments_of_polynomial(&Polynomial::from_ints(&[3, -2]), 4);
        let t = second_derivative_values(&lm).unwrap();
        assert!(t.values().iter().all(Rational::is_zero));
    }

    #[test]
    fn second_derivative_matches_paper_n3_forms() {
        // k=3 weight gives 120(3α₁ − 12α₂ + 10α₃); k=2 gives
        // 120(α₀ − 9α₁ + 18α₂ − 10α₃)
        let v = m(&[2, -3, 5, 7]);
        let t = second_derivative_values(&v).unwrap();
        let u = Rational::from(120)
            * (Rational::from(3 * -3) + Rational::from(-12 * 5) + Rational::from(10 * 7));
        let w = Rational::from(120)
            * (Rational::from(2) + Rational::from(-9 * -3) + Rational::from(18 * 5)
                + Rational::from(-10 * 7));
        assert_eq!(t.value(3), &u);
        assert_eq!(t.value(2), &w);
    }

    fn arb_moments(min_n: usize, max_n: usize) -> impl Strategy<Value = MomentVector> {
        (min_n..=max_n).prop_flat_map(|n| {
            proptest::collection::vec((-40i64..=40, 1i64..=8).prop_map(|(p, q)| r(p, q)), n + 1)
                .prop_map(MomentVector::new)
        })
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((-30i64..=30, 1i64..=6).prop_map(|(p, q)| r(p, q)), 1..=max_deg + 1)
            .prop_map(Polynomial::new)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn oracle_equivalence(f in arb_poly(6), n in 1usize..=6) {
            let mv = moments_of_polynomial(&f, n);
            for k in 1..=n {
                prop_assert_eq!(d_value(&mv, k).unwrap(), d_oracle(&f, n, k));
            }
        }

        #[test]
        fn linear_functions_have_constant_tables(
            u in -20i64..=20,
            v in -20i64..=20,
            n in 1usize..=6,
        ) {
            let mv = moments_of_polynomial(&Polynomial::from_ints(&[u, v]), n);
            let slope = Rational::from(v);
            for d in d_table(&mv).values() {
                prop_assert_eq!(d, &slope);
            }
        }

        #[test]
        fn reflection_duality(v in arb_moments(1, 6)) {
            let n = v.n();
            let g = v.reflect();
            for k in 1..=n {
                prop_assert_eq!(
                    d_value(&g, k).unwrap(),
                    -d_value(&v, n + 1 - k).unwrap()
                );
            }
        }

        #[test]
        fn negation_duality(v in arb_moments(1, 6)) {
            let neg = v.negate();
            for k in 1..=v.n() {
                prop_assert_eq!(d_value(&neg, k).unwrap(), -d_value(&v, k).unwrap());
            }
        }

        #[test]
        fn connection_holds(v in arb_moments(2, 8)) {
            for k in 0..=v.n() - 2 {
                let (lhs, rhs) = connection_check(&v, k).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn diagonal_via_deltas_matches(v in arb_moments(1, 8)) {
            prop_assert_eq!(d_diag_via_deltas(&v), d_value(&v, v.n()).unwrap());
        }

        #[test]
        fn monomial_identity_holds(v in arb_moments(1, 8)) {
            for k in 1..=v.n() {
                let (lhs, rhs) = monomial_identity_check(&v, k).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn projection_matches_truncation(v in arb_moments(2, 8)) {
            let projected = convexity_project(&d_table(&v));
            prop_assert_eq!(projected, d_table(&v.truncated(v.n() - 1)));
        }

        #[test]
        fn n3_convex_combinations(v in arb_moments(3, 3)) {
            // with (E, D, C) = (D_{1,3}, D_{2,3}, D_{3,3}) and (A, B) the n=2
            // functionals of the truncation: A = (2/5)D + (3/5)E and
            // B = (3/5)C + (2/5)D
            let e = d_value(&v, 1).unwrap();
            let d = d_value(&v, 2).unwrap();
            let c = d_value(&v, 3).unwrap();
            let t2 = v.truncated(2);
            let a = d_value(&t2, 1).unwrap();
            let b = d_value(&t2, 2).unwrap();
            prop_assert_eq!(a, r(2, 5) * &d + r(3, 5) * e);
            prop_assert_eq!(b, r(3, 5) * c + r(2, 5) * &d);
        }

        #[test]
        fn second_derivative_for_quadratics(
            c0 in -10i64..=10,
            c1 in -10i64..=10,
            c2 in -10i64..=10,
            n in 2usize..=5,
        ) {
            // for f = c0 + c1 x + c2 x^2 the second derivative is constant,
            // so every table entry must equal 2 c2
            let f = Polynomial::from_ints(&[c0, c1, c2]);
            let mv = moments_of_polynomial(&f, n);
            let expected = Rational::from(2 * c2);
            for value in second_derivative_values(&mv).unwrap().values() {
                prop_assert_eq!(value, &expected);
            }
        }
    }
}
