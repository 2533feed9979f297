//! Real-root isolation on (0, 1) by Sturm chains and bisection.
//!
//! Used to locate the critical points of an interpolant's derivative. The
//! polynomial is reduced to its square-free part, endpoint roots are divided
//! out (the callers treat endpoints separately), and every returned interval
//! contains exactly one simple root and has width at most the requested
//! target.

use crate::polynomial::Polynomial;
use crate::rational::Rational;

fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let (_, r) = x.div_rem(&y);
        x = y;
        y = r;
    }
    if x.is_zero() {
        x
    } else {
        // monic normalization
        let lead = x.coeff(x.degree().expect("nonzero"));
        x.scale(&lead.recip())
    }
}

fn square_free_part(p: &Polynomial) -> Polynomial {
    if p.degree().unwrap_or(0) < 2 {
        return p.clone();
    }
    let g = poly_gcd(p, &p.derivative());
    if g.degree() == Some(0) {
        return p.clone();
    }
    let (q, r) = p.div_rem(&g);
    debug_assert!(r.is_zero());
    q
}

fn sturm_chain(p: &Polynomial) -> Vec<Polynomial> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let len = chain.len();
        if chain[len - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let (_, r) = chain[len - 2].div_rem(&chain[len - 1]);
        chain.push(-&r);
    }
}

fn sign_variations(chain: &[Polynomial], x: &Rational) -> usize {
    let mut variations = 0;
    let mut prev: Option<bool> = None; // sign as is_negative
    for p in chain {
        let v = p.eval(x);
        if v.is_zero() {
            continue;
        }
        let neg = v.is_negative();
        if prev.is_some_and(|p| p != neg) {
            variations += 1;
        }
        prev = Some(neg);
    }
    variations
}

/// A split point strictly inside (a, b) where `p` does not vanish. Tries a
/// short ladder of rational cuts; `p` has finitely many roots so one hits.
fn split_point(p: &Polynomial, a: &Rational, b: &Rational) -> Rational {
    let gap = b - a;
    for denom in [2i64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let cand = a + &gap / Rational::from(denom);
        if !p.eval(&cand).is_zero() {
            return cand;
        }
    }
    unreachable!("a nonzero polynomial of bounded degree cannot vanish at 12 points");
}

/// Isolating intervals, each of width <= `width`, for every root of `p` in
/// the open interval (0, 1). Roots at 0 or 1 are excluded by construction.
pub(crate) fn isolate_roots_in_unit_interval(
    p: &Polynomial,
    width: &Rational,
) -> Vec<(Rational, Rational)> {
    assert!(width.is_positive());
    if p.is_zero() || p.degree() == Some(0) {
        return Vec::new();
    }
    let mut q = square_free_part(p);
    let zero = Rational::zero();
    let one = Rational::one();
    // divide out endpoint roots; callers evaluate endpoints directly
    if q.eval(&zero).is_zero() {
        let (quot, r) = q.div_rem(&Polynomial::from_ints(&[0, 1]));
        debug_assert!(r.is_zero());
        q = quot;
    }
    if q.eval(&one).is_zero() {
        let (quot, r) = q.div_rem(&Polynomial::from_ints(&[-1, 1]));
        debug_assert!(r.is_zero());
        q = quot;
    }
    if q.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }

    let chain = sturm_chain(&q);
    let mut out = Vec::new();
    let mut stack = vec![(
        zero.clone(),
        one.clone(),
        sign_variations(&chain, &zero),
        sign_variations(&chain, &one),
    )];
    while let Some((a, b, va, vb)) = stack.pop() {
        let count = va - vb;
        if count == 0 {
            continue;
        }
        if count == 1 && &(&b - &a) <= width {
            out.push((a, b));
            continue;
        }
        let mid = split_point(&q, &a, &b);
        let vm = sign_variations(&chain, &mid);
        stack.push((mid.clone(), b, vm, vb));
        stack.push((a, mid, va, vm));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}
