//! Sparse bivariate polynomials in q and t with exact coefficients, plus the
//! classical q-analogues.
//!
//! A [`QTPolynomial`] stores a map from exponent pairs (e_q, e_t) to nonzero
//! coefficients; equality is term-set equality.  The coefficient type is
//! generic over the signed exact integer types of `num-traits`; the crate
//! root exposes the arbitrary-precision alias [`crate::QtPoly`] which every
//! generating function in this crate uses.
//!
//! The q-analogues follow the standard definitions
//!
//! ```text
//! [n]_q  = 1 + q + ... + q^{n-1}
//! [n]_q! = [1]_q [2]_q ... [n]_q
//! [n choose k]_q = [n-1 choose k-1]_q + q^k [n-1 choose k]_q
//! S_{n,k}(q) = S_{n-1,k-1}(q) + [k]_q S_{n-1,k}(q)
//! ```
//!
//! The q-binomial is built from the q-Pascal recurrence so that no division
//! is ever performed.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Num, Signed};

/// Coefficient bound for [`QTPolynomial`]: exact signed arithmetic plus
/// display for the canonical text form.
pub trait Coeff: Num + Signed + Clone + fmt::Display {}

impl<T: Num + Signed + Clone + fmt::Display> Coeff for T {}

/// A sparse polynomial in q and t.
///
/// Terms are keyed by `(e_t, e_q)` so that iteration order matches the
/// canonical serialization order (t-degree major, q-degree minor).  Zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QTPolynomial<C: Coeff> {
    terms: BTreeMap<(u64, u64), C>,
}

impl<C: Coeff> Default for QTPolynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> QTPolynomial<C> {
    pub fn zero() -> Self {
        QTPolynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), 0, 0)
    }

    /// The single term `c * q^eq * t^et` (the zero polynomial if `c = 0`).
    pub fn monomial(c: C, eq: u64, et: u64) -> Self {
        let mut p = Self::zero();
        p.add_term(c, eq, et);
        p
    }

    /// `q^eq`.
    pub fn q_power(eq: u64) -> Self {
        Self::monomial(C::one(), eq, 0)
    }

    /// `t^et`.
    pub fn t_power(et: u64) -> Self {
        Self::monomial(C::one(), 0, et)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Adds `c * q^eq * t^et` in place.
    pub fn add_term(&mut self, c: C, eq: u64, et: u64) {
        if c.is_zero() {
            return;
        }
        let key = (et, eq);
        let entry = self.terms.entry(key).or_insert_with(C::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Coefficient of `q^eq * t^et` (zero if absent).
    pub fn coeff(&self, eq: u64, et: u64) -> C {
        self.terms
            .get(&(et, eq))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    /// Iterates terms as `((e_q, e_t), coefficient)` in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = ((u64, u64), &C)> {
        self.terms.iter().map(|(&(et, eq), c)| ((eq, et), c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(et, eq), c) in &other.terms {
            out.add_term(c.clone(), eq, et);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(et, eq), c) in &other.terms {
            out.add_term(-c.clone(), eq, et);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(et1, eq1), c1) in &self.terms {
            for (&(et2, eq2), c2) in &other.terms {
                out.add_term(c1.clone() * c2.clone(), eq1 + eq2, et1 + et2);
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (&(et, eq), c0) in &self.terms {
            out.add_term(c0.clone() * c.clone(), eq, et);
        }
        out
    }

    /// Evaluates at `q = q0, t = t0`.
    pub fn eval_at(&self, q0: &C, t0: &C) -> C {
        let mut acc = C::zero();
        for (&(et, eq), c) in &self.terms {
            acc = acc + c.clone() * pow(q0, eq) * pow(t0, et);
        }
        acc
    }

    /// Keeps only the terms with `t`-degree zero (the substitution t := 0).
    pub fn specialize_t_zero(&self) -> Self {
        let mut out = Self::zero();
        for (&(et, eq), c) in &self.terms {
            if et == 0 {
                out.add_term(c.clone(), eq, et);
            }
        }
        out
    }

    /// Keeps only the terms with `q`-degree zero (the substitution q := 0).
    pub fn specialize_q_zero(&self) -> Self {
        let mut out = Self::zero();
        for (&(et, eq), c) in &self.terms {
            if eq == 0 {
                out.add_term(c.clone(), eq, et);
            }
        }
        out
    }

    /// Transposes every exponent pair: the term `(e_q, e_t)` becomes
    /// `(e_t, e_q)`.
    pub fn swap_qt(&self) -> Self {
        let mut out = Self::zero();
        for (&(et, eq), c) in &self.terms {
            out.add_term(c.clone(), et, eq);
        }
        out
    }

    /// Maximum q-degree, or `None` for the zero polynomial.
    pub fn degree_q(&self) -> Option<u64> {
        self.terms.keys().map(|&(_, eq)| eq).max()
    }

    /// Maximum t-degree, or `None` for the zero polynomial.
    pub fn degree_t(&self) -> Option<u64> {
        self.terms.keys().map(|&(et, _)| et).max()
    }

    /// Whether the polynomial is symmetric under exchanging q and t.
    pub fn is_qt_symmetric(&self) -> bool {
        *self == self.swap_qt()
    }
}

fn pow<C: Coeff>(base: &C, mut exp: u64) -> C {
    let mut acc = C::one();
    let mut b = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b.clone();
        }
        exp >>= 1;
        if exp > 0 {
            b = b.clone() * b;
        }
    }
    acc
}

/// Canonical text form: terms sorted by t-degree then q-degree, joined by
/// `+`, each rendered as `c*q^a*t^b` with unit coefficients and zero
/// exponents omitted (`1+q+2*q^2*t`).  The zero polynomial prints as `0`.
impl<C: Coeff> fmt::Display for QTPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(et, eq), c) in &self.terms {
            let (sign, mag) = if c.is_negative() {
                ("-", c.abs())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{sign}")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || (eq == 0 && et == 0) {
                parts.push(mag.to_string());
            }
            if eq == 1 {
                parts.push("q".to_string());
            } else if eq > 1 {
                parts.push(format!("q^{eq}"));
            }
            if et == 1 {
                parts.push("t".to_string());
            } else if et > 1 {
                parts.push(format!("t^{et}"));
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

/// `[n]_q = 1 + q + ... + q^{n-1}`.
pub fn q_int<C: Coeff>(n: u64) -> QTPolynomial<C> {
    let mut p = QTPolynomial::zero();
    for i in 0..n {
        p.add_term(C::one(), i, 0);
    }
    p
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial<C: Coeff>(n: u64) -> QTPolynomial<C> {
    let mut p = QTPolynomial::one();
    for i in 1..=n {
        p = p.mul(&q_int(i));
    }
    p
}

/// The Gaussian binomial `[n choose k]_q`, zero when `k > n`.
///
/// Computed by the q-Pascal recurrence, so the result is exact and no
/// polynomial division is needed.
pub fn q_binomial<C: Coeff>(n: u64, k: u64) -> QTPolynomial<C> {
    if k > n {
        return QTPolynomial::zero();
    }
    let k = k.min(n - k);
    // row[j] = [i choose j]_q after processing row i
    let mut row: Vec<QTPolynomial<C>> = vec![QTPolynomial::one()];
    for i in 1..=n {
        let width = k.min(i) as usize;
        let mut next: Vec<QTPolynomial<C>> = Vec::with_capacity(width + 1);
        next.push(QTPolynomial::one());
        for j in 1..=width {
            let from_left = if j <= row.len() - 1 {
                row[j - 1].clone()
            } else {
                QTPolynomial::zero()
            };
            let from_up = if j < row.len() {
                row[j].mul(&QTPolynomial::q_power(j as u64))
            } else {
                QTPolynomial::zero()
            };
            next.push(from_left.add(&from_up));
        }
        row = next;
    }
    row[k as usize].clone()
}

/// The q-Stirling numbers `S_{n,k}(q)` defined by
/// `S_{n,k} = S_{n-1,k-1} + [k]_q S_{n-1,k}` with `S_{0,0} = 1`,
/// `S_{n,0} = 0` for `n > 0` and `S_{n,k} = 0` for `k > n`.
pub fn q_stirling<C: Coeff>(n: u64, k: u64) -> QTPolynomial<C> {
    if k > n {
        return QTPolynomial::zero();
    }
    if n == 0 {
        return QTPolynomial::one();
    }
    if k == 0 {
        return QTPolynomial::zero();
    }
    // table by rows; row i holds S_{i,0..=i}
    let mut row: Vec<QTPolynomial<C>> = vec![QTPolynomial::one()];
    for i in 1..=n {
        let mut next = vec![QTPolynomial::zero(); (i + 1) as usize];
        for j in 1..=i {
            let a = if j - 1 < row.len() as u64 {
                row[(j - 1) as usize].clone()
            } else {
                QTPolynomial::zero()
            };
            let b = if j < row.len() as u64 {
                row[j as usize].mul(&q_int(j))
            } else {
                QTPolynomial::zero()
            };
            next[j as usize] = a.add(&b);
        }
        row = next;
    }
    row[k as usize].clone()
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    type P = super::QTPolynomial<BigInt>;

    fn q() -> P {
        P::q_power(1)
    }

    #[test]
    fn ring_basics() {
        let one_plus_q = P::one().add(&q());
        let sq = one_plus_q.mul(&one_plus_q);
        assert_eq!(sq.to_string(), "1+2*q+q^2");
        assert_eq!(sq.coeff(1, 0), BigInt::from(2));
        assert!(sq.sub(&sq).is_zero());
    }

    #[test]
    fn swap_transposes_exponents() {
        // q^2 t -> q t^2
        let p = P::monomial(BigInt::from(1), 2, 1);
        let s = p.swap_qt();
        assert_eq!(s.coeff(1, 2), BigInt::from(1));
        assert_eq!(s.coeff(2, 1), BigInt::from(0));
    }

    #[test]
    fn eval_counts_terms() {
        let p = super::q_binomial::<BigInt>(4, 2);
        assert_eq!(p.eval_at(&BigInt::from(1), &BigInt::from(1)), BigInt::from(6));
    }

    #[test]
    fn q_binomial_small_values() {
        assert_eq!(super::q_binomial::<BigInt>(2, 1).to_string(), "1+q");
        assert_eq!(
            super::q_binomial::<BigInt>(4, 2).to_string(),
            "1+q+2*q^2+q^3+q^4"
        );
        assert_eq!(super::q_binomial::<BigInt>(5, 0).to_string(), "1");
        assert!(super::q_binomial::<BigInt>(3, 4).is_zero());
    }

    #[test]
    fn q_binomial_matches_factorial_ratio() {
        // [n k]_q * [k]_q! * [n-k]_q! == [n]_q!
        for n in 0..=7u64 {
            for k in 0..=n {
                let lhs = super::q_binomial::<BigInt>(n, k)
                    .mul(&super::q_factorial(k))
                    .mul(&super::q_factorial(n - k));
                assert_eq!(lhs, super::q_factorial(n), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn q_stirling_small_values() {
        assert_eq!(super::q_stirling::<BigInt>(3, 3).to_string(), "1");
        assert_eq!(super::q_stirling::<BigInt>(3, 2).to_string(), "2+q");
        assert_eq!(super::q_stirling::<BigInt>(3, 1).to_string(), "1");
        assert!(super::q_stirling::<BigInt>(3, 0).is_zero());
        assert!(super::q_stirling::<BigInt>(2, 3).is_zero());
    }

    #[test]
    fn specializations_filter_terms() {
        // 1 + q t + t^2
        let mut p = P::one();
        p.add_term(BigInt::from(1), 1, 1);
        p.add_term(BigInt::from(1), 0, 2);
        assert_eq!(p.specialize_t_zero().to_string(), "1");
        assert_eq!(p.specialize_q_zero().to_string(), "1+t^2");
    }

    #[test]
    fn display_negative_coefficients() {
        let p = P::one().sub(&P::monomial(BigInt::from(3), 2, 0));
        assert_eq!(p.to_string(), "1-3*q^2");
    }
}
