use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Splits `d` as `s^2 * f` with `f` squarefree (sign kept on `f`).
pub fn squarefree_split(d: i64) -> (u64, i64) {
    if d == 0 {
        return (0, 0);
    }
    let mut rest = d.unsigned_abs();
    let mut square = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    while p * p <= rest {
        while rest.is_multiple_of(p * p) {
            rest /= p * p;
            square *= p;
        }
        if rest.is_multiple_of(p) {
            rest /= p;
            free *= p;
        }
        p += 1;
    }
    free *= rest;
    let free = free as i64 * d.signum();
    (square, free)
}

/// Exact `a + b*sqrt(d)` with rational `a`, `b`.
///
/// Kept normalized: `d` squarefree, and `b = 0, d = 1` for rational values.
/// For `d < 0` the value is the complex number `a + b*i*sqrt(|d|)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgebraicValue {
    a: BigRational,
    b: BigRational,
    d: i64,
}

impl AlgebraicValue {
    pub fn new(a: BigRational, b: BigRational, d: i64) -> Self {
        if b.is_zero() || d == 0 {
            return Self::rational(a);
        }
        let (s, f) = squarefree_split(d);
        let b = b * BigRational::from_integer(BigInt::from(s));
        if f == 1 {
            Self::rational(a + b)
        } else {
            AlgebraicValue { a, b, d: f }
        }
    }

    pub fn rational(a: BigRational) -> Self {
        AlgebraicValue { a, b: BigRational::zero(), d: 1 }
    }

    pub fn from_int(a: i128) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(a)))
    }

    /// `(p + q*sqrt(d)) / 2` for integers `p`, `q`.
    pub fn halves(p: i128, q: i128, d: i64) -> Self {
        let two = BigInt::from(2);
        Self::new(
            BigRational::new(BigInt::from(p), two.clone()),
            BigRational::new(BigInt::from(q), two),
            d,
        )
    }

    pub fn zero() -> Self {
        Self::rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Complex conjugate. Real values are returned unchanged.
    pub fn conj(&self) -> Self {
        if self.d < 0 {
            AlgebraicValue { a: self.a.clone(), b: -self.b.clone(), d: self.d }
        } else {
            self.clone()
        }
    }

    fn common_radicand(&self, other: &Self) -> Option<i64> {
        match (self.is_rational(), other.is_rational()) {
            (true, true) => Some(1),
            (true, false) => Some(other.d),
            (false, true) => Some(self.d),
            (false, false) => (self.d == other.d).then_some(self.d),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        let d = self.common_radicand(other)?;
        Some(Self::new(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        let d = self.common_radicand(other)?;
        let dd = BigRational::from_integer(BigInt::from(d));
        let a = &self.a * &other.a + &self.b * &other.b * dd;
        let b = &self.a * &other.b + &self.b * &other.a;
        Some(Self::new(a, b, d))
    }

    pub fn neg(&self) -> Self {
        AlgebraicValue { a: -self.a.clone(), b: -self.b.clone(), d: self.d }
    }

    /// Doubled coefficients `(2a, 2b)` when both are integers.
    pub fn doubled_integers(&self) -> Option<(i128, i128)> {
        let two = BigRational::from_integer(BigInt::from(2));
        let a = &self.a * &two;
        let b = &self.b * &two;
        if !a.is_integer() || !b.is_integer() {
            return None;
        }
        Some((i128::try_from(a.to_integer()).ok()?, i128::try_from(b.to_integer()).ok()?))
    }

    /// Compares `|self|` with `(1 + sqrt(p)) / 2` exactly.
    pub fn cmp_abs_with_half_one_plus_sqrt(&self, p: u64) -> Ordering {
        // Both sides are nonnegative, so compare squares:
        // |v|^2 against (1 + p + 2 sqrt(p)) / 4.
        let four = BigRational::from_integer(4.into());
        let dd = BigRational::from_integer(BigInt::from(self.d));
        let (rat, irr) = if self.d < 0 {
            (&self.a * &self.a - &self.b * &self.b * dd, BigRational::zero())
        } else {
            (&self.a * &self.a + &self.b * &self.b * dd, &self.a * &self.b * BigRational::from_integer(2.into()))
        };
        // 4|v|^2 - (1 + p) - 2 sqrt(p) = 4 rat - (1+p) + 4 irr sqrt(d) - 2 sqrt(p)
        let alpha = rat * &four - BigRational::from_integer(BigInt::from(1 + p));
        let beta = irr * four;
        let d = if self.d < 0 { 1 } else { self.d as u64 };
        sign_with_two_roots(&alpha, &beta, d, &BigRational::from_integer((-2).into()), p)
    }

    pub fn to_f64_parts(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let r = (self.d.unsigned_abs() as f64).sqrt();
        if self.d < 0 {
            (a, b * r)
        } else {
            (a + b * r, 0.0)
        }
    }
}

impl fmt::Display for AlgebraicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            write!(f, "{}*sqrt({})", self.b, self.d)
        } else if self.b.is_negative() {
            write!(f, "{}-{}*sqrt({})", self.a, -self.b.clone(), self.d)
        } else {
            write!(f, "{}+{}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

impl fmt::Debug for AlgebraicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraicValue({self})")
    }
}

/// Sign of `q * sqrt(r)` for `r >= 0`.
fn sign_root(q: &BigRational, r: u64) -> Ordering {
    if r == 0 {
        Ordering::Equal
    } else {
        q.cmp(&BigRational::zero())
    }
}

/// Sign of `p + q*sqrt(r)`, `r >= 0`.
pub fn sign_with_root(p: &BigRational, q: &BigRational, r: u64) -> Ordering {
    let sp = p.cmp(&BigRational::zero());
    let sq = sign_root(q, r);
    if sq == Ordering::Equal {
        return sp;
    }
    if sp == Ordering::Equal || sp == sq {
        return if sp == Ordering::Equal { sq } else { sp };
    }
    // Opposite signs: compare p^2 with q^2 r.
    let rr = BigRational::from_integer(BigInt::from(r));
    match (p * p).cmp(&(q * q * rr)) {
        Ordering::Greater => sp,
        Ordering::Less => sq,
        Ordering::Equal => Ordering::Equal,
    }
}

/// Sign of `alpha + beta*sqrt(a) + gamma*sqrt(b)` for `a, b >= 0`.
pub fn sign_with_two_roots(alpha: &BigRational, beta: &BigRational, a: u64, gamma: &BigRational, b: u64) -> Ordering {
    // u = beta sqrt(a) + gamma sqrt(b); sign(u) by comparing squares.
    let sb = sign_root(beta, a);
    let sg = sign_root(gamma, b);
    let ra = BigRational::from_integer(BigInt::from(a));
    let rb = BigRational::from_integer(BigInt::from(b));
    let su = if sb == Ordering::Equal || sg == Ordering::Equal || sb == sg {
        if sb == Ordering::Equal {
            sg
        } else {
            sb
        }
    } else {
        match (beta * beta * &ra).cmp(&(gamma * gamma * &rb)) {
            Ordering::Greater => sb,
            Ordering::Less => sg,
            Ordering::Equal => Ordering::Equal,
        }
    };
    let sa = alpha.cmp(&BigRational::zero());
    if su == Ordering::Equal {
        return sa;
    }
    if sa == Ordering::Equal || sa == su {
        return su;
    }
    // Opposite signs: compare alpha^2 with u^2 = beta^2 a + gamma^2 b + 2 beta gamma sqrt(ab).
    let lhs = alpha * alpha - beta * beta * &ra - gamma * gamma * &rb;
    let two = BigRational::from_integer(2.into());
    let cross = -(beta * gamma * two);
    // alpha^2 - u^2 = lhs + cross*sqrt(ab)
    let diff = sign_with_root(&lhs, &cross, a * b);
    match diff {
        Ordering::Greater => sa,
        Ordering::Less => su,
        Ordering::Equal => Ordering::Equal,
    }
}

/// Sum of values whose radicands may differ. Squarefree radicands are
/// linearly independent over the rationals, so the sum is rational exactly
/// when every irrational bucket cancels.
#[derive(Clone, Debug, Default)]
pub struct RadicandSum {
    rational: BigRational,
    irrational: BTreeMap<i64, BigRational>,
}

impl RadicandSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, v: &AlgebraicValue) {
        self.rational += &v.a;
        if !v.is_rational() {
            *self.irrational.entry(v.d).or_insert_with(BigRational::zero) += &v.b;
        }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    /// Buckets with a nonzero coefficient.
    pub fn residue(&self) -> Vec<(i64, BigRational)> {
        self.irrational.iter().filter(|(_, c)| !c.is_zero()).map(|(&d, c)| (d, c.clone())).collect()
    }

    /// The rational value, or `None` if some irrational part survived.
    pub fn into_rational(self) -> Option<BigRational> {
        self.irrational.values().all(Zero::is_zero).then_some(self.rational)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn normalization() {
        assert_eq!(squarefree_split(12), (2, 3));
        assert_eq!(squarefree_split(-9), (3, -1));
        assert_eq!(squarefree_split(7), (1, 7));
        let v = AlgebraicValue::halves(1, 1, 9);
        assert!(v.is_rational());
        assert_eq!(v, AlgebraicValue::from_int(2));
        let w = AlgebraicValue::halves(1, 1, 20);
        assert_eq!(w.d(), 5);
        assert_eq!(w.b(), &q(1, 1));
    }

    #[test]
    fn golden_ratio_arithmetic() {
        let phi = AlgebraicValue::halves(1, 1, 5);
        let psi = AlgebraicValue::halves(1, -1, 5);
        assert_eq!(phi.checked_add(&psi).unwrap(), AlgebraicValue::one());
        assert_eq!(phi.checked_mul(&psi).unwrap(), AlgebraicValue::from_int(-1));
        // phi^2 = phi + 1
        assert_eq!(phi.checked_mul(&phi).unwrap(), phi.checked_add(&AlgebraicValue::one()).unwrap());
        let r7 = AlgebraicValue::halves(-1, 1, -7);
        assert_eq!(r7.checked_mul(&r7.conj()).unwrap(), AlgebraicValue::from_int(2));
        assert!(phi.checked_mul(&r7).is_none());
        assert_eq!(phi.conj(), phi);
    }

    #[test]
    fn root_signs() {
        // 3 - sqrt(8) > 0, 3 - sqrt(10) < 0
        assert_eq!(sign_with_root(&q(3, 1), &q(-1, 1), 8), Ordering::Greater);
        assert_eq!(sign_with_root(&q(3, 1), &q(-1, 1), 10), Ordering::Less);
        assert_eq!(sign_with_root(&q(3, 1), &q(-1, 1), 9), Ordering::Equal);
        // sqrt(2) + sqrt(3) - 3.1 > 0 (3.146...)
        assert_eq!(sign_with_two_roots(&q(-31, 10), &q(1, 1), 2, &q(1, 1), 3), Ordering::Greater);
        // sqrt(2) + sqrt(3) - 3.2 < 0
        assert_eq!(sign_with_two_roots(&q(-32, 10), &q(1, 1), 2, &q(1, 1), 3), Ordering::Less);
        // 1 + sqrt(2) - sqrt(8) = 1 - sqrt(2) < 0
        assert_eq!(sign_with_two_roots(&q(1, 1), &q(1, 1), 2, &q(-1, 1), 8), Ordering::Less);
        // sqrt(5) - sqrt(3) - 0.5 = 0.504 > 0
        assert_eq!(sign_with_two_roots(&q(-1, 2), &q(1, 1), 5, &q(-1, 1), 3), Ordering::Greater);
    }

    #[test]
    fn abs_bound_comparison() {
        let phi = AlgebraicValue::halves(1, 1, 5);
        assert_eq!(phi.cmp_abs_with_half_one_plus_sqrt(5), Ordering::Equal);
        assert_eq!(phi.cmp_abs_with_half_one_plus_sqrt(7), Ordering::Less);
        let c = AlgebraicValue::halves(-1, 1, -7);
        assert_eq!(c.cmp_abs_with_half_one_plus_sqrt(7), Ordering::Less);
        assert_eq!(AlgebraicValue::from_int(3).cmp_abs_with_half_one_plus_sqrt(9), Ordering::Greater);
        assert_eq!(AlgebraicValue::from_int(-2).cmp_abs_with_half_one_plus_sqrt(9), Ordering::Equal);
    }

    #[test]
    fn radicand_sum_cancels() {
        let mut s = RadicandSum::new();
        s.add(&AlgebraicValue::halves(1, 1, 5));
        s.add(&AlgebraicValue::halves(1, 1, -7));
        assert_eq!(s.residue().len(), 2);
        s.add(&AlgebraicValue::halves(1, -1, 5));
        s.add(&AlgebraicValue::halves(1, -1, -7));
        assert_eq!(s.into_rational(), Some(q(2, 1)));
    }
}
