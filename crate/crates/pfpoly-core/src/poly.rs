//! Exact rational scalars and dense univariate polynomials.
//!
//! Everything downstream (coordinates, volumes, Ehrhart and h-polynomials)
//! is built on arbitrary-precision rationals so that all geometric
//! predicates are decided exactly.

use alloc::string::String;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision integer.
pub type Int = BigInt;

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator (guaranteed by the underlying representation).
pub type Rational = num_rational::BigRational;

/// Shorthand for the rational `n`.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(Int::from(n))
}

/// Shorthand for the rational `num/den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(Int::from(num), Int::from(den))
}

/// Binomial coefficient `C(n, k)` as a big integer.
pub fn binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

/// Factorial `n!` as a big integer.
pub fn factorial(n: u64) -> Int {
    let mut acc = Int::one();
    for i in 2..=n {
        acc *= Int::from(i);
    }
    acc
}

/// Renders a rational as `p` (denominator one) or `p/q`.
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        let mut s = r.numer().to_string();
        s.push('/');
        s.push_str(&r.denom().to_string());
        s
    }
}

/// Parses `p` or `p/q` into a rational.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let make_err = || {
        let mut m = String::from("invalid rational `");
        m.push_str(s);
        m.push('`');
        m
    };
    match s.split_once('/') {
        None => {
            let n = Int::from_str(s).map_err(|_| make_err())?;
            Ok(Rational::from_integer(n))
        }
        Some((p, q)) => {
            let p = Int::from_str(p.trim()).map_err(|_| make_err())?;
            let q = Int::from_str(q.trim()).map_err(|_| make_err())?;
            if q.is_zero() {
                return Err(make_err());
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Dense univariate polynomial with exact rational coefficients.
///
/// Coefficients are stored lowest degree first with no trailing zeros; the
/// zero polynomial has an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    /// The constant polynomial one.
    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Polynomial::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// A constant polynomial.
    pub fn constant(c: Rational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// `c * t^deg`.
    pub fn monomial(c: Rational, deg: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        Polynomial::from_coeffs(coeffs)
    }

    /// Builds a polynomial from coefficients (lowest degree first),
    /// trimming trailing zeros into canonical form.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Coefficients, lowest degree first; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        Polynomial::from_coeffs(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Evaluates at `t` by Horner's scheme.
    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// Substitutes the polynomial `q` for the variable.
    pub fn compose(&self, q: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(q).add(&Polynomial::constant(c.clone()));
        }
        acc
    }

    pub fn pow(&self, e: usize) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// True if the coefficient list reads the same in both directions when
    /// padded up to degree `deg` (i.e. `t^deg · p(1/t) = p(t)`).
    pub fn is_palindromic(&self, deg: usize) -> bool {
        (0..=deg).all(|k| self.coeff(k) == self.coeff(deg - k))
    }

    /// `Σ_{j=lo}^{hi} t^j`; zero when the range is empty.
    pub fn power_sum(lo: usize, hi: usize) -> Polynomial {
        if lo > hi {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); hi + 1];
        for c in coeffs.iter_mut().take(hi + 1).skip(lo) {
            *c = Rational::one();
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            if k == 0 {
                write!(f, "{}", rational_to_string(&a))?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", rational_to_string(&a))?;
                }
                if k == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{}", k)?;
                }
            }
        }
        Ok(())
    }
}

/// `f(t) = h(t + 1)`: recovers the f-polynomial from the h-polynomial,
/// i.e. `f_j = Σ_{i ≥ j} C(i, j) h_i`.
pub fn f_from_h(h: &Polynomial) -> Polynomial {
    let t_plus_1 = Polynomial::from_coeffs(vec![Rational::one(), Rational::one()]);
    h.compose(&t_plus_1)
}

/// `h(t) = f(t - 1)`: the inverse substitution.  Meaningful as an
/// h-polynomial only when `f` comes from a simple polytope; this function
/// performs the pure substitution either way.
pub fn h_from_f(f: &Polynomial) -> Polynomial {
    let t_minus_1 = Polynomial::from_coeffs(vec![-Rational::one(), Rational::one()]);
    f.compose(&t_minus_1)
}

/// The degree-`a` polynomial in `t` equal to `C(t·y + a - 1, a)`, computed
/// as the product `(t·y + a - 1)(t·y + a - 2) ⋯ (t·y) / a!` so that
/// negative `y` is supported.
pub fn binomial_poly(y: &Rational, a: usize) -> Polynomial {
    let ty = Polynomial::monomial(y.clone(), 1);
    let mut acc = Polynomial::one();
    for j in 0..a {
        let shift = Rational::from_integer(Int::from((a - 1 - j) as u64));
        acc = acc.mul(&ty.add(&Polynomial::constant(shift)));
    }
    acc.scale(&Rational::new(Int::one(), factorial(a as u64)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(5, 2), Int::from(10));
        assert_eq!(binomial(8, 0), Int::from(1));
        assert_eq!(binomial(3, 5), Int::from(0));
        assert_eq!(factorial(5), Int::from(120));
    }

    #[test]
    fn ring_ops() {
        let p = Polynomial::from_coeffs(vec![rat_int(1), rat_int(1)]);
        let sq = p.mul(&p);
        assert_eq!(sq.coeffs(), &[rat_int(1), rat_int(2), rat_int(1)]);
        let q = Polynomial::from_coeffs(vec![rat_int(1), rat_int(3)]);
        assert_eq!(q.eval(&rat_int(2)), rat_int(7));
        let tm1 = Polynomial::from_coeffs(vec![rat_int(-1), rat_int(1)]);
        assert!(tm1.mul(&Polynomial::zero()).is_zero());
    }

    #[test]
    fn canonical_form() {
        let p = Polynomial::from_coeffs(vec![rat_int(2), rat_int(0), rat_int(0)]);
        assert_eq!(p.degree(), Some(0));
        assert!(Polynomial::zero().degree().is_none());
        let diff = p.sub(&Polynomial::constant(rat_int(2)));
        assert!(diff.is_zero());
    }

    #[test]
    fn f_h_transforms() {
        // 2-cube: h = (1+t)^2, f = 4 + 4t + t^2.
        let h = Polynomial::from_coeffs(vec![rat_int(1), rat_int(2), rat_int(1)]);
        let f = f_from_h(&h);
        assert_eq!(f.coeffs(), &[rat_int(4), rat_int(4), rat_int(1)]);
        assert_eq!(h_from_f(&f), h);
        // triangle: h = 1 + t + t^2, f = 3 + 3t + t^2.
        let h = Polynomial::from_coeffs(vec![rat_int(1), rat_int(1), rat_int(1)]);
        let f = f_from_h(&h);
        assert_eq!(f.coeffs(), &[rat_int(3), rat_int(3), rat_int(1)]);
        // point: h = 1 -> f = 1.
        assert_eq!(f_from_h(&Polynomial::one()), Polynomial::one());
        // pentagon: f = (5,5,1) -> h = 1 + 3t + t^2.
        let f = Polynomial::from_coeffs(vec![rat_int(5), rat_int(5), rat_int(1)]);
        let h = h_from_f(&f);
        assert_eq!(h.coeffs(), &[rat_int(1), rat_int(3), rat_int(1)]);
    }

    #[test]
    fn binomial_poly_cases() {
        // y=1, a=2 -> C(t+1, 2) = (t^2 + t)/2.
        let p = binomial_poly(&rat_int(1), 2);
        assert_eq!(p.coeffs(), &[rat_int(0), rat(1, 2), rat(1, 2)]);
        // a=0 -> 1 regardless of y.
        assert_eq!(binomial_poly(&rat_int(17), 0), Polynomial::one());
        // y=-1, a=1 -> -t.
        let p = binomial_poly(&rat_int(-1), 1);
        assert_eq!(p.coeffs(), &[rat_int(0), rat_int(-1)]);
    }

    #[test]
    fn binomial_poly_matches_integer_binomial() {
        for y in 1..=6u64 {
            for a in 1..=6usize {
                let p = binomial_poly(&rat_int(y as i64), a);
                for t in 1..=6u64 {
                    let want = binomial(t * y + a as u64 - 1, a as u64);
                    assert_eq!(p.eval(&rat_int(t as i64)), Rational::from_integer(want));
                }
            }
        }
    }

    #[test]
    fn rational_round_trip() {
        let r = parse_rational("7/2").unwrap();
        assert_eq!(rational_to_string(&r), "7/2");
        assert_eq!(rational_to_string(&parse_rational("4").unwrap()), "4");
        assert_eq!(rational_to_string(&parse_rational("6/3").unwrap()), "2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        // exactness: (a/b + c/d) - c/d == a/b
        let a = rat(3, 7);
        let c = rat(5, 13);
        assert_eq!((a.clone() + c.clone()) - c, a);
    }

    #[test]
    fn palindrome_and_power_sum() {
        let p = Polynomial::from_coeffs(vec![rat_int(1), rat_int(3), rat_int(1)]);
        assert!(p.is_palindromic(2));
        assert!(!p.is_palindromic(3));
        let s = Polynomial::power_sum(1, 3);
        assert_eq!(s.coeffs(), &[rat_int(0), rat_int(1), rat_int(1), rat_int(1)]);
        assert!(Polynomial::power_sum(3, 2).is_zero());
    }
}
