//! Points and linear inequalities over exact rationals.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::poly::{rational_to_string, Rational};

/// A point of `ℚ^n` with exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Point {
    coords: Vec<Rational>,
}

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Point { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point::new(coords.iter().map(|&c| crate::poly::rat_int(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Point::new(alloc::vec![Rational::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    pub fn dot(&self, other: &Point) -> Rational {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch in dot product");
        let mut acc = Rational::zero();
        for (a, b) in self.coords.iter().zip(&other.coords) {
            acc += a * b;
        }
        acc
    }

    pub fn add(&self, other: &Point) -> Point {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch in sum");
        Point::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Point) -> Point {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch in difference");
        Point::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Point {
        Point::new(self.coords.iter().map(|a| a * c).collect())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", rational_to_string(c))?;
        }
        write!(f, ")")
    }
}

/// The inequality `coeffs · x ≤ rhs`, optionally flagged as a facet of the
/// polytope it describes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearInequality {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
    pub facet: bool,
}

impl LinearInequality {
    pub fn new(coeffs: Vec<Rational>, rhs: Rational, facet: bool) -> Self {
        LinearInequality { coeffs, rhs, facet }
    }

    /// Left-hand side value at `x`.
    pub fn lhs(&self, x: &[Rational]) -> Rational {
        assert_eq!(self.coeffs.len(), x.len(), "dimension mismatch");
        let mut acc = Rational::zero();
        for (c, v) in self.coeffs.iter().zip(x) {
            if !c.is_zero() {
                acc += c * v;
            }
        }
        acc
    }

    pub fn satisfied_by(&self, x: &[Rational]) -> bool {
        self.lhs(x) <= self.rhs
    }

    pub fn tight_at(&self, x: &[Rational]) -> bool {
        self.lhs(x) == self.rhs
    }

    /// The same inequality for the dilation `t·P`: `coeffs · x ≤ t·rhs`.
    pub fn dilate(&self, t: &Rational) -> LinearInequality {
        LinearInequality::new(self.coeffs.clone(), &self.rhs * t, self.facet)
    }
}

impl fmt::Display for LinearInequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut lhs = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !lhs.is_empty() {
                lhs.push_str(" + ");
            }
            let one = Rational::from_integer(1.into());
            if *c == -one.clone() {
                lhs.push('-');
            } else if *c != one {
                lhs.push_str(&rational_to_string(c));
                lhs.push('*');
            }
            lhs.push('x');
            lhs.push_str(&alloc::format!("{}", i + 1));
        }
        if lhs.is_empty() {
            lhs.push('0');
        }
        write!(f, "{} <= {}", lhs, rational_to_string(&self.rhs))
    }
}
