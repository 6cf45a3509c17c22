use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use super::Rational;

/// Polynomial in the loop value δ with rational coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly(Vec<Rational>);

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// `δ^n`.
    pub fn delta_pow(n: u64) -> Self {
        let mut c = vec![Rational::zero(); n as usize];
        c.push(Rational::one());
        Poly(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, delta: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * delta + c)
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let n = self.0.len().max(rhs.0.len());
        let get = |p: &Poly, i: usize| p.0.get(i).cloned().unwrap_or_else(Rational::zero);
        Poly::new((0..n).map(|i| get(self, i) + get(rhs, i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::default();
        }
        let mut c = vec![Rational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms = Vec::new();
        for (n, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coeff = if n > 0 && c.is_one() { String::new() } else { c.to_string() };
            terms.push(match n {
                0 => coeff,
                1 => format!("{coeff}δ"),
                _ => format!("{coeff}δ^{n}"),
            });
        }
        f.write_str(&terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn arithmetic() {
        let p = Poly::new(vec![r(1), r(2)]);
        let q = &p * &p;
        assert_eq!(q, Poly::new(vec![r(1), r(4), r(4)]));
        assert_eq!(q.eval(&r(3)), r(49));
        assert!((&p + &Poly::new(vec![r(-1), r(-2)])).is_zero());
        assert_eq!(Poly::delta_pow(2).to_string(), "δ^2");
        assert_eq!(q.to_string(), "4δ^2 + 4δ + 1");
    }
}
