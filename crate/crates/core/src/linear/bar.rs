//! The bar functor on `V^{⊗n}` for `V = Q^dim` with its standard pairing.
//!
//! Twists permute tensor factors cyclically to the right, deaths contract two
//! adjacent factors with `ε(e_a ⊗ e_b) = [a = b]`, births insert
//! `η = Σ_a e_a ⊗ e_a`. The wrap-around birth and death are the twist
//! conjugates of the last ordinary ones, so every generator matrix is 0/1.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Matrix, Rational};
use crate::diagram::{Generator, GeneratorWord};
use crate::error::{Error, Result};

/// Largest tensor power materialized as a matrix dimension.
const MAX_BASIS: usize = 1 << 20;

/// For each basis column, the basis rows hit with coefficient one.
type Columns = Vec<Vec<usize>>;

#[derive(Debug)]
pub struct BarRep {
    dim: usize,
    cache: Mutex<HashMap<Generator, Arc<Columns>>>,
}

impl BarRep {
    pub fn new(dim: usize) -> Result<Self> {
        if dim < 1 {
            return Err(Error::DimTooSmall(dim));
        }
        Ok(BarRep { dim, cache: Mutex::new(HashMap::new()) })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn basis_size(&self, arity: usize) -> Result<usize> {
        u32::try_from(arity)
            .ok()
            .and_then(|a| self.dim.checked_pow(a))
            .filter(|&n| n <= MAX_BASIS)
            .ok_or_else(|| Error::ShapeMismatch(format!("V^{arity} at dim {} is too large to materialize", self.dim)))
    }

    fn digits(&self, mut idx: usize, arity: usize) -> Vec<usize> {
        let mut x = vec![0; arity];
        for slot in x.iter_mut().rev() {
            *slot = idx % self.dim;
            idx /= self.dim;
        }
        x
    }

    fn index(&self, x: &[usize]) -> usize {
        x.iter().fold(0, |acc, &d| acc * self.dim + d)
    }

    /// Basis tuples hit by the generator on the basis tuple `x` (first factor most significant).
    fn images(&self, g: Generator, x: &[usize]) -> Vec<Vec<usize>> {
        let k = x.len();
        match g {
            Generator::Id(_) => vec![x.to_vec()],
            Generator::Tw(_) if k == 0 => vec![Vec::new()],
            Generator::TwInv(_) if k == 0 => vec![Vec::new()],
            Generator::Tw(_) => {
                let mut out = vec![x[k - 1]];
                out.extend_from_slice(&x[..k - 1]);
                vec![out]
            }
            Generator::TwInv(_) => {
                let mut out = x[1..].to_vec();
                out.push(x[0]);
                vec![out]
            }
            Generator::Death(_, i) if i + 2 <= k => {
                if x[i] != x[i + 1] {
                    return Vec::new();
                }
                vec![x[..i].iter().chain(&x[i + 2..]).copied().collect()]
            }
            Generator::Death(..) => {
                if x[k - 1] != x[0] {
                    return Vec::new();
                }
                if k == 2 {
                    return vec![Vec::new()];
                }
                let mut out = vec![x[k - 2]];
                out.extend_from_slice(&x[1..k - 2]);
                vec![out]
            }
            Generator::Birth(_, j) if j <= k => (0..self.dim)
                .map(|a| x[..j].iter().chain(&[a, a]).chain(&x[j..]).copied().collect())
                .collect(),
            Generator::Birth(..) => (0..self.dim)
                .map(|a| {
                    let mut out = vec![a];
                    if k > 0 {
                        out.extend_from_slice(&x[1..]);
                        out.push(x[0]);
                    }
                    out.push(a);
                    out
                })
                .collect(),
        }
    }

    fn columns(&self, g: Generator) -> Result<Arc<Columns>> {
        let g = g.validate()?;
        if let Some(c) = self.cache.lock().expect("cache poisoned").get(&g) {
            return Ok(c.clone());
        }
        let (a, b) = g.signature();
        self.basis_size(b)?;
        let cols: Columns = (0..self.basis_size(a)?)
            .map(|c| self.images(g, &self.digits(c, a)).iter().map(|x| self.index(x)).collect())
            .collect();
        let cols = Arc::new(cols);
        self.cache.lock().expect("cache poisoned").insert(g, cols.clone());
        Ok(cols)
    }

    pub fn gen_matrix(&self, g: Generator) -> Result<Matrix> {
        let cols = self.columns(g)?;
        let (a, b) = g.signature();
        let mut m = Matrix::zeros(self.basis_size(b)?, self.basis_size(a)?);
        for (c, rows) in cols.iter().enumerate() {
            for &r in rows {
                m.set(r, c, m.get(r, c) + Rational::one());
            }
        }
        Ok(m)
    }

    /// Matrix of a word: later generators multiply on the left.
    ///
    /// Columns are pushed through the generators as sparse integer vectors,
    /// which keeps the cost proportional to the nonzero entries.
    pub fn word_matrix(&self, w: &GeneratorWord) -> Result<Matrix> {
        let n_in = self.basis_size(w.n_in())?;
        let ops = w.gens().iter().map(|&g| self.columns(g)).collect::<Result<Vec<_>>>()?;
        let mut m = Matrix::zeros(self.basis_size(w.n_out())?, n_in);
        for c in 0..n_in {
            let mut v: HashMap<usize, BigInt> = HashMap::from([(c, BigInt::one())]);
            for op in &ops {
                let mut next: HashMap<usize, BigInt> = HashMap::with_capacity(v.len());
                for (idx, coef) in v {
                    for &r in &op[idx] {
                        *next.entry(r).or_insert_with(BigInt::zero) += &coef;
                    }
                }
                v = next;
            }
            for (r, coef) in v {
                m.set(r, c, Rational::from_integer(coef));
            }
        }
        Ok(m)
    }
}

pub fn gen_matrix(g: Generator, dim: usize) -> Result<Matrix> {
    BarRep::new(dim)?.gen_matrix(g)
}

pub fn word_matrix(w: &GeneratorWord, dim: usize) -> Result<Matrix> {
    BarRep::new(dim)?.word_matrix(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{power, word, Generator::*};

    fn int(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn twist_on_two_factors_is_the_swap() {
        for n in 1..=3 {
            let m = gen_matrix(Tw(2), n).unwrap();
            for a in 0..n {
                for b in 0..n {
                    assert_eq!(m.get(b * n + a, a * n + b), &int(1));
                }
            }
            assert_eq!(m.mul(&m).unwrap(), Matrix::identity(n * n));
        }
    }

    #[test]
    fn pairing_row() {
        let m = gen_matrix(Death(2, 0), 2).unwrap();
        assert_eq!(m, Matrix::from_i64_rows(&[&[1, 0, 0, 1]]).unwrap());
        assert_eq!(gen_matrix(Id(0), 5).unwrap(), Matrix::identity(1));
    }

    #[test]
    fn loop_value_is_dimension() {
        let w = word(&[Birth(0, 0), Death(2, 0)]);
        assert_eq!(word_matrix(&w, 3).unwrap(), Matrix::from_i64_rows(&[&[3]]).unwrap());
    }

    #[test]
    fn dehn_twist_and_snake() {
        for n in 1..=3 {
            for k in 0..=5 {
                assert!(word_matrix(&power(Tw(k), k).unwrap(), n).unwrap().is_identity());
            }
            assert!(word_matrix(&word(&[Birth(1, 0), Death(3, 1)]), n).unwrap().is_identity());
        }
    }

    #[test]
    fn inverse_twist_inverts() {
        let m = word_matrix(&word(&[Tw(3), TwInv(3)]), 2).unwrap();
        assert!(m.is_identity());
    }

    #[test]
    fn word_matrix_agrees_with_dense_products() {
        let w = word(&[Birth(2, 3), Tw(4), Death(4, 3), Birth(2, 1), Death(4, 0)]);
        let rep = BarRep::new(2).unwrap();
        let mut dense = Matrix::identity(4);
        for &g in w.gens() {
            dense = rep.gen_matrix(g).unwrap().mul(&dense).unwrap();
        }
        assert_eq!(rep.word_matrix(&w).unwrap(), dense);
    }

    #[test]
    fn dimension_zero_is_rejected() {
        assert_eq!(BarRep::new(0).unwrap_err(), Error::DimTooSmall(0));
    }
}
