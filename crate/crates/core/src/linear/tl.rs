use std::collections::BTreeMap;
use std::fmt;

use super::{BarRep, Matrix, Poly, Rational};
use crate::diagram::GeneratorWord;
use crate::error::{Error, Result};
use crate::evaluator::{evaluate, AffineDiagram};
use crate::normal_form::normalize_diagram;

/// Linear combination of loop-free affine diagrams with coefficients in `Q[δ]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TLElement {
    source: usize,
    target: usize,
    terms: BTreeMap<AffineDiagram, Poly>,
}

impl TLElement {
    pub fn zero(source: usize, target: usize) -> Self {
        TLElement { source, target, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_diagram(&AffineDiagram::identity(n))
    }

    /// Single diagram; its contractible loops become a power of δ.
    pub fn from_diagram(d: &AffineDiagram) -> Self {
        let mut x = Self::zero(d.n_in(), d.n_out());
        x.terms.insert(d.without_mu(), Poly::delta_pow(d.mu()));
        x
    }

    pub fn from_word(w: &GeneratorWord) -> Result<Self> {
        Ok(Self::from_diagram(&evaluate(w)?))
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn terms(&self) -> &BTreeMap<AffineDiagram, Poly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn accumulate(&mut self, d: AffineDiagram, c: Poly) {
        let sum = match self.terms.remove(&d) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(d, sum);
        }
    }

    pub fn add(&self, other: &TLElement) -> Result<TLElement> {
        if (self.source, self.target) != (other.source, other.target) {
            return Err(Error::SignatureMismatch((self.source, self.target), (other.source, other.target)));
        }
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.accumulate(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Poly) -> TLElement {
        let mut out = Self::zero(self.source, self.target);
        for (d, p) in &self.terms {
            out.accumulate(d.clone(), p * c);
        }
        out
    }

    /// `self` first, then `next`, extended bilinearly.
    pub fn compose(&self, next: &TLElement) -> Result<TLElement> {
        if self.target != next.source {
            return Err(Error::SignatureMismatch((self.source, self.target), (next.source, next.target)));
        }
        let mut out = Self::zero(self.source, next.target);
        for (a, ca) in &self.terms {
            for (b, cb) in &next.terms {
                let d = a.compose(b)?;
                let coeff = &(ca * cb) * &Poly::delta_pow(d.mu());
                out.accumulate(d.without_mu(), coeff);
            }
        }
        Ok(out)
    }

    /// Image under the bar functor with δ specialized to `delta`.
    pub fn evaluate(&self, rep: &BarRep, delta: &Rational) -> Result<Matrix> {
        let rows = rep.word_matrix(&GeneratorWord::identity(self.target))?.rows();
        let cols = rep.word_matrix(&GeneratorWord::identity(self.source))?.cols();
        let mut acc = Matrix::zeros(rows, cols);
        for (d, c) in &self.terms {
            let word = normalize_diagram(d)?.assemble();
            acc = acc.add(&rep.word_matrix(&word)?.scale(&c.eval(delta)))?;
        }
        Ok(acc)
    }
}

impl fmt::Display for TLElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self.terms.iter().map(|(d, c)| format!("({c}) [{d}]")).collect();
        f.write_str(&terms.join(" + "))
    }
}

pub fn tl_from_word(w: &GeneratorWord) -> Result<TLElement> {
    TLElement::from_word(w)
}

pub fn tl_compose(x: &TLElement, y: &TLElement) -> Result<TLElement> {
    x.compose(y)
}

pub fn tl_evaluate(x: &TLElement, rep: &BarRep, delta: &Rational) -> Result<Matrix> {
    x.evaluate(rep, delta)
}
