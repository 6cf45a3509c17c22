//! Generators of the striped-cylinder category and typed words over them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An elementary striped cylinder.
///
/// The first field is always the arity of the source circle. Slots are
/// absolute labels on that circle, counted clockwise from the basepoint 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    Id(usize),
    /// Rotates every marked point one step clockwise.
    Tw(usize),
    /// Inverse rotation; only meaningful before the Dehn twist is quotiented out.
    TwInv(usize),
    /// Adds a cup whose arc starts at the given slot of the target circle.
    Birth(usize, usize),
    /// Caps off the given slot and its clockwise neighbour.
    Death(usize, usize),
}

impl Generator {
    pub fn validate(self) -> Result<Self> {
        let ok = match self {
            Generator::Id(_) | Generator::Tw(_) | Generator::TwInv(_) => true,
            Generator::Birth(k, i) => i <= k + 1,
            Generator::Death(k, i) => k >= 2 && i < k,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::InvalidGenerator(self))
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Generator::Id(k)
            | Generator::Tw(k)
            | Generator::TwInv(k)
            | Generator::Birth(k, _)
            | Generator::Death(k, _) => k,
        }
    }

    /// `(source, target)` arities.
    pub fn signature(self) -> (usize, usize) {
        match self {
            Generator::Id(k) | Generator::Tw(k) | Generator::TwInv(k) => (k, k),
            Generator::Birth(k, _) => (k, k + 2),
            Generator::Death(k, _) => (k, k - 2),
        }
    }

    pub fn source(self) -> usize {
        self.signature().0
    }

    pub fn target(self) -> usize {
        self.signature().1
    }

    pub fn is_endo(self) -> bool {
        matches!(self, Generator::Id(_) | Generator::Tw(_) | Generator::TwInv(_))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Generator::Id(k) => write!(f, "id({k})"),
            Generator::Tw(k) => write!(f, "tw({k})"),
            Generator::TwInv(k) => write!(f, "tw'({k})"),
            Generator::Birth(k, i) => write!(f, "b({k},{i})"),
            Generator::Death(k, i) => write!(f, "d({k},{i})"),
        }
    }
}

pub fn generator_signature(g: Generator) -> (usize, usize) {
    g.signature()
}

/// A chain-typed word of generators, stored in application order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorWord {
    n_in: usize,
    n_out: usize,
    gens: Vec<Generator>,
}

impl GeneratorWord {
    pub fn identity(k: usize) -> Self {
        GeneratorWord { n_in: k, n_out: k, gens: Vec::new() }
    }

    pub fn single(g: Generator) -> Result<Self> {
        let g = g.validate()?;
        Ok(GeneratorWord { n_in: g.source(), n_out: g.target(), gens: vec![g] })
    }

    /// Builds a word starting at arity `n_in`, checking every generator and
    /// every junction.
    pub fn new(n_in: usize, gens: Vec<Generator>) -> Result<Self> {
        let mut n_out = n_in;
        for &g in &gens {
            g.validate()?;
            if g.source() != n_out {
                return Err(Error::ArityMismatch(n_out, g.source()));
            }
            n_out = g.target();
        }
        Ok(GeneratorWord { n_in, n_out, gens })
    }

    /// Like [`GeneratorWord::new`] but infers `n_in` from the first generator.
    pub fn from_gens(gens: Vec<Generator>) -> Result<Self> {
        let n_in = gens.first().map_or(0, |g| g.source());
        Self::new(n_in, gens)
    }

    pub fn n_in(&self) -> usize {
        self.n_in
    }

    pub fn n_out(&self) -> usize {
        self.n_out
    }

    pub fn signature(&self) -> (usize, usize) {
        (self.n_in, self.n_out)
    }

    pub fn gens(&self) -> &[Generator] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_endo(&self) -> bool {
        self.n_in == self.n_out
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &GeneratorWord) -> Result<Self> {
        if self.n_out != next.n_in {
            return Err(Error::ArityMismatch(self.n_out, next.n_in));
        }
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&next.gens);
        Ok(GeneratorWord { n_in: self.n_in, n_out: next.n_out, gens })
    }

    pub fn push(&mut self, g: Generator) -> Result<()> {
        let g = g.validate()?;
        if g.source() != self.n_out {
            return Err(Error::ArityMismatch(self.n_out, g.source()));
        }
        self.n_out = g.target();
        self.gens.push(g);
        Ok(())
    }

    /// Repeats an endomorphism word `p` times.
    pub fn pow(&self, p: usize) -> Result<Self> {
        if !self.is_endo() {
            return Err(Error::ArityMismatch(self.n_out, self.n_in));
        }
        let mut gens = Vec::with_capacity(self.gens.len() * p);
        for _ in 0..p {
            gens.extend_from_slice(&self.gens);
        }
        Ok(GeneratorWord { n_in: self.n_in, n_out: self.n_out, gens })
    }

    /// Rewrites `TwInv(k)` as `Tw(k)^(k-1)`, which is only valid once the Dehn
    /// twist `Tw(k)^k = Id(k)` holds.
    pub fn canonicalize(&self) -> Self {
        let mut gens = Vec::with_capacity(self.gens.len());
        for &g in &self.gens {
            match g {
                Generator::TwInv(k) if k <= 1 => gens.push(Generator::Id(k)),
                Generator::TwInv(k) => gens.extend(std::iter::repeat_n(Generator::Tw(k), k - 1)),
                g => gens.push(g),
            }
        }
        GeneratorWord { n_in: self.n_in, n_out: self.n_out, gens }
    }

    pub fn has_inverse_twists(&self) -> bool {
        self.gens.iter().any(|g| matches!(g, Generator::TwInv(_)))
    }
}

pub fn then(f: &GeneratorWord, g: &GeneratorWord) -> Result<GeneratorWord> {
    f.then(g)
}

pub fn power(g: Generator, p: usize) -> Result<GeneratorWord> {
    let g = g.validate()?;
    if !g.is_endo() {
        return Err(Error::NotEndomorphism(g));
    }
    Ok(GeneratorWord { n_in: g.source(), n_out: g.source(), gens: vec![g; p] })
}

/// Shorthand used throughout the tests and relation catalog: builds a word
/// from generators that are known to be valid and composable.
pub fn word(gens: &[Generator]) -> GeneratorWord {
    GeneratorWord::from_gens(gens.to_vec()).expect("ill-typed literal word")
}
