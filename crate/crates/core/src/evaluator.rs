//! Affine diagrams: the universal-cover model of striped cylinders.
//!
//! A diagram from `p` to `q` points is a matching on two integer rows that is
//! invariant under shifting the bottom row by `p` and the top row by `q` at the
//! same time. Lift shifts record how strands wind around the cylinder, which is
//! what tells a contractible loop from a bracelet when composing.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagram::{Generator, GeneratorWord};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Row {
    Bottom,
    Top,
}

/// Partner record: the end connects to lift `index + shift * period(row)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct End {
    pub row: Row,
    pub index: usize,
    pub shift: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineDiagram {
    p: usize,
    q: usize,
    bottom: Vec<End>,
    top: Vec<End>,
    beta: u64,
    mu: u64,
}

type Lift = (Row, i64);

impl AffineDiagram {
    pub fn identity(k: usize) -> Self {
        let pairs: Vec<_> = (0..k as i64).map(|x| ((Row::Bottom, x), (Row::Top, x))).collect();
        Self::from_lift_pairs(k, k, &pairs).expect("identity diagram is valid")
    }

    /// Builds a diagram from one representative lift pair per strand.
    pub fn from_lift_pairs(p: usize, q: usize, pairs: &[(Lift, Lift)]) -> Result<Self> {
        let mut bottom: Vec<Option<End>> = vec![None; p];
        let mut top: Vec<Option<End>> = vec![None; q];
        let period = |row| if row == Row::Bottom { p } else { q };
        for &(a, b) in pairs {
            for (from, to) in [(a, b), (b, a)] {
                let pf = period(from.0) as i64;
                let pt = period(to.0) as i64;
                if pf == 0 || pt == 0 {
                    return Err(Error::MalformedDiagram(format!("end on an empty row: {from:?}")));
                }
                let w = from.1.div_euclid(pf);
                let idx = from.1.rem_euclid(pf) as usize;
                let target = to.1 - w * pt;
                let end = End { row: to.0, index: target.rem_euclid(pt) as usize, shift: target.div_euclid(pt) };
                let slot = if from.0 == Row::Bottom { &mut bottom[idx] } else { &mut top[idx] };
                if slot.replace(end).is_some() {
                    return Err(Error::MalformedDiagram(format!("end {from:?} matched twice")));
                }
            }
        }
        let collect = |v: Vec<Option<End>>, row| {
            v.into_iter()
                .enumerate()
                .map(|(i, e)| e.ok_or_else(|| Error::MalformedDiagram(format!("unmatched end {row:?} {i}"))))
                .collect::<Result<Vec<_>>>()
        };
        let d = AffineDiagram { p, q, bottom: collect(bottom, Row::Bottom)?, top: collect(top, Row::Top)?, beta: 0, mu: 0 };
        d.validate()?;
        Ok(d)
    }

    pub fn n_in(&self) -> usize {
        self.p
    }

    pub fn n_out(&self) -> usize {
        self.q
    }

    pub fn beta(&self) -> u64 {
        self.beta
    }

    pub fn mu(&self) -> u64 {
        self.mu
    }

    pub fn ends(&self, row: Row) -> &[End] {
        match row {
            Row::Bottom => &self.bottom,
            Row::Top => &self.top,
        }
    }

    fn period(&self, row: Row) -> i64 {
        match row {
            Row::Bottom => self.p as i64,
            Row::Top => self.q as i64,
        }
    }

    pub fn with_loops(mut self, beta: u64, mu: u64) -> Result<Self> {
        self.beta = beta;
        self.mu = mu;
        self.validate()?;
        Ok(self)
    }

    /// Same matching and bracelets, contractible loops removed.
    pub fn without_mu(&self) -> Self {
        AffineDiagram { mu: 0, ..self.clone() }
    }

    /// Partner of an arbitrary lift.
    pub fn partner(&self, row: Row, lift: i64) -> Lift {
        let pr = self.period(row);
        let e = self.ends(row)[lift.rem_euclid(pr) as usize];
        (e.row, e.index as i64 + (e.shift + lift.div_euclid(pr)) * self.period(e.row))
    }

    /// Caps as lift pairs `(x, y)` with `x < y` and `x` in the fundamental domain.
    pub fn cap_lifts(&self) -> Vec<(i64, i64)> {
        self.same_row_arcs(Row::Bottom)
    }

    pub fn cup_lifts(&self) -> Vec<(i64, i64)> {
        self.same_row_arcs(Row::Top)
    }

    fn same_row_arcs(&self, row: Row) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for x in 0..self.period(row) {
            let (r, y) = self.partner(row, x);
            if r == row && y > x {
                out.push((x, y));
            }
        }
        out
    }

    /// Through strands as `(bottom index, top lift)`.
    pub fn through_lifts(&self) -> Vec<(usize, i64)> {
        (0..self.p)
            .filter_map(|i| match self.partner(Row::Bottom, i as i64) {
                (Row::Top, y) => Some((i, y)),
                _ => None,
            })
            .collect()
    }

    pub fn tau(&self) -> usize {
        self.bottom.iter().filter(|e| e.row == Row::Top).count()
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::MalformedDiagram(m));
        if self.p % 2 != self.q % 2 {
            return bad(format!("parity of {} and {} differs", self.p, self.q));
        }
        for row in [Row::Bottom, Row::Top] {
            for x in 0..self.period(row) {
                let (r, y) = self.partner(row, x);
                if r == row && y == x {
                    return bad(format!("{row:?} {x} is matched to itself"));
                }
                if self.partner(r, y) != (row, x) {
                    return bad(format!("matching is not involutive at {row:?} {x}"));
                }
                if r == row && (y - x).abs() >= self.period(row) {
                    return bad(format!("arc {x}..{y} on {row:?} wraps the whole circle"));
                }
            }
        }
        if self.beta > 0 && self.tau() > 0 {
            return bad("bracelets and through strands cannot coexist".into());
        }
        self.check_planar()
    }

    fn check_planar(&self) -> Result<()> {
        #[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
        enum Arc {
            Cap(i64, i64),
            Cup(i64, i64),
            Through(i64, i64),
        }
        let mut arcs = BTreeSet::new();
        for row in [Row::Bottom, Row::Top] {
            let pr = self.period(row);
            for x in -2 * pr..3 * pr {
                let (r, y) = self.partner(row, x);
                let arc = match (row, r) {
                    (Row::Bottom, Row::Bottom) => Arc::Cap(x.min(y), x.max(y)),
                    (Row::Top, Row::Top) => Arc::Cup(x.min(y), x.max(y)),
                    (Row::Bottom, Row::Top) => Arc::Through(x, y),
                    (Row::Top, Row::Bottom) => Arc::Through(y, x),
                };
                arcs.insert(arc);
            }
        }
        let nested_or_disjoint = |a: i64, b: i64, c: i64, d: i64| !((a < c && c < b && b < d) || (c < a && a < d && d < b));
        let arcs: Vec<Arc> = arcs.into_iter().collect();
        for (n, &s) in arcs.iter().enumerate() {
            for &t in &arcs[n + 1..] {
                let ok = match (s, t) {
                    (Arc::Cap(a, b), Arc::Cap(c, d)) | (Arc::Cup(a, b), Arc::Cup(c, d)) => nested_or_disjoint(a, b, c, d),
                    (Arc::Cap(..), Arc::Cup(..)) | (Arc::Cup(..), Arc::Cap(..)) => true,
                    (Arc::Cap(a, b), Arc::Through(x, _)) | (Arc::Through(x, _), Arc::Cap(a, b)) => !(a < x && x < b),
                    (Arc::Cup(a, b), Arc::Through(_, y)) | (Arc::Through(_, y), Arc::Cup(a, b)) => !(a < y && y < b),
                    (Arc::Through(x1, y1), Arc::Through(x2, y2)) => (x1 < x2) == (y1 < y2),
                };
                if !ok {
                    return Err(Error::MalformedDiagram("strands cross".into()));
                }
            }
        }
        Ok(())
    }

    /// Stacks `upper` on top of `self`; `self` is applied first.
    pub fn compose(&self, upper: &AffineDiagram) -> Result<AffineDiagram> {
        if self.q != upper.p {
            return Err(Error::PeriodMismatch(self.q, upper.p));
        }
        let q = self.q as i64;
        let mut visited = vec![false; self.q];
        // Guard against runaway traces; a valid stack crosses each middle point once.
        let limit = 2 * self.q + 2;

        let walk = |mut into_lower: bool, mut m: i64, visited: &mut Vec<bool>| -> Result<Lift> {
            for _ in 0..limit {
                visited[m.rem_euclid(q) as usize] = true;
                if into_lower {
                    match self.partner(Row::Top, m) {
                        (Row::Bottom, y) => return Ok((Row::Bottom, y)),
                        (_, y) => m = y,
                    }
                } else {
                    match upper.partner(Row::Bottom, m) {
                        (Row::Top, y) => return Ok((Row::Top, y)),
                        (_, y) => m = y,
                    }
                }
                into_lower = !into_lower;
            }
            Err(Error::MalformedDiagram("strand trace did not terminate".into()))
        };

        let mut pairs = Vec::with_capacity(self.p + upper.q);
        for x in 0..self.p as i64 {
            let end = match self.partner(Row::Bottom, x) {
                (Row::Bottom, y) => (Row::Bottom, y),
                (_, m) => walk(false, m, &mut visited)?,
            };
            pairs.push(((Row::Bottom, x), end));
        }
        for x in 0..upper.q as i64 {
            let end = match upper.partner(Row::Top, x) {
                (Row::Top, y) => (Row::Top, y),
                (_, m) => walk(true, m, &mut visited)?,
            };
            pairs.push(((Row::Top, x), end));
        }

        let (mut beta, mut mu) = (self.beta + upper.beta, self.mu + upper.mu);
        for m0 in 0..self.q {
            if visited[m0] {
                continue;
            }
            let mut m = m0 as i64;
            let mut closed = false;
            for _ in 0..limit {
                visited[m.rem_euclid(q) as usize] = true;
                m = self.partner(Row::Top, m).1;
                visited[m.rem_euclid(q) as usize] = true;
                m = upper.partner(Row::Bottom, m).1;
                if m.rem_euclid(q) as usize == m0 {
                    closed = true;
                    break;
                }
            }
            if !closed {
                return Err(Error::MalformedDiagram("closed loop trace did not terminate".into()));
            }
            match (m - m0 as i64) / q {
                0 => mu += 1,
                1 | -1 => beta += 1,
                w => return Err(Error::WindingViolation(w)),
            }
        }

        // Each strand was recorded from both of its outer ends; keep one copy.
        let mut strands = Vec::with_capacity(pairs.len());
        let mut seen = BTreeSet::new();
        for (a, b) in pairs {
            let key = |(row, x): Lift| {
                let pr = if row == Row::Bottom { self.p as i64 } else { upper.q as i64 };
                (row, x.rem_euclid(pr))
            };
            if seen.insert(key(a)) {
                seen.insert(key(b));
                strands.push((a, b));
            }
        }
        let d = AffineDiagram::from_lift_pairs(self.p, upper.q, &strands)?;
        d.with_loops(beta, mu)
    }

    pub fn invariants(&self) -> InvariantTuple {
        let ind_d = self.cap_lifts().iter().map(|&(x, _)| x as usize).collect();
        let ind_b = self.cup_lifts().iter().map(|&(x, _)| x as usize).collect();
        let through = self.through_lifts();
        let tau = through.len();
        let t0 = through.first().map(|&(_, y)| {
            let j = y.rem_euclid(self.q as i64) as usize;
            1 + (0..j).filter(|&t| self.top[t].row == Row::Bottom).count()
        });
        InvariantTuple { n_in: self.p, n_out: self.q, ind_d, ind_b, tau, t0, beta: self.beta, mu: self.mu }
    }
}

impl fmt::Display for AffineDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}:", self.p, self.q)?;
        for (x, y) in self.cap_lifts() {
            write!(f, " cap({x},{y})")?;
        }
        for (x, y) in self.cup_lifts() {
            write!(f, " cup({x},{y})")?;
        }
        for (x, y) in self.through_lifts() {
            write!(f, " {x}->{y}")?;
        }
        if self.beta > 0 {
            write!(f, " beta={}", self.beta)?;
        }
        if self.mu > 0 {
            write!(f, " mu={}", self.mu)?;
        }
        Ok(())
    }
}

/// The complete invariant of a morphism in the cylinder category.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantTuple {
    pub n_in: usize,
    pub n_out: usize,
    pub ind_d: Vec<usize>,
    pub ind_b: Vec<usize>,
    pub tau: usize,
    pub t0: Option<usize>,
    pub beta: u64,
    pub mu: u64,
}

impl InvariantTuple {
    /// Equality after forgetting contractible loops.
    pub fn eq_ignoring_mu(&self, other: &InvariantTuple) -> bool {
        InvariantTuple { mu: 0, ..self.clone() } == InvariantTuple { mu: 0, ..other.clone() }
    }
}

pub fn generator_diagram(g: Generator) -> AffineDiagram {
    use Row::{Bottom as B, Top as T};
    let g = g.validate().expect("generator_diagram needs a valid generator");
    let (p, q) = g.signature();
    let through = |pairs: &mut Vec<(Lift, Lift)>, xs: std::ops::Range<i64>, offset: i64| {
        pairs.extend(xs.map(|x| ((B, x), (T, x + offset))));
    };
    let mut pairs = Vec::new();
    match g {
        Generator::Id(k) => through(&mut pairs, 0..k as i64, 0),
        Generator::Tw(k) => through(&mut pairs, 0..k as i64, 1),
        Generator::TwInv(k) => through(&mut pairs, 0..k as i64, -1),
        Generator::Birth(k, i) => {
            let (k, i) = (k as i64, i as i64);
            pairs.push(((T, i), (T, i + 1)));
            if i <= k {
                through(&mut pairs, 0..i, 0);
                through(&mut pairs, i..k, 2);
            } else {
                through(&mut pairs, 1..k, 0);
                if k > 0 {
                    pairs.push(((B, 0), (T, -2)));
                }
            }
        }
        Generator::Death(k, i) => {
            let (k, i) = (k as i64, i as i64);
            pairs.push(((B, i), (B, i + 1)));
            if i <= k - 2 {
                through(&mut pairs, 0..i, 0);
                through(&mut pairs, i + 2..k, -2);
            } else {
                through(&mut pairs, 1..k - 1, 0);
            }
        }
    }
    AffineDiagram::from_lift_pairs(p, q, &pairs).expect("generator diagrams are valid")
}

pub fn compose_diagrams(a: &AffineDiagram, b: &AffineDiagram) -> Result<AffineDiagram> {
    a.compose(b)
}

pub fn evaluate(w: &GeneratorWord) -> Result<AffineDiagram> {
    w.gens()
        .iter()
        .try_fold(AffineDiagram::identity(w.n_in()), |acc, &g| acc.compose(&generator_diagram(g)))
}

pub fn invariants(a: &AffineDiagram) -> InvariantTuple {
    a.invariants()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CategoryTag {
    /// Contractible loops are discarded and the Dehn twist is trivial.
    Cyl,
    /// Contractible loops are counted.
    CylA,
    /// Affine diagrams: loops counted and lift shifts retained.
    Da,
}

impl FromStr for CategoryTag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "cyl" => Ok(CategoryTag::Cyl),
            "cyla" => Ok(CategoryTag::CylA),
            "da" => Ok(CategoryTag::Da),
            other => Err(format!("unknown category {other:?} (expected cyl, cyla or da)")),
        }
    }
}

impl fmt::Display for CategoryTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CategoryTag::Cyl => "cyl",
            CategoryTag::CylA => "cyla",
            CategoryTag::Da => "da",
        })
    }
}

pub fn eq_in(cat: CategoryTag, w1: &GeneratorWord, w2: &GeneratorWord) -> Result<bool> {
    if w1.signature() != w2.signature() {
        return Err(Error::SignatureMismatch(w1.signature(), w2.signature()));
    }
    Ok(match cat {
        CategoryTag::Da => evaluate(w1)? == evaluate(w2)?,
        CategoryTag::CylA => evaluate(&w1.canonicalize())?.invariants() == evaluate(&w2.canonicalize())?.invariants(),
        CategoryTag::Cyl => evaluate(&w1.canonicalize())?
            .invariants()
            .eq_ignoring_mu(&evaluate(&w2.canonicalize())?.invariants()),
    })
}
