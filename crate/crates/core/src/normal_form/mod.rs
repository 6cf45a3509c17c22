//! Unique factorization of a cylinder morphism into deaths, a twist or
//! bracelet middle, and births, synthesized directly from the invariants.

mod relations;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use relations::{all_instances, check_relation, Relation, RelationInstance, RelationSides};

use crate::diagram::{Generator, GeneratorWord};
use crate::error::{Error, Result};
use crate::evaluator::{evaluate, AffineDiagram, InvariantTuple};

/// Caps `(start, end)` on `S^1_n` with the given starting points.
///
/// Each cap runs clockwise from its start to its end, enclosing only nested
/// caps. Returned in closing order of a cyclic stack scan.
pub fn reconstruct_caps(n: usize, starts: &[usize]) -> Result<Vec<(usize, usize)>> {
    let invalid = || Error::InvalidIndex { n, starts: starts.to_vec() };
    if 2 * starts.len() > n || starts.iter().any(|&s| s >= n) || starts.windows(2).any(|w| w[0] >= w[1]) {
        return Err(invalid());
    }
    let mut is_start = vec![false; n];
    for &s in starts {
        is_start[s] = true;
    }
    let mut matched = vec![false; n];
    let mut stack = Vec::new();
    let mut caps = Vec::with_capacity(starts.len());
    for pos in 0..2 * n {
        let l = pos % n;
        if is_start[l] {
            if pos >= n {
                if stack.contains(&l) {
                    return Err(Error::InconsistentIndex { n, starts: starts.to_vec() });
                }
                continue;
            }
            stack.push(l);
        } else if !matched[l] {
            if let Some(s) = stack.pop() {
                matched[s] = true;
                matched[l] = true;
                caps.push((s, l));
            }
        }
    }
    if !stack.is_empty() {
        return Err(Error::InconsistentIndex { n, starts: starts.to_vec() });
    }
    Ok(caps)
}

/// Points of `S^1_n` not covered by the caps.
pub fn through_points(n: usize, caps: &[(usize, usize)]) -> Vec<usize> {
    let mut used = vec![false; n];
    for &(a, b) in caps {
        used[a] = true;
        used[b] = true;
    }
    (0..n).filter(|&l| !used[l]).collect()
}

/// Deaths-only word from `S^1_n` realizing the death index `ind_d`.
pub fn synthesize_type1(n: usize, ind_d: &[usize]) -> Result<GeneratorWord> {
    let mut caps = reconstruct_caps(n, ind_d)?;
    // `circle[pos]` is the original label sitting at position `pos` now.
    let mut circle: Vec<usize> = (0..n).collect();
    let mut word = GeneratorWord::identity(n);
    while !caps.is_empty() {
        let k = circle.len();
        let pos = |l: usize, circle: &[usize]| circle.iter().position(|&c| c == l).expect("cap end on circle");
        let (idx, start) = caps
            .iter()
            .enumerate()
            .filter_map(|(idx, &(s, e))| {
                let ps = pos(s, &circle);
                (pos(e, &circle) == (ps + 1) % k).then_some((idx, ps))
            })
            .min_by_key(|&(_, ps)| ps)
            .ok_or_else(|| Error::InconsistentIndex { n, starts: ind_d.to_vec() })?;
        caps.remove(idx);
        word.push(Generator::Death(k, start))?;
        circle = if start + 1 < k {
            circle[..start].iter().chain(&circle[start + 2..]).copied().collect()
        } else if k == 2 {
            Vec::new()
        } else {
            // The cap (k-1, 0) rotates the survivors: old position k-2 becomes 0.
            std::iter::once(circle[k - 2]).chain(circle[1..k - 2].iter().copied()).collect()
        };
    }
    Ok(word)
}

/// Births-only word into `S^1_m` realizing the birth index `ind_b`.
///
/// Flipping a cylinder upside down turns `Death(k, i)` into `Birth(k-2, i)`
/// and reverses composition order.
pub fn synthesize_type3(m: usize, ind_b: &[usize]) -> Result<GeneratorWord> {
    let deaths = synthesize_type1(m, ind_b)?;
    let births = deaths
        .gens()
        .iter()
        .rev()
        .map(|&g| match g {
            Generator::Death(k, i) => Generator::Birth(k - 2, i),
            _ => unreachable!("type I words contain only deaths"),
        })
        .collect();
    GeneratorWord::new(deaths.n_out(), births)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Middle {
    Empty,
    TwistPower { arity: usize, power: usize },
    Bracelets(u64),
}

impl Middle {
    pub fn to_word(self, arity: usize) -> GeneratorWord {
        match self {
            Middle::Empty => GeneratorWord::identity(arity),
            Middle::TwistPower { arity, power } => GeneratorWord::new(arity, vec![Generator::Tw(arity); power])
                .expect("twists are endomorphisms"),
            Middle::Bracelets(b) => {
                let one = [Generator::Birth(0, 0), Generator::Death(2, 1)];
                GeneratorWord::new(0, one.iter().copied().cycle().take(2 * b as usize).collect())
                    .expect("bracelet word is typed")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalForm {
    pub deaths: GeneratorWord,
    pub middle: Middle,
    pub births: GeneratorWord,
    pub mu: u64,
}

impl NormalForm {
    pub fn n_in(&self) -> usize {
        self.deaths.n_in()
    }

    pub fn n_out(&self) -> usize {
        self.births.n_out()
    }

    /// Number of through strands between the deaths and the births.
    pub fn tau(&self) -> usize {
        self.deaths.n_out()
    }

    /// Word realizing the contractible loops on the middle circle.
    pub fn loops_word(&self) -> GeneratorWord {
        let t = self.tau();
        let one = [Generator::Birth(t, 0), Generator::Death(t + 2, 0)];
        GeneratorWord::new(t, one.iter().copied().cycle().take(2 * self.mu as usize).collect())
            .expect("loop word is typed")
    }

    /// Deaths, then the middle, then contractible loops, then births.
    pub fn assemble(&self) -> GeneratorWord {
        self.deaths
            .then(&self.middle.to_word(self.tau()))
            .and_then(|w| w.then(&self.loops_word()))
            .and_then(|w| w.then(&self.births))
            .expect("normal form pieces are typed")
    }

    /// Normal form with contractible loops dropped, the canonical form in Cyl.
    pub fn without_mu(&self) -> NormalForm {
        NormalForm { mu: 0, ..self.clone() }
    }
}

impl fmt::Display for NormalForm {
    /// Mathematical order: births first, deaths last, joined with `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let group = |gens: Vec<Generator>, times: u64| -> Option<String> {
            if times == 0 {
                return None;
            }
            let body: Vec<String> = gens.iter().rev().map(|g| g.to_string()).collect();
            Some(match (times, body.len()) {
                (1, _) => body.join("."),
                (_, 1) => format!("{}^{times}", body[0]),
                _ => format!("({})^{times}", body.join(".")),
            })
        };
        let t = self.tau();
        let mut parts = Vec::new();
        parts.extend(self.births.gens().iter().rev().map(|g| g.to_string()));
        parts.extend(group(vec![Generator::Birth(t, 0), Generator::Death(t + 2, 0)], self.mu));
        match self.middle {
            Middle::Empty => {}
            Middle::TwistPower { arity, power } => parts.extend(group(vec![Generator::Tw(arity)], power as u64)),
            Middle::Bracelets(b) => parts.extend(group(vec![Generator::Birth(0, 0), Generator::Death(2, 1)], b)),
        }
        parts.extend(self.deaths.gens().iter().rev().map(|g| g.to_string()));
        if parts.is_empty() {
            write!(f, "id({})", self.n_in())
        } else {
            f.write_str(&parts.join("."))
        }
    }
}

/// Normal form of the morphism represented by an affine diagram.
pub fn normal_form_of(inv: &InvariantTuple) -> Result<NormalForm> {
    let deaths = synthesize_type1(inv.n_in, &inv.ind_d)?;
    let births = synthesize_type3(inv.n_out, &inv.ind_b)?;
    let tau = inv.tau;
    let mut nf = NormalForm { deaths, middle: Middle::Empty, births, mu: inv.mu };
    if inv.beta > 0 {
        nf.middle = Middle::Bracelets(inv.beta);
    } else if tau > 0 {
        let mut found = None;
        for power in 0..tau {
            nf.middle = Middle::TwistPower { arity: tau, power };
            if evaluate(&nf.assemble())?.invariants().t0 == inv.t0 {
                found = Some(power);
                break;
            }
        }
        let power = found.ok_or_else(|| Error::MalformedDiagram(format!("no twist power matches t0 = {:?}", inv.t0)))?;
        nf.middle = if power == 0 { Middle::Empty } else { Middle::TwistPower { arity: tau, power } };
    }
    Ok(nf)
}

pub fn normalize_diagram(d: &AffineDiagram) -> Result<NormalForm> {
    normal_form_of(&d.invariants())
}

/// Normal form of a word in Cyl (inverse twists are eliminated first).
pub fn normalize(w: &GeneratorWord) -> Result<NormalForm> {
    normalize_diagram(&evaluate(&w.canonicalize())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{power, word, Generator::*};
    use crate::evaluator::{eq_in, CategoryTag};

    #[test]
    fn caps_from_starts() {
        assert_eq!(reconstruct_caps(4, &[0]).unwrap(), vec![(0, 1)]);
        assert_eq!(through_points(4, &[(0, 1)]), vec![2, 3]);
        assert_eq!(reconstruct_caps(6, &[0, 1]).unwrap(), vec![(1, 2), (0, 3)]);
        assert_eq!(reconstruct_caps(4, &[3]).unwrap(), vec![(3, 0)]);
        assert_eq!(through_points(4, &[(3, 0)]), vec![1, 2]);
    }

    #[test]
    fn caps_reject_bad_starts() {
        assert!(matches!(reconstruct_caps(2, &[0, 1]), Err(Error::InvalidIndex { .. })));
        assert!(matches!(reconstruct_caps(4, &[4]), Err(Error::InvalidIndex { .. })));
    }

    #[test]
    fn type1_examples() {
        assert_eq!(synthesize_type1(4, &[0]).unwrap().gens(), &[Death(4, 0)]);
        assert_eq!(synthesize_type1(6, &[0, 1]).unwrap().gens(), &[Death(6, 1), Death(4, 0)]);
        assert_eq!(synthesize_type1(2, &[1]).unwrap().gens(), &[Death(2, 1)]);
    }

    #[test]
    fn type3_examples() {
        assert_eq!(synthesize_type3(4, &[2]).unwrap().gens(), &[Birth(2, 2)]);
        assert_eq!(synthesize_type3(6, &[0, 1]).unwrap().gens(), &[Birth(2, 0), Birth(4, 1)]);
        let w = synthesize_type3(2, &[]).unwrap();
        assert_eq!(w, GeneratorWord::identity(2));
    }

    #[test]
    fn synthesized_words_reproduce_their_index() {
        // Every start set on up to 10 points.
        for n in 0..=10usize {
            for mask in 0u32..(1 << n) {
                let starts: Vec<usize> = (0..n).filter(|&b| mask & (1 << b) != 0).collect();
                if 2 * starts.len() > n {
                    continue;
                }
                let w1 = synthesize_type1(n, &starts).unwrap();
                let inv = evaluate(&w1).unwrap().invariants();
                assert_eq!(inv.ind_d, starts, "deaths n={n}");
                assert!(inv.ind_b.is_empty() && inv.beta == 0 && inv.mu == 0);
                let w3 = synthesize_type3(n, &starts).unwrap();
                let inv = evaluate(&w3).unwrap().invariants();
                assert_eq!(inv.ind_b, starts, "births n={n}");
                assert!(inv.ind_d.is_empty() && inv.beta == 0 && inv.mu == 0);
            }
        }
    }

    #[test]
    fn normalize_examples() {
        let nf = normalize(&power(Tw(2), 5).unwrap()).unwrap();
        assert!(nf.deaths.is_empty() && nf.births.is_empty());
        assert_eq!(nf.middle, Middle::TwistPower { arity: 2, power: 1 });
        assert_eq!(nf.to_string(), "tw(2)");

        let nf = normalize(&word(&[Birth(0, 0), Death(2, 1), Birth(0, 0), Death(2, 1)])).unwrap();
        assert_eq!(nf.middle, Middle::Bracelets(2));
        assert_eq!(nf.to_string(), "(d(2,1).b(0,0))^2");

        let nf = normalize(&word(&[Birth(2, 1), Death(4, 2)])).unwrap();
        assert_eq!((nf.middle, nf.mu), (Middle::Empty, 0));
        assert_eq!(nf.to_string(), "id(2)");
    }

    #[test]
    fn assembled_form_has_same_invariants() {
        let w = word(&[Birth(3, 1), Tw(5), Death(5, 4), Birth(3, 4), Death(5, 0), Birth(3, 2), Death(5, 3)]);
        let nf = normalize(&w).unwrap();
        let a = nf.assemble();
        assert_eq!(evaluate(&a).unwrap().invariants(), evaluate(&w).unwrap().invariants());
        assert!(eq_in(CategoryTag::CylA, &a, &w).unwrap());
        assert_eq!(normalize(&a).unwrap(), nf);
    }
}
