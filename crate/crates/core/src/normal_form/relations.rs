//! Catalog of defining relations, enumerated as concrete word pairs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{Generator, Generator::*, GeneratorWord};
use crate::error::{Error, Result};
use crate::evaluator::evaluate;

/// Relation families. Birth/death pairs are read as `[Birth(k, j), Death(k+2, i)]`
/// in application order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Relation {
    /// A cup closed by the matching cap leaves a contractible loop.
    LoopRemoval,
    /// Adjacent cup and cap straighten to the identity.
    Snake,
    /// Births and deaths on disjoint slots commute.
    FarCommute,
    BirthBirth,
    DeathDeath,
    BirthTwist,
    DeathTwist,
    /// `Tw(k)^k = Id(k)`.
    DehnTwist,
    /// The two bracelet representatives agree.
    BraceletSymmetry,
    /// Snakes through the wrap-around slot.
    WrapSnake,
    /// Snakes that wind around the cylinder produce a twist.
    TwistedSnake,
    WrapFarCommute,
    WrapBirthBirth,
    WrapDeathDeath,
}

impl Relation {
    pub const ALL: [Relation; 14] = [
        Relation::LoopRemoval,
        Relation::Snake,
        Relation::FarCommute,
        Relation::BirthBirth,
        Relation::DeathDeath,
        Relation::BirthTwist,
        Relation::DeathTwist,
        Relation::DehnTwist,
        Relation::BraceletSymmetry,
        Relation::WrapSnake,
        Relation::TwistedSnake,
        Relation::WrapFarCommute,
        Relation::WrapBirthBirth,
        Relation::WrapDeathDeath,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Relation::LoopRemoval => "loop-removal",
            Relation::Snake => "snake",
            Relation::FarCommute => "far-commute",
            Relation::BirthBirth => "birth-birth",
            Relation::DeathDeath => "death-death",
            Relation::BirthTwist => "birth-twist",
            Relation::DeathTwist => "death-twist",
            Relation::DehnTwist => "dehn-twist",
            Relation::BraceletSymmetry => "bracelet-symmetry",
            Relation::WrapSnake => "wrap-snake",
            Relation::TwistedSnake => "twisted-snake",
            Relation::WrapFarCommute => "wrap-far-commute",
            Relation::WrapBirthBirth => "wrap-birth-birth",
            Relation::WrapDeathDeath => "wrap-death-death",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One relation at concrete arity `k` and slots `i`, `j`.
///
/// For birth/death families `j` is the birth slot and `i` the death slot.
/// For the pure birth or pure death families `i` and `j` are the two slots;
/// unused parameters are zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RelationInstance {
    pub relation: Relation,
    pub k: usize,
    pub i: usize,
    pub j: usize,
}

/// Both sides of a relation, and the contractible loops the right side carries
/// in the loop-counting category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationSides {
    pub lhs: GeneratorWord,
    pub rhs: GeneratorWord,
    pub rhs_loops: u64,
}

fn w(n_in: usize, gens: Vec<Generator>) -> Result<GeneratorWord> {
    GeneratorWord::new(n_in, gens)
}

impl RelationInstance {
    pub fn new(relation: Relation, k: usize, i: usize, j: usize) -> Self {
        RelationInstance { relation, k, i, j }
    }

    pub fn in_range(&self) -> bool {
        let RelationInstance { relation, k, i, j } = *self;
        match relation {
            Relation::LoopRemoval => j == 0 && i <= k + 1,
            Relation::Snake => k >= 1 && j <= k && i <= k && (i == j + 1 || i + 1 == j),
            Relation::FarCommute => k >= 2 && i <= k && j <= k && i.abs_diff(j) > 1,
            Relation::BirthBirth => i <= j && j <= k,
            Relation::DeathDeath => k >= 4 && i + 1 < j && j + 2 <= k,
            Relation::BirthTwist => j == 0 && i <= k,
            Relation::DeathTwist => j == 0 && k >= 2 && i + 1 < k,
            Relation::DehnTwist => i == 0 && j == 0,
            Relation::BraceletSymmetry => k == 0 && i == 0 && j == 0,
            Relation::WrapSnake => k >= 1 && ((j == k + 1 && i == k) || (j == k && i == k + 1)),
            Relation::TwistedSnake => k >= 1 && ((j == 0 && i == k + 1) || (j == k + 1 && i == 0)),
            Relation::WrapFarCommute => {
                k >= 2 && ((j == k + 1 && (1..k).contains(&i)) || (i == k + 1 && (1..k).contains(&j)))
            }
            Relation::WrapBirthBirth => j == 0 && (1..=k + 1).contains(&i),
            Relation::WrapDeathDeath => j == 0 && k >= 4 && (1..=k - 3).contains(&i),
        }
    }

    pub fn sides(&self) -> Result<RelationSides> {
        if !self.in_range() {
            return Err(Error::OutOfRange(self.to_string()));
        }
        let RelationInstance { relation, k, i, j } = *self;
        let birth_death = || w(k, vec![Birth(k, j), Death(k + 2, i)]);
        let (lhs, rhs, rhs_loops) = match relation {
            Relation::LoopRemoval => (w(k, vec![Birth(k, i), Death(k + 2, i)])?, w(k, vec![Id(k)])?, 1),
            Relation::Snake | Relation::WrapSnake => (birth_death()?, w(k, vec![Id(k)])?, 0),
            Relation::FarCommute | Relation::WrapFarCommute => {
                let rhs = if relation == Relation::WrapFarCommute && j == k + 1 {
                    vec![Death(k, i), Birth(k - 2, k - 1)]
                } else if relation == Relation::WrapFarCommute {
                    vec![Death(k, k - 1), Birth(k - 2, j)]
                } else if i + 1 < j {
                    vec![Death(k, i), Birth(k - 2, j - 2)]
                } else {
                    vec![Death(k, i - 2), Birth(k - 2, j)]
                };
                (birth_death()?, w(k, rhs)?, 0)
            }
            Relation::BirthBirth => (
                w(k, vec![Birth(k, j), Birth(k + 2, i)])?,
                w(k, vec![Birth(k, i), Birth(k + 2, j + 2)])?,
                0,
            ),
            Relation::DeathDeath => (
                w(k, vec![Death(k, j), Death(k - 2, i)])?,
                w(k, vec![Death(k, i), Death(k - 2, j - 2)])?,
                0,
            ),
            Relation::BirthTwist => (
                w(k, vec![Birth(k, i), Tw(k + 2)])?,
                w(k, vec![Tw(k), Birth(k, i + 1)])?,
                0,
            ),
            Relation::DeathTwist => (
                w(k, vec![Death(k, i), Tw(k - 2)])?,
                w(k, vec![Tw(k), Death(k, i + 1)])?,
                0,
            ),
            Relation::DehnTwist => (w(k, vec![Tw(k); k])?, w(k, vec![Id(k)])?, 0),
            Relation::BraceletSymmetry => (
                w(0, vec![Birth(0, 0), Death(2, 1)])?,
                w(0, vec![Birth(0, 1), Death(2, 0)])?,
                0,
            ),
            Relation::TwistedSnake => {
                let power = if j == 0 { 2 } else { (k as i64 - 2).rem_euclid(k as i64) as usize };
                (birth_death()?, w(k, vec![Tw(k); power])?, 0)
            }
            Relation::WrapBirthBirth => (
                w(k, vec![Birth(k, k + 1), Birth(k + 2, i)])?,
                w(k, vec![Birth(k, i), Birth(k + 2, k + 3)])?,
                0,
            ),
            Relation::WrapDeathDeath => (
                w(k, vec![Death(k, k - 1), Death(k - 2, i)])?,
                w(k, vec![Death(k, i), Death(k - 2, k - 3)])?,
                0,
            ),
        };
        Ok(RelationSides { lhs, rhs, rhs_loops })
    }
}

impl fmt::Display for RelationInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} k={} i={} j={}", self.relation, self.k, self.i, self.j)
    }
}

/// Every in-range instance with `k <= max_k`.
pub fn all_instances(max_k: usize) -> Vec<RelationInstance> {
    let mut out = Vec::new();
    for relation in Relation::ALL {
        for k in 0..=max_k {
            for i in 0..=k + 3 {
                for j in 0..=k + 3 {
                    let inst = RelationInstance { relation, k, i, j };
                    if inst.in_range() {
                        out.push(inst);
                    }
                }
            }
        }
    }
    out
}

/// Whether both sides agree in Cyl and, with the stated loop count, in the
/// loop-counting category.
pub fn check_relation(instance: &RelationInstance) -> Result<bool> {
    let sides = instance.sides()?;
    let lhs = evaluate(&sides.lhs)?.invariants();
    let mut rhs = evaluate(&sides.rhs)?.invariants();
    let cyl = lhs.eq_ignoring_mu(&rhs);
    rhs.mu += sides.rhs_loops;
    Ok(cyl && lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stated_examples() {
        let far = RelationInstance::new(Relation::FarCommute, 6, 0, 4);
        let s = far.sides().unwrap();
        assert_eq!(s.lhs.gens(), &[Birth(6, 4), Death(8, 0)]);
        assert_eq!(s.rhs.gens(), &[Death(6, 0), Birth(4, 2)]);
        assert!(check_relation(&far).unwrap());
        let wrap = RelationInstance::new(Relation::WrapSnake, 3, 3, 4);
        assert_eq!(wrap.sides().unwrap().lhs.gens(), &[Birth(3, 4), Death(5, 3)]);
        assert!(check_relation(&wrap).unwrap());
        assert!(check_relation(&RelationInstance::new(Relation::DehnTwist, 0, 0, 0)).unwrap());
    }

    #[test]
    fn out_of_range_is_an_error() {
        let bad = RelationInstance::new(Relation::DeathDeath, 3, 0, 2);
        assert!(matches!(check_relation(&bad), Err(Error::OutOfRange(_))));
        let bad = RelationInstance::new(Relation::Snake, 0, 1, 0);
        assert!(matches!(bad.sides(), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn every_instance_up_to_eight_holds() {
        let all = all_instances(8);
        assert!(all.len() > 500);
        let failed: Vec<_> = all.iter().filter(|r| !check_relation(r).unwrap()).collect();
        assert!(failed.is_empty(), "{failed:?}");
    }

    #[test]
    fn every_family_is_instantiated() {
        let all = all_instances(8);
        for rel in Relation::ALL {
            assert!(all.iter().any(|r| r.relation == rel), "{rel}");
        }
    }

    #[test]
    fn loop_removal_differs_without_the_loop() {
        let s = RelationInstance::new(Relation::LoopRemoval, 2, 1, 0).sides().unwrap();
        let l = evaluate(&s.lhs).unwrap().invariants();
        let r = evaluate(&s.rhs).unwrap().invariants();
        assert_eq!((l.mu, r.mu), (1, 0));
    }
}
