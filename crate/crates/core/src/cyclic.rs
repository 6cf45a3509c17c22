//! The simplex category, the cyclic category `Λ`, its square-root variant and
//! the shaded annular category, all at the level of words, together with their
//! translations into the cylinder category.
//!
//! Everything is written in the opposite-category convention: `Face(n, i)` goes
//! from `[n]` to `[n-1]`, `Degen(n, j)` from `[n]` to `[n+1]`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{Generator, GeneratorWord};
use crate::error::{Error, Result};
use crate::linear::{BarRep, Matrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SimplexGen {
    Face(usize, usize),
    Degen(usize, usize),
    /// Cyclic rotation of `[n]`, of order `n + 1`.
    Cyc(usize),
    /// Square root of the rotation, of order `2(n + 1)`.
    SqrtCyc(usize),
}

impl SimplexGen {
    pub fn signature(self) -> (usize, usize) {
        match self {
            SimplexGen::Face(n, _) => (n, n.wrapping_sub(1)),
            SimplexGen::Degen(n, _) => (n, n + 1),
            SimplexGen::Cyc(n) | SimplexGen::SqrtCyc(n) => (n, n),
        }
    }

    fn validate(self) -> Result<Self> {
        let ok = match self {
            SimplexGen::Face(n, i) => n >= 1 && i <= n,
            SimplexGen::Degen(n, j) => j <= n,
            SimplexGen::Cyc(_) | SimplexGen::SqrtCyc(_) => true,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::CyclicType(format!("{self} has an index out of range")))
        }
    }
}

impl fmt::Display for SimplexGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SimplexGen::Face(n, i) => write!(f, "dl({n},{i})"),
            SimplexGen::Degen(n, j) => write!(f, "s({n},{j})"),
            SimplexGen::Cyc(n) => write!(f, "t({n})"),
            SimplexGen::SqrtCyc(n) => write!(f, "sqrt_t({n})"),
        }
    }
}

/// Which rotation generator, if any, a word may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Flavor {
    Simplicial,
    Cyclic,
    SqrtCyclic,
}

impl Flavor {
    fn allows(self, g: SimplexGen) -> bool {
        match g {
            SimplexGen::Face(..) | SimplexGen::Degen(..) => true,
            SimplexGen::Cyc(_) => self == Flavor::Cyclic,
            SimplexGen::SqrtCyc(_) => self == Flavor::SqrtCyclic,
        }
    }
}

/// Chain-typed word in application order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplexWord {
    flavor: Flavor,
    n_in: usize,
    n_out: usize,
    gens: Vec<SimplexGen>,
}

impl SimplexWord {
    pub fn identity(flavor: Flavor, n: usize) -> Self {
        SimplexWord { flavor, n_in: n, n_out: n, gens: Vec::new() }
    }

    pub fn new(flavor: Flavor, n_in: usize, gens: Vec<SimplexGen>) -> Result<Self> {
        let mut n_out = n_in;
        for &g in &gens {
            g.validate()?;
            if !flavor.allows(g) {
                return Err(Error::CyclicType(format!("{g} is not a generator of the {flavor:?} category")));
            }
            let (s, t) = g.signature();
            if s != n_out {
                return Err(Error::CyclicType(format!("{g} starts at [{s}] but the word is at [{n_out}]")));
            }
            n_out = t;
        }
        Ok(SimplexWord { flavor, n_in, n_out, gens })
    }

    pub fn from_gens(flavor: Flavor, gens: &[SimplexGen]) -> Result<Self> {
        let n_in = gens.first().map_or(0, |g| g.signature().0);
        Self::new(flavor, n_in, gens.to_vec())
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn n_in(&self) -> usize {
        self.n_in
    }

    pub fn n_out(&self) -> usize {
        self.n_out
    }

    pub fn gens(&self) -> &[SimplexGen] {
        &self.gens
    }

    pub fn then(&self, next: &SimplexWord) -> Result<Self> {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&next.gens);
        Self::new(self.flavor.max_with(next.flavor)?, self.n_in, gens)
    }
}

impl Flavor {
    fn max_with(self, other: Flavor) -> Result<Flavor> {
        match (self, other) {
            (a, b) if a == b => Ok(a),
            (Flavor::Simplicial, b) => Ok(b),
            (a, Flavor::Simplicial) => Ok(a),
            (a, b) => Err(Error::CyclicType(format!("cannot mix {a:?} and {b:?} words"))),
        }
    }
}

impl fmt::Display for SimplexWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "id[{}]", self.n_in);
        }
        let parts: Vec<String> = self.gens.iter().rev().map(|g| g.to_string()).collect();
        f.write_str(&parts.join("."))
    }
}

/// A weakly increasing map `{0..=m} -> {0..=n}`, stored as its value table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonotoneMap {
    pub codomain: usize,
    pub table: Vec<usize>,
}

impl MonotoneMap {
    pub fn identity(n: usize) -> Self {
        MonotoneMap { codomain: n, table: (0..=n).collect() }
    }

    pub fn domain(&self) -> usize {
        self.table.len() - 1
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.codomain)
    }
}

/// The map of finite ordinals dual to a simplicial word.
///
/// A face `[n] -> [n-1]` becomes the coface `[n-1] -> [n]` that skips `i`; a
/// degeneracy becomes the codegeneracy that repeats `j`. Composition is
/// reversed.
pub fn monotone_semantics(w: &SimplexWord) -> Result<MonotoneMap> {
    let table = (0..=w.n_out)
        .map(|mut x| {
            for &g in w.gens.iter().rev() {
                x = match g {
                    SimplexGen::Face(_, i) => x + usize::from(x >= i),
                    SimplexGen::Degen(_, j) => x - usize::from(x > j),
                    _ => return Err(Error::CyclicType(format!("{g} has no monotone semantics"))),
                };
            }
            Ok(x)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MonotoneMap { codomain: w.n_in, table })
}

fn embed(w: &SimplexWord, rotation: impl Fn(SimplexGen) -> Option<Vec<Generator>>) -> Result<GeneratorWord> {
    let mut gens = Vec::new();
    for &g in &w.gens {
        match g {
            SimplexGen::Face(n, i) => gens.push(Generator::Death(2 * n + 2, 2 * i)),
            // The cup goes between the two copies of vertex j; see `lambda_to_cyl`.
            SimplexGen::Degen(n, j) => gens.push(Generator::Birth(2 * n + 2, 2 * j + 1)),
            g => gens.extend(rotation(g).ok_or_else(|| Error::CyclicType(format!("{g} cannot be translated here")))?),
        }
    }
    GeneratorWord::new(2 * w.n_in + 2, gens)
}

/// `[n] ↦ S^1_{2n+2}`, faces to even deaths, degeneracies to odd births and
/// the rotation to the square of the twist.
///
/// Vertex `x` of `[n]` sits on the pair of marked points `2x, 2x+1`. A
/// degeneracy doubling vertex `j` therefore inserts its cup at slot `2j+1`,
/// inside that pair; this is what makes `d^{j+1} ∘ s^j = id` a snake.
pub fn lambda_to_cyl(w: &SimplexWord) -> Result<GeneratorWord> {
    embed(w, |g| match g {
        SimplexGen::Cyc(n) => Some(vec![Generator::Tw(2 * n + 2); 2]),
        _ => None,
    })
}

/// Same object assignment as [`lambda_to_cyl`]; the square-root rotation is a
/// single twist.
pub fn sqrtlambda_to_cyl(w: &SimplexWord) -> Result<GeneratorWord> {
    embed(w, |g| match g {
        SimplexGen::SqrtCyc(n) => Some(vec![Generator::Tw(2 * n + 2)]),
        _ => None,
    })
}

/// The inclusion of `Λ` into its square-root variant: `t ↦ sqrt_t^2`.
pub fn lambda_to_sqrt(w: &SimplexWord) -> Result<SimplexWord> {
    let mut gens = Vec::new();
    for &g in &w.gens {
        match g {
            SimplexGen::Cyc(n) => gens.extend([SimplexGen::SqrtCyc(n); 2]),
            SimplexGen::SqrtCyc(_) => return Err(Error::CyclicType(format!("{g} is not in the cyclic category"))),
            g => gens.push(g),
        }
    }
    SimplexWord::new(if w.flavor == Flavor::Simplicial { Flavor::Simplicial } else { Flavor::SqrtCyclic }, w.n_in, gens)
}

/// The doubling functor `[n] ↦ [2n+1]`.
///
/// Faces and degeneracies go to adjacent pairs. The rotation `t_n` goes to
/// `t_{2n+1}^2`, and a square-root rotation `sqrt_t_n` to `t_{2n+1}`, so the
/// result of doubling a cyclic or square-root word is a cyclic word.
pub fn delta_double(w: &SimplexWord) -> Result<SimplexWord> {
    let mut gens = Vec::new();
    for &g in &w.gens {
        match g {
            SimplexGen::Face(n, i) => gens.extend([SimplexGen::Face(2 * n + 1, 2 * i), SimplexGen::Face(2 * n, 2 * i)]),
            SimplexGen::Degen(n, j) => {
                gens.extend([SimplexGen::Degen(2 * n + 1, 2 * j), SimplexGen::Degen(2 * n + 2, 2 * j)])
            }
            SimplexGen::Cyc(n) => gens.extend([SimplexGen::Cyc(2 * n + 1); 2]),
            SimplexGen::SqrtCyc(n) => gens.push(SimplexGen::Cyc(2 * n + 1)),
        }
    }
    let flavor = if w.flavor == Flavor::Simplicial { Flavor::Simplicial } else { Flavor::Cyclic };
    SimplexWord::new(flavor, 2 * w.n_in + 1, gens)
}

/// A named identity between two simplicial-style words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicIdentity {
    pub name: String,
    pub lhs: SimplexWord,
    pub rhs: SimplexWord,
}

fn identity_pair(name: String, flavor: Flavor, lhs: &[SimplexGen], rhs: &[SimplexGen], n_in: usize) -> CyclicIdentity {
    let lhs = SimplexWord::new(flavor, n_in, lhs.to_vec()).expect("identity sides are typed");
    let rhs = SimplexWord::new(flavor, n_in, rhs.to_vec()).expect("identity sides are typed");
    CyclicIdentity { name, lhs, rhs }
}

/// Face/face, degeneracy/degeneracy and face/degeneracy identities with
/// `n <= max_n`, in the given flavor.
pub fn simplicial_identities(max_n: usize, flavor: Flavor) -> Vec<CyclicIdentity> {
    use SimplexGen::{Degen as S, Face as D};
    let mut out = Vec::new();
    for n in 0..=max_n {
        // d^i_n ∘ d^j_{n+1} = d^{j-1}_n ∘ d^i_{n+1}, i < j
        if n >= 1 {
            for j in 0..=n + 1 {
                for i in 0..j {
                    out.push(identity_pair(
                        format!("face-face n={n} i={i} j={j}"),
                        flavor,
                        &[D(n + 1, j), D(n, i)],
                        &[D(n + 1, i), D(n, j - 1)],
                        n + 1,
                    ));
                }
            }
            // s^i_n ∘ s^j_{n-1} = s^{j+1}_n ∘ s^i_{n-1}, i <= j
            for j in 0..n {
                for i in 0..=j {
                    out.push(identity_pair(
                        format!("degen-degen n={n} i={i} j={j}"),
                        flavor,
                        &[S(n - 1, j), S(n, i)],
                        &[S(n - 1, i), S(n, j + 1)],
                        n - 1,
                    ));
                }
            }
        }
        // d^i_{n+1} ∘ s^j_n
        for j in 0..=n {
            for i in 0..=n + 1 {
                let rhs: Vec<SimplexGen> = if i < j {
                    vec![D(n, i), S(n - 1, j - 1)]
                } else if i == j || i == j + 1 {
                    Vec::new()
                } else {
                    vec![D(n, i - 1), S(n - 1, j)]
                };
                out.push(identity_pair(format!("face-degen n={n} i={i} j={j}"), flavor, &[S(n, j), D(n + 1, i)], &rhs, n));
            }
        }
    }
    out
}

/// The rotation identities of `Λ` (or of its square-root variant, where the
/// rotation appears squared) with `n <= max_n`.
pub fn rotation_identities(max_n: usize, flavor: Flavor) -> Vec<CyclicIdentity> {
    use SimplexGen::{Degen as S, Face as D};
    let rot = |n: usize| -> Vec<SimplexGen> {
        match flavor {
            Flavor::SqrtCyclic => vec![SimplexGen::SqrtCyc(n); 2],
            _ => vec![SimplexGen::Cyc(n)],
        }
    };
    let cat = |parts: &[&[SimplexGen]]| parts.concat();
    let mut out = Vec::new();
    for n in 0..=max_n {
        let order = if flavor == Flavor::SqrtCyclic { 2 * (n + 1) } else { n + 1 };
        let root = if flavor == Flavor::SqrtCyclic { SimplexGen::SqrtCyc(n) } else { SimplexGen::Cyc(n) };
        out.push(identity_pair(format!("rotation-order n={n}"), flavor, &vec![root; order], &[], n));
        // t_{n+1} ∘ s^j_n = s^{j+1}_n ∘ t_n
        for j in 0..n {
            out.push(identity_pair(
                format!("rotation-degen n={n} j={j}"),
                flavor,
                &cat(&[&[S(n, j)], &rot(n + 1)]),
                &cat(&[&rot(n), &[S(n, j + 1)]]),
                n,
            ));
        }
        // t_n ∘ d^i_{n+1} = d^{i+1}_{n+1} ∘ t_{n+1}
        for i in 0..=n {
            out.push(identity_pair(
                format!("rotation-face n={n} i={i}"),
                flavor,
                &cat(&[&[D(n + 1, i)], &rot(n)]),
                &cat(&[&rot(n + 1), &[D(n + 1, i + 1)]]),
                n + 1,
            ));
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AtlGen {
    /// Cap on the shaded pair starting at `2i`; `[n] -> [n-1]`, `0 <= i < n`.
    A(usize, usize),
    /// Cup on the pair starting at `2i`; `[n] -> [n+1]`, `0 <= i <= n`.
    B(usize, usize),
    /// Shading-preserving rotation.
    T(usize),
    /// Identity carrying unshaded and shaded closed loops.
    LoopId(usize, u64, u64),
}

impl AtlGen {
    pub fn signature(self) -> (usize, usize) {
        match self {
            AtlGen::A(n, _) => (n, n.wrapping_sub(1)),
            AtlGen::B(n, _) => (n, n + 1),
            AtlGen::T(n) | AtlGen::LoopId(n, ..) => (n, n),
        }
    }

    fn validate(self) -> Result<Self> {
        let ok = match self {
            AtlGen::A(n, i) => n >= 1 && i < n,
            AtlGen::B(n, i) => i <= n,
            AtlGen::T(_) | AtlGen::LoopId(..) => true,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::CyclicType(format!("{self} has an index out of range")))
        }
    }
}

impl fmt::Display for AtlGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AtlGen::A(n, i) => write!(f, "a({n},{i})"),
            AtlGen::B(n, i) => write!(f, "bb({n},{i})"),
            AtlGen::T(n) => write!(f, "T({n})"),
            AtlGen::LoopId(n, j, k) => write!(f, "loopid({n},{j},{k})"),
        }
    }
}

/// Word in the shaded annular category. Object `0` stands for both `[0+]`
/// and `[0-]`, which have the same image.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AtlWord {
    n_in: usize,
    n_out: usize,
    gens: Vec<AtlGen>,
}

impl AtlWord {
    pub fn new(n_in: usize, gens: Vec<AtlGen>) -> Result<Self> {
        let mut n_out = n_in;
        for &g in &gens {
            g.validate()?;
            let (s, t) = g.signature();
            if s != n_out {
                return Err(Error::CyclicType(format!("{g} starts at [{s}] but the word is at [{n_out}]")));
            }
            n_out = t;
        }
        Ok(AtlWord { n_in, n_out, gens })
    }

    pub fn from_gens(gens: &[AtlGen]) -> Result<Self> {
        Self::new(gens.first().map_or(0, |g| g.signature().0), gens.to_vec())
    }

    pub fn n_in(&self) -> usize {
        self.n_in
    }

    pub fn n_out(&self) -> usize {
        self.n_out
    }

    pub fn gens(&self) -> &[AtlGen] {
        &self.gens
    }
}

/// Image of a shaded annular word: a cylinder word plus its accumulated loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtlImage {
    pub word: GeneratorWord,
    pub mu: u64,
}

pub fn atl_to_cyla(w: &AtlWord) -> Result<AtlImage> {
    let mut gens = Vec::new();
    let mut mu = 0;
    for &g in &w.gens {
        match g {
            AtlGen::A(n, i) => gens.push(Generator::Death(2 * n, 2 * i)),
            AtlGen::B(n, i) => gens.push(Generator::Birth(2 * n, 2 * i)),
            AtlGen::T(n) => gens.extend([Generator::Tw(2 * n); 2]),
            AtlGen::LoopId(_, j, k) => mu += j + k,
        }
    }
    Ok(AtlImage { word: GeneratorWord::new(2 * w.n_in, gens)?, mu })
}

/// Candidate images of the generators touching `S^1_0` in a linear
/// representation, checked against the conditions that extend a
/// square-root cyclic object to all even arities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentationData {
    pub d0: Matrix,
    pub d1: Matrix,
    pub b0: Matrix,
    pub b1: Matrix,
    /// The rotation on the two-point circle.
    pub t: Matrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AugmentationReport {
    /// `d_i ∘ b_i = id` for `i = 0, 1`.
    pub sections: [bool; 2],
    /// `d_0 ∘ t = d_1` and `t ∘ b_0 = b_1`.
    pub rotation: [bool; 2],
}

impl AugmentationReport {
    pub fn holds(&self) -> bool {
        self.sections.iter().chain(&self.rotation).all(|&b| b)
    }
}

impl AugmentationData {
    /// The bar representation's own images at dimension `dim`.
    pub fn from_bar(rep: &BarRep) -> Result<Self> {
        Ok(AugmentationData {
            d0: rep.gen_matrix(Generator::Death(2, 0))?,
            d1: rep.gen_matrix(Generator::Death(2, 1))?,
            b0: rep.gen_matrix(Generator::Birth(0, 0))?,
            b1: rep.gen_matrix(Generator::Birth(0, 1))?,
            t: rep.gen_matrix(Generator::Tw(2))?,
        })
    }
}

pub fn check_cyl0_extension(data: &AugmentationData) -> Result<AugmentationReport> {
    let AugmentationData { d0, d1, b0, b1, t } = data;
    let (low, high) = d0.shape();
    let shape_ok = d1.shape() == (low, high)
        && b0.shape() == (high, low)
        && b1.shape() == (high, low)
        && t.shape() == (high, high);
    if !shape_ok {
        return Err(Error::ShapeMismatch(format!(
            "d0 {:?}, d1 {:?}, b0 {:?}, b1 {:?}, t {:?}",
            d0.shape(),
            d1.shape(),
            b0.shape(),
            b1.shape(),
            t.shape()
        )));
    }
    Ok(AugmentationReport {
        sections: [d0.mul(b0)?.is_identity(), d1.mul(b1)?.is_identity()],
        rotation: [d0.mul(t)? == *d1, t.mul(b0)? == *b1],
    })
}

#[cfg(test)]
mod tests {
    use super::SimplexGen::*;
    use super::*;
    use crate::diagram::word;
    use crate::evaluator::{eq_in, CategoryTag};

    fn sw(flavor: Flavor, gens: &[SimplexGen]) -> SimplexWord {
        SimplexWord::from_gens(flavor, gens).unwrap()
    }

    #[test]
    fn coface_and_codegeneracy() {
        let m = monotone_semantics(&sw(Flavor::Simplicial, &[Face(1, 0)])).unwrap();
        assert_eq!(m, MonotoneMap { codomain: 1, table: vec![1] });
        let m = monotone_semantics(&sw(Flavor::Simplicial, &[Degen(0, 0), Face(1, 0)])).unwrap();
        assert!(m.is_identity());
        let a = monotone_semantics(&sw(Flavor::Simplicial, &[Face(2, 0), Face(1, 0)])).unwrap();
        let b = monotone_semantics(&sw(Flavor::Simplicial, &[Face(2, 1), Face(1, 0)])).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn simplicial_identities_hold_for_monotone_maps() {
        for id in simplicial_identities(5, Flavor::Simplicial) {
            assert_eq!(monotone_semantics(&id.lhs).unwrap(), monotone_semantics(&id.rhs).unwrap(), "{}", id.name);
        }
    }

    #[test]
    fn lambda_translation_examples() {
        let t1 = lambda_to_cyl(&sw(Flavor::Cyclic, &[Cyc(1)])).unwrap();
        assert_eq!(t1.gens(), &[Generator::Tw(4), Generator::Tw(4)]);
        let d = lambda_to_cyl(&sw(Flavor::Cyclic, &[Face(2, 1)])).unwrap();
        assert_eq!(d.gens(), &[Generator::Death(6, 2)]);
        let id = lambda_to_cyl(&SimplexWord::identity(Flavor::Cyclic, 3)).unwrap();
        assert_eq!(id, GeneratorWord::identity(8));
    }

    #[test]
    fn lambda_identities_hold_in_cyl() {
        let ids = simplicial_identities(5, Flavor::Cyclic).into_iter().chain(rotation_identities(5, Flavor::Cyclic));
        for id in ids {
            let (l, r) = (lambda_to_cyl(&id.lhs).unwrap(), lambda_to_cyl(&id.rhs).unwrap());
            assert!(eq_in(CategoryTag::Cyl, &l, &r).unwrap(), "{}", id.name);
        }
    }

    #[test]
    fn sqrt_lambda_identities_hold_in_cyl() {
        let ids = simplicial_identities(5, Flavor::SqrtCyclic)
            .into_iter()
            .chain(rotation_identities(5, Flavor::SqrtCyclic));
        for id in ids {
            let (l, r) = (sqrtlambda_to_cyl(&id.lhs).unwrap(), sqrtlambda_to_cyl(&id.rhs).unwrap());
            assert!(eq_in(CategoryTag::Cyl, &l, &r).unwrap(), "{}", id.name);
        }
    }

    #[test]
    fn sqrt_rotation_examples() {
        let root = sqrtlambda_to_cyl(&sw(Flavor::SqrtCyclic, &[SqrtCyc(2)])).unwrap();
        assert_eq!(root.gens(), &[Generator::Tw(6)]);
        for n in 0..=5 {
            let full = sqrtlambda_to_cyl(&sw(Flavor::SqrtCyclic, &vec![SqrtCyc(n); 2 * (n + 1)])).unwrap();
            assert!(eq_in(CategoryTag::Cyl, &full, &GeneratorWord::identity(2 * n + 2)).unwrap());
            let sq = sqrtlambda_to_cyl(&sw(Flavor::SqrtCyclic, &[SqrtCyc(n), SqrtCyc(n)])).unwrap();
            assert_eq!(sq, lambda_to_cyl(&sw(Flavor::Cyclic, &[Cyc(n)])).unwrap());
        }
    }

    #[test]
    fn lambda_factors_through_sqrt() {
        let w = sw(Flavor::Cyclic, &[Cyc(2), Face(2, 1), Degen(1, 0)]);
        let via = sqrtlambda_to_cyl(&lambda_to_sqrt(&w).unwrap()).unwrap();
        assert_eq!(via, lambda_to_cyl(&w).unwrap());
    }

    #[test]
    fn doubling_examples() {
        let d = delta_double(&sw(Flavor::Simplicial, &[Face(2, 1)])).unwrap();
        assert_eq!(d.gens(), &[Face(5, 2), Face(4, 2)]);
        assert_eq!((d.n_in(), d.n_out()), (5, 3));
        let id = delta_double(&SimplexWord::identity(Flavor::Simplicial, 2)).unwrap();
        assert_eq!(id, SimplexWord::identity(Flavor::Simplicial, 5));
        let l = delta_double(&sw(Flavor::Simplicial, &[Face(4, 2), Face(3, 0)])).unwrap();
        let r = delta_double(&sw(Flavor::Simplicial, &[Face(4, 0), Face(3, 1)])).unwrap();
        assert_eq!(monotone_semantics(&l).unwrap(), monotone_semantics(&r).unwrap());
    }

    #[test]
    fn doubling_cannot_keep_the_shifted_retraction() {
        // d^1 ∘ s^0 = id on [0], but the doubled pair collapses [1] onto 0.
        let w = sw(Flavor::Simplicial, &[Degen(0, 0), Face(1, 1)]);
        assert!(monotone_semantics(&w).unwrap().is_identity());
        let m = monotone_semantics(&delta_double(&w).unwrap()).unwrap();
        assert_eq!(m.table, vec![0, 0]);
    }

    #[test]
    fn doubled_rotation_has_the_right_order() {
        for n in 0..=4 {
            let w = sw(Flavor::SqrtCyclic, &vec![SqrtCyc(n); 2 * (n + 1)]);
            let d = delta_double(&w).unwrap();
            assert!(eq_in(CategoryTag::Cyl, &lambda_to_cyl(&d).unwrap(), &GeneratorWord::identity(4 * n + 4)).unwrap());
        }
    }

    #[test]
    fn atl_examples() {
        let t = atl_to_cyla(&AtlWord::from_gens(&[AtlGen::T(3)]).unwrap()).unwrap();
        assert_eq!(t.word.gens(), &[Generator::Tw(6), Generator::Tw(6)]);
        let a = atl_to_cyla(&AtlWord::from_gens(&[AtlGen::A(3, 2)]).unwrap()).unwrap();
        assert_eq!(a.word.gens(), &[Generator::Death(6, 4)]);
        let l = atl_to_cyla(&AtlWord::from_gens(&[AtlGen::LoopId(2, 1, 1)]).unwrap()).unwrap();
        assert_eq!((l.word, l.mu), (GeneratorWord::identity(4), 2));
        assert!(AtlWord::from_gens(&[AtlGen::A(3, 3)]).is_err());
    }

    #[test]
    fn atl_images_are_even() {
        let w = AtlWord::from_gens(&[AtlGen::B(1, 1), AtlGen::T(2), AtlGen::A(2, 0)]).unwrap();
        let img = atl_to_cyla(&w).unwrap();
        assert_eq!((img.word.n_in() % 2, img.word.n_out() % 2), (0, 0));
        assert_eq!(img.word, word(&[Generator::Birth(2, 2), Generator::Tw(4), Generator::Tw(4), Generator::Death(4, 0)]));
    }

    #[test]
    fn bar_augmentation() {
        let r1 = check_cyl0_extension(&AugmentationData::from_bar(&BarRep::new(1).unwrap()).unwrap()).unwrap();
        assert!(r1.holds());
        let r3 = check_cyl0_extension(&AugmentationData::from_bar(&BarRep::new(3).unwrap()).unwrap()).unwrap();
        assert_eq!(r3.sections, [false, false]);
        assert_eq!(r3.rotation, [true, true]);
    }

    #[test]
    fn trivial_augmentation_and_shape_errors() {
        let id = Matrix::identity(2);
        let data = AugmentationData { d0: id.clone(), d1: id.clone(), b0: id.clone(), b1: id.clone(), t: id.clone() };
        assert!(check_cyl0_extension(&data).unwrap().holds());
        let bad = AugmentationData { t: Matrix::identity(3), ..data };
        assert!(matches!(check_cyl0_extension(&bad), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn mixed_flavors_are_rejected() {
        assert!(SimplexWord::from_gens(Flavor::Cyclic, &[SqrtCyc(1)]).is_err());
        assert!(SimplexWord::from_gens(Flavor::Simplicial, &[Cyc(1)]).is_err());
        assert!(monotone_semantics(&sw(Flavor::Cyclic, &[Cyc(1)])).is_err());
    }
}
