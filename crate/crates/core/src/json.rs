//! Serializable summary of a diagram: its invariants plus the full matching.

use serde::{Deserialize, Serialize};

use crate::evaluator::AffineDiagram;

/// Field order is the key order of the serialized object.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantJson {
    pub n_in: usize,
    pub n_out: usize,
    pub tau: usize,
    pub t0: Option<usize>,
    pub beta: u64,
    pub mu: u64,
    pub ind_d: Vec<usize>,
    pub ind_b: Vec<usize>,
    /// `[start, end]` labels on the ingoing circle.
    pub caps: Vec<[usize; 2]>,
    /// `[start, end]` labels on the outgoing circle.
    pub cups: Vec<[usize; 2]>,
    /// `[ingoing label, outgoing label]`.
    pub through: Vec<[usize; 2]>,
}

impl From<&AffineDiagram> for InvariantJson {
    fn from(d: &AffineDiagram) -> Self {
        let inv = d.invariants();
        let wrap = |x: i64, n: usize| x.rem_euclid(n as i64) as usize;
        let (p, q) = (d.n_in(), d.n_out());
        InvariantJson {
            n_in: inv.n_in,
            n_out: inv.n_out,
            tau: inv.tau,
            t0: inv.t0,
            beta: inv.beta,
            mu: inv.mu,
            ind_d: inv.ind_d,
            ind_b: inv.ind_b,
            caps: d.cap_lifts().iter().map(|&(x, y)| [wrap(x, p), wrap(y, p)]).collect(),
            cups: d.cup_lifts().iter().map(|&(x, y)| [wrap(x, q), wrap(y, q)]).collect(),
            through: d.through_lifts().iter().map(|&(i, y)| [i, wrap(y, q)]).collect(),
        }
    }
}
