//! The box-removal walk `delta`, its inverse, and the bijection `Phi` from
//! rigged configurations to highest weight paths.
//!
//! Conventions:
//! * singularity is judged against the riggings and vacancy numbers of the
//!   input configuration for the whole walk; all changes are applied at the
//!   end;
//! * a row is selected at most once per walk;
//! * every modified row receives the new vacancy number at its new length;
//! * at a vertex with two admissible arrows the smaller color wins a tie
//!   (the other branch gives the same result, see [`delta_branches`]).

use serde::Serialize;

use crate::cartan::{Node, RANK};
use crate::crystal::{graph, Edge, Route, Vertex};
use crate::error::{Error, Result};
use crate::rigged::{RiggedConfiguration, RiggedPartition, Row, Vacancies};
use crate::tensor::Path;

/// Stand-in for an infinite row length.
pub const INFINITE: usize = usize::MAX;

/// One row picked by a walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Selection {
    pub step: usize,
    pub color: Node,
    /// Row length before the walk modifies it (0 for a row created by the
    /// inverse walk).
    pub length: usize,
    /// Index of the row in the canonical order of the input partition.
    pub row: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaRecord {
    pub route: Route,
    pub selections: Vec<Selection>,
    pub vertex: Vertex,
    /// Number of rows of `nu^(1)` before and after the walk.
    pub first_column_before: usize,
    pub first_column_after: usize,
}

impl DeltaRecord {
    /// `l_1^(a), l_2^(a), ...`: selected lengths of color `a` in walk order.
    pub fn lengths(&self, a: Node) -> Vec<usize> {
        self.selections
            .iter()
            .filter(|s| s.color == a)
            .map(|s| s.length)
            .collect()
    }

    /// `l_k^(a)` (1-based `k`), infinite beyond the last selection.
    pub fn ell(&self, a: Node, k: usize) -> usize {
        self.selections
            .iter()
            .filter(|s| s.color == a)
            .nth(k - 1)
            .map_or(INFINITE, |s| s.length)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaOutcome {
    pub rc: RiggedConfiguration,
    pub vertex: Vertex,
    pub record: DeltaRecord,
}

/// Picks one of `n >= 2` tied options.
trait TieBreak {
    fn choose(&mut self, n: usize) -> usize;
}

struct SmallestColor;

impl TieBreak for SmallestColor {
    fn choose(&mut self, _n: usize) -> usize {
        0
    }
}

/// Replays a fixed prefix of choices, then takes option 0; records every
/// decision so that sibling branches can be generated.
#[derive(Default)]
struct Script {
    prefix: Vec<usize>,
    taken: Vec<(usize, usize)>,
}

impl TieBreak for Script {
    fn choose(&mut self, n: usize) -> usize {
        let k = self.prefix.get(self.taken.len()).copied().unwrap_or(0);
        self.taken.push((k, n));
        k
    }
}

/// Runs `walk` once per combination of tie decisions.
fn all_branches<T>(mut walk: impl FnMut(&mut Script) -> T) -> Vec<T> {
    let mut out = Vec::new();
    let mut pending = vec![Vec::new()];
    while let Some(prefix) = pending.pop() {
        let depth = prefix.len();
        let mut script = Script {
            prefix,
            taken: Vec::new(),
        };
        out.push(walk(&mut script));
        for pos in depth..script.taken.len() {
            let (_, arity) = script.taken[pos];
            for alt in 1..arity {
                let mut next: Vec<usize> = script.taken[..pos].iter().map(|&(k, _)| k).collect();
                next.push(alt);
                pending.push(next);
            }
        }
    }
    out
}

fn is_singular(vac: &Vacancies, a: Node, r: &Row) -> bool {
    r.rigging == vac.get(a, r.length)
}

fn delta_walk(
    rc: &RiggedConfiguration,
    vac: &Vacancies,
    ties: &mut dyn TieBreak,
) -> (Vec<Edge>, Vec<Selection>, Vertex) {
    let g = graph();
    let mut used: [Vec<bool>; RANK] =
        std::array::from_fn(|a| vec![false; rc.parts[a].rows().len()]);
    let mut at = Vertex::HIGHEST;
    let mut last = 1usize;
    let mut edges = Vec::new();
    let mut selections = Vec::new();
    loop {
        let candidates: Vec<(Edge, usize, usize)> = g
            .out_edges(at)
            .filter_map(|e| {
                let a = e.color;
                rc.part(a)
                    .rows()
                    .iter()
                    .enumerate()
                    .filter(|(k, r)| {
                        !used[a.index()][*k] && r.length >= last && is_singular(vac, a, r)
                    })
                    .min_by_key(|(k, r)| (r.length, *k))
                    .map(|(k, r)| (e, r.length, k))
            })
            .collect();
        let Some(best) = candidates.iter().map(|c| c.1).min() else {
            break;
        };
        let tied: Vec<&(Edge, usize, usize)> = candidates.iter().filter(|c| c.1 == best).collect();
        let pick = if tied.len() > 1 {
            tied[ties.choose(tied.len())]
        } else {
            tied[0]
        };
        let &(edge, length, row) = pick;
        used[edge.color.index()][row] = true;
        selections.push(Selection {
            step: edges.len() + 1,
            color: edge.color,
            length,
            row: Some(row),
        });
        edges.push(edge);
        last = length;
        at = edge.sink;
    }
    (edges, selections, at)
}

/// Rebuilds a configuration after a walk: rows listed in `selections` change
/// length by `step` (rows created from length 0 included) and are re-rigged
/// with the new vacancy number; all other rows are copied.
fn apply(
    rc: &RiggedConfiguration,
    selections: &[Selection],
    new_length: usize,
    step: isize,
) -> RiggedConfiguration {
    let mut changed: [Vec<bool>; RANK] =
        std::array::from_fn(|a| vec![false; rc.parts[a].rows().len()]);
    let mut created = [0usize; RANK];
    for s in selections {
        match s.row {
            Some(k) => changed[s.color.index()][k] = true,
            None => created[s.color.index()] += 1,
        }
    }
    // (length, rigging or None when it must be recomputed)
    let mut rows: [Vec<(usize, Option<i64>)>; RANK] = Default::default();
    for a in 0..RANK {
        for (k, r) in rc.parts[a].rows().iter().enumerate() {
            if changed[a][k] {
                let len = r.length as isize + step;
                if len > 0 {
                    rows[a].push((len as usize, None));
                }
            } else {
                rows[a].push((r.length, Some(r.rigging)));
            }
        }
        rows[a].extend(std::iter::repeat_n((1, None), created[a]));
    }
    let shape = RiggedConfiguration {
        length: new_length,
        parts: std::array::from_fn(|a| {
            RiggedPartition::new(
                rows[a]
                    .iter()
                    .map(|&(length, _)| Row { length, rigging: 0 })
                    .collect(),
            )
        }),
    }
    .shape();
    let vac = shape.vacancies(new_length);
    RiggedConfiguration {
        length: new_length,
        parts: std::array::from_fn(|a| {
            let node = Node::from_index(a);
            RiggedPartition::new(
                rows[a]
                    .iter()
                    .map(|&(length, rig)| Row {
                        length,
                        rigging: rig.unwrap_or_else(|| vac.get(node, length)),
                    })
                    .collect(),
            )
        }),
    }
}

fn delta_with(rc: &RiggedConfiguration, ties: &mut dyn TieBreak) -> Result<DeltaOutcome> {
    if rc.length == 0 {
        return Err(Error::EmptyPath);
    }
    let vac = rc.shape().vacancies(rc.length);
    let (edges, selections, vertex) = delta_walk(rc, &vac, ties);
    let out = apply(rc, &selections, rc.length - 1, -1);
    let record = DeltaRecord {
        route: Route { edges },
        selections,
        vertex,
        first_column_before: rc.parts[0].rows().len(),
        first_column_after: out.parts[0].rows().len(),
    };
    Ok(DeltaOutcome {
        rc: out,
        vertex,
        record,
    })
}

/// One step of `Phi`: removes boxes along a route from vertex 1 and returns
/// the smaller rigged configuration with the vertex where the walk stopped.
pub fn delta(rc: &RiggedConfiguration) -> Result<DeltaOutcome> {
    delta_with(rc, &mut SmallestColor)
}

/// `gamma`: the vertex produced by [`delta`].
pub fn gamma(rc: &RiggedConfiguration) -> Result<Vertex> {
    delta(rc).map(|d| d.vertex)
}

/// [`delta`] along every combination of tie decisions.
pub fn delta_branches(rc: &RiggedConfiguration) -> Result<Vec<DeltaOutcome>> {
    all_branches(|s| delta_with(rc, s)).into_iter().collect()
}

fn delta_inv_walk(
    rc: &RiggedConfiguration,
    vac: &Vacancies,
    b: Vertex,
    ties: &mut dyn TieBreak,
) -> (Vec<Edge>, Vec<Selection>) {
    let g = graph();
    let mut used: [Vec<bool>; RANK] =
        std::array::from_fn(|a| vec![false; rc.parts[a].rows().len()]);
    let mut at = b;
    let mut last = INFINITE;
    let mut edges = Vec::new();
    let mut selections = Vec::new();
    while at != Vertex::HIGHEST {
        // A missing singular row falls back to a row of length 0.
        let candidates: Vec<(Edge, usize, Option<usize>)> = g
            .in_edges(at)
            .map(|e| {
                let a = e.color;
                let found = rc
                    .part(a)
                    .rows()
                    .iter()
                    .enumerate()
                    .filter(|(k, r)| {
                        !used[a.index()][*k] && r.length <= last && is_singular(vac, a, r)
                    })
                    .min_by_key(|(k, r)| (std::cmp::Reverse(r.length), *k));
                match found {
                    Some((k, r)) => (e, r.length, Some(k)),
                    None => (e, 0, None),
                }
            })
            .collect();
        let best = candidates
            .iter()
            .map(|c| c.1)
            .max()
            .expect("non-highest vertices have an incoming arrow");
        let tied: Vec<&(Edge, usize, Option<usize>)> =
            candidates.iter().filter(|c| c.1 == best).collect();
        let pick = if tied.len() > 1 {
            tied[ties.choose(tied.len())]
        } else {
            tied[0]
        };
        let &(edge, length, row) = pick;
        if let Some(k) = row {
            used[edge.color.index()][k] = true;
        }
        selections.push(Selection {
            step: edges.len() + 1,
            color: edge.color,
            length,
            row,
        });
        edges.push(edge);
        last = length;
        at = edge.source;
    }
    (edges, selections)
}

/// Result of the inverse walk, with its record. No validity checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaInvOutcome {
    pub rc: RiggedConfiguration,
    pub route: Route,
    pub selections: Vec<Selection>,
}

fn delta_inv_with(rc: &RiggedConfiguration, b: Vertex, ties: &mut dyn TieBreak) -> DeltaInvOutcome {
    let vac = rc.shape().vacancies(rc.length);
    let (edges, selections) = delta_inv_walk(rc, &vac, b, ties);
    let out = apply(rc, &selections, rc.length + 1, 1);
    DeltaInvOutcome {
        rc: out,
        route: Route { edges },
        selections,
    }
}

/// The inverse walk from `b` back to vertex 1, without checking that `b`
/// can actually be appended.
pub fn delta_inv_unchecked(rc: &RiggedConfiguration, b: Vertex) -> DeltaInvOutcome {
    delta_inv_with(rc, b, &mut SmallestColor)
}

/// [`delta_inv_unchecked`] along every combination of tie decisions.
pub fn delta_inv_branches(rc: &RiggedConfiguration, b: Vertex) -> Vec<DeltaInvOutcome> {
    all_branches(|s| delta_inv_with(rc, b, s))
}

/// Appends `b`: the unique rigged configuration whose [`delta`] is
/// `(rc, b)`, or [`Error::InvalidPair`] when there is none.
pub fn delta_inv(rc: &RiggedConfiguration, b: Vertex) -> Result<RiggedConfiguration> {
    let grown = delta_inv_unchecked(rc, b).rc;
    let invalid = || Error::InvalidPair { vertex: b.id() };
    grown.validate().map_err(|_| invalid())?;
    let back = delta(&grown)?;
    if back.vertex != b || back.rc != *rc {
        return Err(invalid());
    }
    Ok(grown)
}

/// `Phi(nu, J) = Phi(delta(nu, J)) (x) gamma(nu, J)`.
pub fn phi(rc: &RiggedConfiguration) -> Result<Path> {
    rc.validate()?;
    let mut factors = Vec::with_capacity(rc.length);
    let mut cur = rc.clone();
    while cur.length > 0 {
        let step = delta(&cur)?;
        factors.push(step.vertex);
        cur = step.rc;
    }
    if cur.parts.iter().any(|p| !p.rows().is_empty()) {
        return Err(Error::Internal("boxes left after the last delta".into()));
    }
    factors.reverse();
    Ok(Path(factors))
}

/// `Phi^{-1}`, appending the factors left to right.
pub fn phi_inv(p: &Path) -> Result<RiggedConfiguration> {
    p.factors()
        .iter()
        .try_fold(RiggedConfiguration::empty(0), |rc, &b| delta_inv(&rc, b))
}
