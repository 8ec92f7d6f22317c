//! Tensor powers `B^{(x)L}` under Kashiwara's original tensor convention,
//! and enumeration of classically restricted (highest weight) paths.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cartan::{Node, Weight};
use crate::crystal::{graph, Vertex};
use crate::error::{Error, Result};
use crate::exec::Strategy;

/// `b_1 (x) b_2 (x) ... (x) b_L`, leftmost factor first.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Path(pub Vec<Vertex>);

impl Path {
    pub fn empty() -> Self {
        Path(Vec::new())
    }

    pub fn from_ids(ids: &[i64]) -> Result<Self> {
        ids.iter()
            .map(|&i| Vertex::new(i))
            .collect::<Result<Vec<_>>>()
            .map(Path)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[Vertex] {
        &self.0
    }

    pub fn push(&mut self, b: Vertex) {
        self.0.push(b);
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, b) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for Path {
    type Err = Error;

    /// One line of space-separated vertex ids; a blank line is the empty path.
    fn from_str(s: &str) -> Result<Self> {
        let line = s.strip_suffix('\n').unwrap_or(s);
        if line.contains('\n') {
            return Err(Error::Parse("a path occupies a single line".into()));
        }
        line.split_whitespace()
            .map(|tok| {
                let id: i64 = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad vertex id {tok:?}")))?;
                Vertex::new(id)
            })
            .collect::<Result<Vec<_>>>()
            .map(Path)
    }
}

/// `phi_i` of every prefix `b_1 (x) ... (x) b_j`, `j = 0..=L`.
fn prefix_phi(p: &Path, i: Node) -> Vec<u32> {
    let g = graph();
    let mut out = Vec::with_capacity(p.len() + 1);
    out.push(0);
    let mut phi = 0u32;
    for &b in &p.0 {
        let (e, f) = (g.eps(b, i), g.phi(b, i));
        phi = f + phi.saturating_sub(e);
        out.push(phi);
    }
    out
}

/// `e_i` on the tensor product; `None` when the result is zero.
pub fn e_tensor(p: &Path, i: Node) -> Option<Path> {
    let g = graph();
    let phi = prefix_phi(p, i);
    for j in (0..p.len()).rev() {
        if j == 0 || phi[j] < g.eps(p.0[j], i) {
            let raised = g.e(p.0[j], i)?;
            let mut out = p.clone();
            out.0[j] = raised;
            return Some(out);
        }
    }
    None
}

/// `f_i` on the tensor product; `None` when the result is zero.
pub fn f_tensor(p: &Path, i: Node) -> Option<Path> {
    let g = graph();
    let phi = prefix_phi(p, i);
    for j in (0..p.len()).rev() {
        if j == 0 || phi[j] <= g.eps(p.0[j], i) {
            let lowered = g.f(p.0[j], i)?;
            let mut out = p.clone();
            out.0[j] = lowered;
            return Some(out);
        }
    }
    None
}

pub fn eps_tensor(p: &Path, i: Node) -> u32 {
    let g = graph();
    let mut eps = 0u32;
    let mut phi = 0u32;
    for &b in &p.0 {
        let (e, f) = (g.eps(b, i), g.phi(b, i));
        eps += e.saturating_sub(phi);
        phi = f + phi.saturating_sub(e);
    }
    eps
}

pub fn phi_tensor(p: &Path, i: Node) -> u32 {
    *prefix_phi(p, i).last().expect("prefix list is never empty")
}

pub fn wt_path(p: &Path) -> Weight {
    let g = graph();
    p.0.iter().fold(Weight::ZERO, |acc, &b| acc + g.wt(b))
}

/// `wt(p) = lambda` and `e_i p = 0` for every classical `i`.
pub fn is_classically_restricted(p: &Path, lambda: Weight) -> bool {
    wt_path(p) == lambda && Node::ALL.iter().all(|&i| eps_tensor(p, i) == 0)
}

/// Whether `b` may be appended to a highest weight path of weight `mu`.
pub fn can_append(mu: Weight, b: Vertex) -> bool {
    let g = graph();
    Node::ALL.iter().all(|&i| g.eps(b, i) as i32 <= mu.coord(i))
}

/// Highest weight paths of one length, grouped by weight. Each class is
/// sorted.
pub type HwPaths = BTreeMap<Weight, Vec<Path>>;

/// All highest weight paths of length `length`, built level by level from
/// the empty path.
pub fn enumerate_all_hw(length: usize, strategy: Strategy) -> HwPaths {
    enumerate_hw_levels(length, strategy)
        .pop()
        .expect("level 0 is always present")
}

/// Levels `0..=max_length` of the highest weight path recursion.
pub fn enumerate_hw_levels(max_length: usize, strategy: Strategy) -> Vec<HwPaths> {
    let mut levels = Vec::with_capacity(max_length + 1);
    let mut current = HwPaths::new();
    current.insert(Weight::ZERO, vec![Path::empty()]);
    for _ in 0..max_length {
        let next = extend_level(&current, strategy);
        levels.push(current);
        current = next;
    }
    levels.push(current);
    levels
}

fn extend_level(level: &HwPaths, strategy: Strategy) -> HwPaths {
    let g = graph();
    let prefixes: Vec<(Weight, &Path)> = level
        .iter()
        .flat_map(|(w, ps)| ps.iter().map(move |p| (*w, p)))
        .collect();
    let extended = strategy.flat_map(&prefixes, |&(mu, p)| {
        Vertex::all()
            .filter(|&b| can_append(mu, b))
            .map(|b| {
                let mut q = p.clone();
                q.push(b);
                (mu + g.wt(b), q)
            })
            .collect()
    });
    let mut out = HwPaths::new();
    for (w, p) in extended {
        out.entry(w).or_default().push(p);
    }
    for ps in out.values_mut() {
        ps.sort();
    }
    out
}

/// `P(lambda, L)`: classically restricted paths of weight `lambda`, sorted.
pub fn enumerate_paths(lambda: Weight, length: usize, strategy: Strategy) -> Vec<Path> {
    if !lambda.is_dominant() {
        return Vec::new();
    }
    enumerate_all_hw(length, strategy)
        .remove(&lambda)
        .unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(ids: &[i64]) -> Path {
        Path::from_ids(ids).unwrap()
    }

    fn n(a: i64) -> Node {
        Node::new(a).unwrap()
    }

    #[test]
    fn tensor_rule_examples() {
        assert_eq!(e_tensor(&path(&[1, 2]), n(1)), None);
        assert_eq!(e_tensor(&path(&[2, 1]), n(1)), Some(path(&[1, 1])));
        assert_eq!(f_tensor(&path(&[1, 1]), n(1)), Some(path(&[2, 1])));
        assert_eq!(f_tensor(&path(&[2, 1]), n(1)), Some(path(&[2, 2])));
        assert_eq!(e_tensor(&Path::empty(), n(1)), None);
        assert_eq!(f_tensor(&Path::empty(), n(1)), None);
    }

    #[test]
    fn weights_of_paths() {
        assert_eq!(wt_path(&Path::empty()), Weight::ZERO);
        assert_eq!(
            wt_path(&path(&[1, 2, 3, 16, 2, 24])),
            Weight([0, 0, 1, 0, 0, 0])
        );
        for i in Node::ALL {
            assert_eq!(eps_tensor(&path(&[1, 18]), i), 0);
        }
    }

    #[test]
    fn restricted_predicate() {
        assert!(is_classically_restricted(
            &path(&[1, 2, 3, 16, 2, 24]),
            Weight([0, 0, 1, 0, 0, 0])
        ));
        assert!(is_classically_restricted(&Path::empty(), Weight::ZERO));
        let g = graph();
        for lambda in [
            Weight::ZERO,
            g.wt(Vertex::new(2).unwrap()),
            Weight([1, 0, 0, 0, 0, 0]),
        ] {
            assert!(!is_classically_restricted(&path(&[2]), lambda));
        }
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(
            enumerate_paths(Weight([1, 0, 0, 0, 0, 0]), 1, Strategy::Sequential),
            vec![path(&[1])]
        );
        assert_eq!(
            enumerate_paths(Weight::ZERO, 0, Strategy::Sequential),
            vec![Path::empty()]
        );
        assert!(enumerate_paths(Weight([0, -1, 1, 0, 0, 0]), 3, Strategy::Sequential).is_empty());
        let all: Vec<Path> = enumerate_all_hw(2, Strategy::Parallel)
            .into_values()
            .flatten()
            .collect();
        let mut all = all;
        all.sort();
        assert_eq!(all, vec![path(&[1, 1]), path(&[1, 2]), path(&[1, 18])]);
    }

    #[test]
    fn path_text_form() {
        let p: Path = "1 2 3 16 2 24\n".parse().unwrap();
        assert_eq!(p, path(&[1, 2, 3, 16, 2, 24]));
        assert_eq!(p.to_string(), "1 2 3 16 2 24");
        assert_eq!("".parse::<Path>().unwrap(), Path::empty());
        assert_eq!("\n".parse::<Path>().unwrap(), Path::empty());
        assert!("1 28".parse::<Path>().is_err());
        assert!("1 x".parse::<Path>().is_err());
        assert!("1\n2".parse::<Path>().is_err());
    }
}
