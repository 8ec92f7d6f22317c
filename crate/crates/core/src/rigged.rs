//! Configurations, rigged configurations, vacancy numbers and charge.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cartan::{weight_from_sizes, Node, Weight, E6, RANK};
use crate::error::{Error, Result};

/// A partition, parts weakly decreasing and positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidConfiguration(
                "partition parts must be positive".into(),
            ));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    pub fn largest(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// `m_i`: number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&x| x == i).count()
    }

    /// Distinct part sizes, decreasing.
    pub fn distinct_parts(&self) -> Vec<usize> {
        let mut d = self.0.clone();
        d.dedup();
        d
    }

    pub fn q(&self, i: usize) -> usize {
        q_i(self, i)
    }
}

/// `Q_i(mu) = sum_j min(mu_j, i)`, the number of boxes in the first `i`
/// columns.
pub fn q_i(mu: &Partition, i: usize) -> usize {
    mu.0.iter().map(|&x| x.min(i)).sum()
}

/// A configuration `nu = (nu^(1), ..., nu^(6))`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Configuration {
    pub parts: [Partition; RANK],
}

impl Configuration {
    pub fn new(parts: [Partition; RANK]) -> Self {
        Configuration { parts }
    }

    pub fn part(&self, a: Node) -> &Partition {
        &self.parts[a.index()]
    }

    pub fn sizes(&self) -> [usize; RANK] {
        std::array::from_fn(|a| self.parts[a].size())
    }

    pub fn largest_part(&self) -> usize {
        self.parts.iter().map(Partition::largest).max().unwrap_or(0)
    }

    pub fn weight(&self, length: usize) -> Weight {
        weight_from_sizes(&self.sizes(), length)
    }

    pub fn vacancies(&self, length: usize) -> Vacancies {
        Vacancies::new(self, length)
    }
}

/// `p_i^(a) = L min(i,1) [a = 1] - 2 Q_i^(a) + sum_{b ~ a} Q_i^(b)`.
pub fn vacancy(nu: &Configuration, length: usize, a: Node, i: usize) -> i64 {
    let own = nu.part(a).q(i) as i64;
    let nbrs: i64 = E6.neighbors(a).map(|b| nu.part(b).q(i) as i64).sum();
    let driving = if a.index() == 0 {
        (length * i.min(1)) as i64
    } else {
        0
    };
    driving - 2 * own + nbrs
}

/// Vacancy numbers of one configuration, tabulated up to the largest part
/// (constant beyond it).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vacancies {
    table: [Vec<i64>; RANK],
}

impl Vacancies {
    pub fn new(nu: &Configuration, length: usize) -> Self {
        let top = nu.largest_part().max(1);
        let table = std::array::from_fn(|a| {
            (0..=top)
                .map(|i| vacancy(nu, length, Node::from_index(a), i))
                .collect()
        });
        Vacancies { table }
    }

    pub fn get(&self, a: Node, i: usize) -> i64 {
        let row = &self.table[a.index()];
        row[i.min(row.len() - 1)]
    }
}

/// `c(nu)` straight from the quadratic form:
/// `1/2 sum C_ab min(j,k) m_j^(a) m_k^(b) - L sum_k m_k^(1)`.
pub fn charge_direct(nu: &Configuration, length: usize) -> i64 {
    let mut twice = 0i64;
    for a in Node::ALL {
        for b in Node::ALL {
            let c = E6.entry(a, b) as i64;
            if c == 0 {
                continue;
            }
            let mut s = 0i64;
            for &j in nu.part(a).parts() {
                for &k in nu.part(b).parts() {
                    s += j.min(k) as i64;
                }
            }
            twice += c * s;
        }
    }
    debug_assert_eq!(twice % 2, 0);
    twice / 2 - (length * nu.parts[0].num_rows()) as i64
}

/// `c(nu) = -1/2 (sum p_i^(a) m_i^(a) + L sum_k m_k^(1))`.
pub fn charge_via_vacancies(nu: &Configuration, length: usize) -> i64 {
    let vac = nu.vacancies(length);
    let mut s = (length * nu.parts[0].num_rows()) as i64;
    for a in Node::ALL {
        s += nu
            .part(a)
            .parts()
            .iter()
            .map(|&i| vac.get(a, i))
            .sum::<i64>();
    }
    debug_assert_eq!(s % 2, 0);
    -s / 2
}

/// Sizes match `lambda` and `p_i^(a) >= 0` wherever `m_i^(a) > 0`; the
/// latter implies nonnegativity for every `i`.
pub fn is_admissible_config(nu: &Configuration, lambda: Weight, length: usize) -> bool {
    if nu.weight(length) != lambda || !lambda.is_dominant() {
        return false;
    }
    let vac = nu.vacancies(length);
    Node::ALL
        .iter()
        .all(|&a| nu.part(a).parts().iter().all(|&i| vac.get(a, i) >= 0))
}

/// Vacancy identities that every admissible configuration satisfies; returns
/// a description of each violation.
pub fn vacancy_identity_violations(nu: &Configuration, length: usize) -> Vec<String> {
    let mut out = Vec::new();
    let lambda = nu.weight(length);
    let top = nu.largest_part();
    let p = |a: Node, i: usize| vacancy(nu, length, a, i);
    for a in Node::ALL {
        let m = |b: Node, i: usize| nu.part(b).multiplicity(i) as i64;
        for i in 1..=top + 1 {
            let lhs = -p(a, i - 1) + 2 * p(a, i) - p(a, i + 1);
            let driving = if a.index() == 0 && i == 1 {
                length as i64
            } else {
                0
            };
            let rhs = driving - 2 * m(a, i) + E6.neighbors(a).map(|b| m(b, i)).sum::<i64>();
            if lhs != rhs {
                out.push(format!("second difference at a={a} i={i}: {lhs} != {rhs}"));
            }
            if m(a, i) == 0 && 2 * p(a, i) < p(a, i - 1) + p(a, i + 1) {
                out.push(format!("convexity at a={a} i={i}"));
            }
            if p(a, i) < 0 {
                out.push(format!("negative vacancy p_{i}^({a}) = {}", p(a, i)));
            }
        }
        for i in top.max(1)..=top + 2 {
            if p(a, i) != lambda.coord(a) as i64 {
                out.push(format!(
                    "p_{i}^({a}) = {} but lambda_{a} = {}",
                    p(a, i),
                    lambda.coord(a)
                ));
            }
        }
    }
    out
}

/// One row of a rigged partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Row {
    pub length: usize,
    pub rigging: i64,
}

impl Ord for Row {
    /// Canonical order: decreasing length, then decreasing rigging.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other
            .length
            .cmp(&self.length)
            .then(other.rigging.cmp(&self.rigging))
    }
}

impl PartialOrd for Row {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RiggedPartition {
    rows: Vec<Row>,
}

impl RiggedPartition {
    pub fn new(mut rows: Vec<Row>) -> Self {
        rows.sort();
        RiggedPartition { rows }
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(|r| r.length).collect())
    }

    pub fn rigging_total(&self) -> i64 {
        self.rows.iter().map(|r| r.rigging).sum()
    }

    /// The block `J^(a,i)`: riggings of the rows of length `i`, decreasing.
    pub fn block(&self, i: usize) -> Vec<i64> {
        self.rows
            .iter()
            .filter(|r| r.length == i)
            .map(|r| r.rigging)
            .collect()
    }
}

/// A rigged configuration `(nu, J)` together with the path length `L`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RiggedConfiguration {
    pub length: usize,
    pub parts: [RiggedPartition; RANK],
}

impl RiggedConfiguration {
    pub fn empty(length: usize) -> Self {
        RiggedConfiguration {
            length,
            parts: Default::default(),
        }
    }

    pub fn part(&self, a: Node) -> &RiggedPartition {
        &self.parts[a.index()]
    }

    pub fn shape(&self) -> Configuration {
        Configuration {
            parts: std::array::from_fn(|a| self.parts[a].shape()),
        }
    }

    pub fn weight(&self) -> Weight {
        self.shape().weight(self.length)
    }

    pub fn rigging_total(&self) -> i64 {
        self.parts.iter().map(RiggedPartition::rigging_total).sum()
    }

    /// Checks membership in `RC(lambda, L)` and returns `lambda`.
    pub fn validate(&self) -> Result<Weight> {
        let nu = self.shape();
        let lambda = nu.weight(self.length);
        if !lambda.is_dominant() {
            return Err(Error::InvalidConfiguration(format!(
                "weight {lambda} is not dominant"
            )));
        }
        let vac = nu.vacancies(self.length);
        for a in Node::ALL {
            for r in self.part(a).rows() {
                if r.length == 0 {
                    return Err(Error::InvalidConfiguration(format!("empty row in nu{a}")));
                }
                let p = vac.get(a, r.length);
                if r.rigging < 0 || r.rigging > p {
                    return Err(Error::InvalidConfiguration(format!(
                        "rigging {} of a length-{} row in nu{a} is outside [0, {p}]",
                        r.rigging, r.length
                    )));
                }
            }
        }
        Ok(lambda)
    }
}

/// `c(nu, J) = c(nu) + |J|`.
pub fn cc(rc: &RiggedConfiguration) -> i64 {
    charge_via_vacancies(&rc.shape(), rc.length) + rc.rigging_total()
}

/// Text form: `L <int>` followed by one `nu<a>: (len,rig) ...` line per node.
impl fmt::Display for RiggedConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "L {}", self.length)?;
        for a in Node::ALL {
            write!(f, "nu{a}:")?;
            for r in self.part(a).rows() {
                write!(f, " ({},{})", r.length, r.rigging)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FromStr for RiggedConfiguration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty input".into()))?;
        let length = header
            .strip_prefix("L ")
            .and_then(|x| x.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad header {header:?}")))?;
        let mut parts: [RiggedPartition; RANK] = Default::default();
        for a in Node::ALL {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("missing line nu{a}")))?;
            let prefix = format!("nu{a}:");
            let body = line
                .strip_prefix(&prefix)
                .ok_or_else(|| Error::Parse(format!("expected {prefix:?}, got {line:?}")))?;
            let mut rows = Vec::new();
            for tok in body.split_whitespace() {
                let bad = || Error::Parse(format!("bad row {tok:?}"));
                let inner = tok
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(bad)?;
                let (l, r) = inner.split_once(',').ok_or_else(bad)?;
                let length: usize = l.parse().map_err(|_| bad())?;
                let rigging: i64 = r.parse().map_err(|_| bad())?;
                if length == 0 {
                    return Err(bad());
                }
                rows.push(Row { length, rigging });
            }
            parts[a.index()] = RiggedPartition::new(rows);
        }
        if lines.any(|l| !l.trim().is_empty()) {
            return Err(Error::Parse("trailing content after nu6".into()));
        }
        Ok(RiggedConfiguration { length, parts })
    }
}
