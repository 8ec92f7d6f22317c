//! Cartan data of E6 (classical part of E6^(1)) and exact weight arithmetic.
//!
//! Nodes follow Kac's labelling: the chain 1-2-3-4-5 with node 6 attached
//! to 3 (node 0 hangs off 6 and never appears here).

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const RANK: usize = 6;

/// A classical Dynkin node, `1..=6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Node(u8);

impl Node {
    pub const ALL: [Node; RANK] = [Node(1), Node(2), Node(3), Node(4), Node(5), Node(6)];

    pub fn new(a: i64) -> Result<Self> {
        if (1..=RANK as i64).contains(&a) {
            Ok(Node(a as u8))
        } else {
            Err(Error::InvalidNode(a))
        }
    }

    pub const fn label(self) -> u8 {
        self.0
    }

    /// Zero-based index into per-node arrays.
    pub const fn index(self) -> usize {
        self.0 as usize - 1
    }

    pub fn from_index(i: usize) -> Self {
        Node::ALL[i]
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Symmetric Cartan matrix together with the adjacency relation it induces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    pub matrix: [[i32; RANK]; RANK],
}

pub const E6: CartanData = CartanData {
    matrix: [
        [2, -1, 0, 0, 0, 0],
        [-1, 2, -1, 0, 0, 0],
        [0, -1, 2, -1, 0, -1],
        [0, 0, -1, 2, -1, 0],
        [0, 0, 0, -1, 2, 0],
        [0, 0, -1, 0, 0, 2],
    ],
};

impl CartanData {
    pub fn entry(&self, a: Node, b: Node) -> i32 {
        self.matrix[a.index()][b.index()]
    }

    /// `a ~ b` iff `C_ab = -1`.
    pub fn adjacent(&self, a: Node, b: Node) -> bool {
        self.entry(a, b) == -1
    }

    pub fn neighbors(&self, a: Node) -> impl Iterator<Item = Node> + '_ {
        Node::ALL.into_iter().filter(move |&b| self.adjacent(a, b))
    }

    /// Exact determinant by fraction-free elimination.
    pub fn determinant(&self) -> Ratio<i64> {
        let mut m: Vec<Vec<Ratio<i64>>> = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|&x| Ratio::from_integer(x as i64)).collect())
            .collect();
        let mut det = Ratio::from_integer(1);
        for col in 0..RANK {
            let Some(pivot) = (col..RANK).find(|&r| m[r][col] != Ratio::from_integer(0)) else {
                return Ratio::from_integer(0);
            };
            if pivot != col {
                m.swap(pivot, col);
                det = -det;
            }
            det *= m[col][col];
            for r in col + 1..RANK {
                let factor = m[r][col] / m[col][col];
                for c in col..RANK {
                    let delta = factor * m[col][c];
                    m[r][c] -= delta;
                }
            }
        }
        det
    }

    /// Solves `sum_a C_ab x_a = rhs_b` over the rationals.
    pub fn solve(&self, rhs: [i64; RANK]) -> Option<[Ratio<i64>; RANK]> {
        let zero = Ratio::from_integer(0);
        // C is symmetric, so the row/column orientation does not matter.
        let mut aug: Vec<Vec<Ratio<i64>>> = (0..RANK)
            .map(|b| {
                let mut row: Vec<Ratio<i64>> = (0..RANK)
                    .map(|a| Ratio::from_integer(self.matrix[a][b] as i64))
                    .collect();
                row.push(Ratio::from_integer(rhs[b]));
                row
            })
            .collect();
        for col in 0..RANK {
            let pivot = (col..RANK).find(|&r| aug[r][col] != zero)?;
            aug.swap(pivot, col);
            let p = aug[col][col];
            for c in col..=RANK {
                aug[col][c] /= p;
            }
            for r in 0..RANK {
                if r != col && aug[r][col] != zero {
                    let factor = aug[r][col];
                    for c in col..=RANK {
                        let delta = factor * aug[col][c];
                        aug[r][c] -= delta;
                    }
                }
            }
        }
        let mut out = [zero; RANK];
        for (i, row) in aug.iter().enumerate() {
            out[i] = row[RANK];
        }
        Some(out)
    }
}

/// An element of the classical weight lattice in fundamental-weight
/// coordinates: `coords[a-1]` is the coefficient of the fundamental weight
/// of node `a`, i.e. the pairing with the simple coroot of `a`.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct Weight(pub [i32; RANK]);

impl Weight {
    pub const ZERO: Weight = Weight([0; RANK]);

    pub fn fundamental(a: Node) -> Weight {
        let mut w = Weight::ZERO;
        w.0[a.index()] = 1;
        w
    }

    pub fn coord(&self, a: Node) -> i32 {
        self.0[a.index()]
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn scaled(self, k: i32) -> Weight {
        Weight(self.0.map(|x| x * k))
    }
}

pub fn is_dominant(w: &Weight) -> bool {
    w.is_dominant()
}

/// `alpha_a = sum_b C_ab Lambda_b`: the Cartan row of `a`.
pub fn simple_root(a: Node) -> Weight {
    Weight(E6.matrix[a.index()])
}

/// Checked variant of [`simple_root`] taking a raw node label.
pub fn simple_root_in_weight_coords(a: i64) -> Result<Weight> {
    Node::new(a).map(simple_root)
}

pub fn weight_add(x: Weight, y: Weight) -> Weight {
    x + y
}

pub fn weight_sub(x: Weight, y: Weight) -> Weight {
    x - y
}

impl Add for Weight {
    type Output = Weight;
    fn add(mut self, rhs: Weight) -> Weight {
        self += rhs;
        self
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, rhs: Weight) {
        for (x, y) in self.0.iter_mut().zip(rhs.0) {
            *x += y;
        }
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(mut self, rhs: Weight) -> Weight {
        self -= rhs;
        self
    }
}

impl SubAssign for Weight {
    fn sub_assign(&mut self, rhs: Weight) {
        for (x, y) in self.0.iter_mut().zip(rhs.0) {
            *x -= y;
        }
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.map(|x| -x))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e, g] = self.0;
        write!(f, "{a},{b},{c},{d},{e},{g}")
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(',').collect();
        if parts.len() != RANK {
            return Err(Error::Parse(format!(
                "weight needs {RANK} comma-separated integers: {s:?}"
            )));
        }
        let mut w = Weight::ZERO;
        for (slot, p) in w.0.iter_mut().zip(parts) {
            *slot = p
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad weight coordinate {p:?}")))?;
        }
        Ok(w)
    }
}

/// Partition sizes `n_a = |nu^(a)|` forced by the configuration constraint
/// `sum_a n_a alpha_a = L Lambda_1 - lambda`, or `None` when the unique
/// rational solution is not a nonnegative integer vector.
pub fn solve_config_sizes(lambda: Weight, length: usize) -> Option<[usize; RANK]> {
    let mut rhs = [0i64; RANK];
    for (b, r) in rhs.iter_mut().enumerate() {
        *r = -(lambda.0[b] as i64);
    }
    rhs[0] += length as i64;
    let sol = E6.solve(rhs)?;
    let mut out = [0usize; RANK];
    for (o, x) in out.iter_mut().zip(sol) {
        if !x.is_integer() || *x.numer() < 0 {
            return None;
        }
        *o = x.to_integer() as usize;
    }
    Some(out)
}

/// `L Lambda_1 - sum_a n_a alpha_a`: the weight induced by partition sizes.
pub fn weight_from_sizes(sizes: &[usize; RANK], length: usize) -> Weight {
    let mut w = Weight::fundamental(Node(1)).scaled(length as i32);
    for a in Node::ALL {
        w -= simple_root(a).scaled(sizes[a.index()] as i32);
    }
    w
}

/// Every dominant weight `lambda` with `L Lambda_1 - lambda` a nonnegative
/// integer combination of simple roots, in lexicographic order.
///
/// Outside this set both `X` and `M` vanish.
pub fn dominant_weights(length: usize) -> Vec<Weight> {
    // Dominance bounds n_a by L times the first row of C^{-1}.
    let bounds: Vec<usize> = {
        let mut rhs = [0i64; RANK];
        rhs[0] = length as i64;
        let sol = E6.solve(rhs).expect("Cartan matrix is invertible");
        sol.iter()
            .map(|x| x.floor().to_integer() as usize)
            .collect()
    };
    let mut out = Vec::new();
    let mut sizes = [0usize; RANK];
    loop {
        let w = weight_from_sizes(&sizes, length);
        if w.is_dominant() {
            out.push(w);
        }
        let mut k = 0;
        loop {
            if k == RANK {
                out.sort();
                return out;
            }
            if sizes[k] < bounds[k] {
                sizes[k] += 1;
                break;
            }
            sizes[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_is_symmetric_simply_laced_and_invertible() {
        for a in Node::ALL {
            assert_eq!(E6.entry(a, a), 2);
            for b in Node::ALL {
                assert_eq!(E6.entry(a, b), E6.entry(b, a));
                if a != b {
                    assert!(matches!(E6.entry(a, b), 0 | -1));
                }
            }
        }
        assert_eq!(E6.determinant(), Ratio::from_integer(3));
    }

    #[test]
    fn adjacency_matches_dynkin_diagram() {
        let edges: Vec<(u8, u8)> = Node::ALL
            .into_iter()
            .flat_map(|a| E6.neighbors(a).map(move |b| (a.label(), b.label())))
            .filter(|(a, b)| a < b)
            .collect();
        assert_eq!(edges, vec![(1, 2), (2, 3), (3, 4), (3, 6), (4, 5)]);
    }

    #[test]
    fn simple_roots_are_cartan_rows() {
        assert_eq!(
            simple_root_in_weight_coords(1).unwrap(),
            Weight([2, -1, 0, 0, 0, 0])
        );
        assert_eq!(
            simple_root_in_weight_coords(3).unwrap(),
            Weight([0, -1, 2, -1, 0, -1])
        );
        assert_eq!(
            simple_root_in_weight_coords(6).unwrap(),
            Weight([0, 0, -1, 0, 0, 2])
        );
        assert_eq!(simple_root_in_weight_coords(0), Err(Error::InvalidNode(0)));
        assert_eq!(simple_root_in_weight_coords(7), Err(Error::InvalidNode(7)));
        for a in Node::ALL {
            for b in Node::ALL {
                assert_eq!(simple_root(a).coord(b), E6.entry(a, b));
            }
        }
    }

    #[test]
    fn weight_arithmetic_and_dominance() {
        let l1 = Weight([1, 0, 0, 0, 0, 0]);
        let z = weight_sub(l1, l1);
        assert_eq!(z, Weight::ZERO);
        assert!(is_dominant(&z));
        assert!(!Weight([0, -1, 1, 0, 0, 0]).is_dominant());
        assert!(Weight([0, 0, 1, 0, 0, 0]).is_dominant());
        assert_eq!(weight_add(l1, l1), l1.scaled(2));
    }

    #[test]
    fn weight_text_form() {
        let w: Weight = "0,-1,2,-1,0,-1".parse().unwrap();
        assert_eq!(w, simple_root(Node(3)));
        assert_eq!(w.to_string(), "0,-1,2,-1,0,-1");
        assert!("1,2,3".parse::<Weight>().is_err());
        assert!("1,2,3,4,5,x".parse::<Weight>().is_err());
    }

    #[test]
    fn config_sizes() {
        assert_eq!(
            solve_config_sizes(Weight::fundamental(Node(1)), 1),
            Some([0; 6])
        );
        assert_eq!(
            solve_config_sizes(Weight::fundamental(Node(3)), 6),
            Some([6, 6, 6, 4, 2, 3])
        );
        assert_eq!(
            solve_config_sizes(Weight::fundamental(Node(1)).scaled(2), 1),
            None
        );
        // L Lambda_1 itself needs no boxes.
        assert_eq!(
            solve_config_sizes(Weight::fundamental(Node(1)).scaled(4), 4),
            Some([0; 6])
        );
    }

    #[test]
    fn feasible_sizes_reproduce_the_weight() {
        for length in 0..=4 {
            for lambda in dominant_weights(length) {
                let n = solve_config_sizes(lambda, length).expect("listed weights are feasible");
                let mut total = Weight::ZERO;
                for a in Node::ALL {
                    total += simple_root(a).scaled(n[a.index()] as i32);
                }
                assert_eq!(
                    total,
                    Weight::fundamental(Node(1)).scaled(length as i32) - lambda
                );
            }
        }
    }

    #[test]
    fn dominant_weight_lists() {
        assert_eq!(dominant_weights(0), vec![Weight::ZERO]);
        assert_eq!(dominant_weights(1), vec![Weight::fundamental(Node(1))]);
        // 27 x 27 = B(2 Lambda_1) + B(Lambda_2) + B(Lambda_5) on the classical level.
        assert_eq!(
            dominant_weights(2),
            vec![
                Weight([0, 0, 0, 0, 1, 0]),
                Weight([0, 1, 0, 0, 0, 0]),
                Weight([2, 0, 0, 0, 0, 0]),
            ]
        );
    }
}
