//! Local energy `H` on `B (x) B`, the energy statistic `D` on paths and the
//! one-dimensional sum `X`.

use std::sync::OnceLock;

use crate::cartan::{Node, Weight};
use crate::crystal::{graph, Vertex, NUM_VERTICES};
use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::poly::LaurentPolynomial;
use crate::tensor::{e_tensor, enumerate_paths, Path};

/// Pairs `b (x) c` on which `H = -2`, written out as unions of blocks.
fn s1_pairs() -> Vec<(u8, u8)> {
    let mut s1 = Vec::new();
    s1.extend((18..=27).map(|j| (1, j)));
    s1.extend((23..=27).map(|j| (2, j)));
    s1.extend((25..=27).map(|j| (3, j)));
    for i in [4, 7] {
        s1.extend((26..=27).map(|j| (i, j)));
    }
    s1.extend([5, 8, 10, 13, 18].map(|i| (i, 27)));
    s1
}

/// Size of the `H = -2` component, which is a copy of the 27-element crystal.
pub const S1_SIZE: usize = 27;

struct EnergyTable {
    h: [[i8; NUM_VERTICES]; NUM_VERTICES],
}

fn table() -> &'static EnergyTable {
    static TABLE: OnceLock<EnergyTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        let g = graph();
        let s1 = s1_pairs();
        assert_eq!(s1.len(), S1_SIZE, "S1 transcription has the wrong size");
        let mut h = [[-1i8; NUM_VERTICES]; NUM_VERTICES];
        for b in Vertex::all() {
            for c in Vertex::all() {
                if g.reachable(b, c) {
                    h[b.id() as usize - 1][c.id() as usize - 1] = 0;
                }
            }
        }
        for (b, c) in s1 {
            let slot = &mut h[b as usize - 1][c as usize - 1];
            assert_eq!(*slot, -1, "S1 and S2 overlap at {b} (x) {c}");
            *slot = -2;
        }
        EnergyTable { h }
    })
}

/// `H(b (x) c)`: `-2` on S1, `0` when `b` is reachable from `c`, else `-1`.
pub fn local_h(b: Vertex, c: Vertex) -> i32 {
    table().h[b.id() as usize - 1][c.id() as usize - 1] as i32
}

/// Raises `b (x) c` to the highest weight vector of its classical component.
pub fn component_head(b: Vertex, c: Vertex) -> (Vertex, Vertex) {
    let mut p = Path(vec![b, c]);
    'raise: loop {
        for i in Node::ALL {
            if let Some(q) = e_tensor(&p, i) {
                p = q;
                continue 'raise;
            }
        }
        return (p.0[0], p.0[1]);
    }
}

/// `H` read off from the component containing `b (x) c`: the components
/// headed by `1(x)1`, `1(x)2`, `1(x)18` carry `0`, `-1`, `-2`.
pub fn local_h_by_component(b: Vertex, c: Vertex) -> Result<i32> {
    match component_head(b, c) {
        (h, t) if h.id() == 1 && t.id() == 1 => Ok(0),
        (h, t) if h.id() == 1 && t.id() == 2 => Ok(-1),
        (h, t) if h.id() == 1 && t.id() == 18 => Ok(-2),
        (h, t) => Err(Error::Internal(format!(
            "unexpected highest weight vector {h} (x) {t}"
        ))),
    }
}

/// `D(b) = sum_{j=1}^{L-1} (L-j) H(b_j (x) b_{j+1})`.
pub fn energy_d(p: &Path) -> i64 {
    let l = p.len();
    p.factors()
        .windows(2)
        .enumerate()
        .map(|(j, w)| (l - j - 1) as i64 * local_h(w[0], w[1]) as i64)
        .sum()
}

/// `sum_{b in paths} q^{D(b)}`.
pub fn generating_polynomial<'a>(paths: impl IntoIterator<Item = &'a Path>) -> LaurentPolynomial {
    let mut x = LaurentPolynomial::zero();
    for p in paths {
        x.add_term(energy_d(p), 1);
    }
    x
}

/// The one-dimensional sum `X(lambda, L; q)`.
pub fn one_dim_sum(lambda: Weight, length: usize, strategy: Strategy) -> LaurentPolynomial {
    generating_polynomial(&enumerate_paths(lambda, length, strategy))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::f_tensor;

    fn v(id: i64) -> Vertex {
        Vertex::new(id).unwrap()
    }

    #[test]
    fn local_energy_values() {
        assert_eq!(local_h(v(1), v(1)), 0);
        assert_eq!(local_h(v(1), v(18)), -2);
        assert_eq!(local_h(v(1), v(2)), -1);
        assert_eq!(local_h(v(2), v(1)), 0);
    }

    #[test]
    fn component_values() {
        assert_eq!(local_h_by_component(v(1), v(1)), Ok(0));
        assert_eq!(local_h_by_component(v(1), v(22)), Ok(-2));
        assert_eq!(local_h_by_component(v(2), v(1)), Ok(0));
        assert_eq!(component_head(v(2), v(1)), (v(1), v(1)));
    }

    #[test]
    fn two_definitions_agree_everywhere() {
        let mut counts = [0usize; 3];
        for b in Vertex::all() {
            for c in Vertex::all() {
                let h = local_h(b, c);
                assert_eq!(local_h_by_component(b, c), Ok(h), "{b} (x) {c}");
                counts[(-h) as usize] += 1;
            }
        }
        // Component sizes: dim B(2 Lambda_1) = 351, dim B(Lambda_2) = 351, 27.
        assert_eq!(counts, [351, 351, 27]);
    }

    #[test]
    fn constant_on_components() {
        for b in Vertex::all() {
            for c in Vertex::all() {
                let p = Path(vec![b, c]);
                for i in Node::ALL {
                    if let Some(q) = f_tensor(&p, i) {
                        assert_eq!(local_h(q.0[0], q.0[1]), local_h(b, c));
                        assert_eq!(e_tensor(&q, i), Some(p.clone()));
                    }
                }
            }
        }
    }

    #[test]
    fn energy_of_paths() {
        assert_eq!(energy_d(&Path::from_ids(&[1]).unwrap()), 0);
        assert_eq!(energy_d(&Path::empty()), 0);
        assert_eq!(
            energy_d(&Path::from_ids(&[1, 2, 3, 16, 2, 24]).unwrap()),
            -14
        );
        for l in 0..8 {
            assert_eq!(energy_d(&Path(vec![v(1); l])), 0);
        }
    }

    #[test]
    fn small_one_dimensional_sums() {
        let s = Strategy::Sequential;
        assert_eq!(
            one_dim_sum(Weight([1, 0, 0, 0, 0, 0]), 1, s),
            LaurentPolynomial::one()
        );
        assert_eq!(
            one_dim_sum(Weight([2, 0, 0, 0, 0, 0]), 2, s),
            LaurentPolynomial::one()
        );
        let w = graph().wt(v(1)) + graph().wt(v(18));
        assert_eq!(one_dim_sum(w, 2, s), LaurentPolynomial::monomial(-2, 1));
    }
}
