//! Enumeration of admissible configurations and rigged configurations, and
//! the fermionic formula `M(lambda, L; q)`.

use crate::cartan::{solve_config_sizes, Node, Weight, E6, RANK};
use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::poly::{qbinom, LaurentPolynomial};
use crate::rigged::{
    cc, charge_via_vacancies, vacancy, Configuration, Partition, RiggedConfiguration,
    RiggedPartition, Row,
};

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::new(cur.clone()).expect("parts are positive"));
            return;
        }
        for part in (1..=rest.min(cap)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Order in which nodes are filled during the search; after each prefix the
/// vacancy numbers of every node whose neighbourhood is complete can be
/// checked.
const FILL_ORDER: [usize; RANK] = [0, 1, 5, 2, 3, 4];

fn ready_after(step: usize) -> Vec<Node> {
    let filled = &FILL_ORDER[..=step];
    let before = &FILL_ORDER[..step];
    let complete = |set: &[usize], a: Node| {
        set.contains(&a.index()) && E6.neighbors(a).all(|b| set.contains(&b.index()))
    };
    Node::ALL
        .into_iter()
        .filter(|&a| complete(filled, a) && !complete(before, a))
        .collect()
}

/// `C(lambda, L)`: admissible configurations, sorted.
pub fn enumerate_configs(lambda: Weight, length: usize, strategy: Strategy) -> Vec<Configuration> {
    if !lambda.is_dominant() {
        return Vec::new();
    }
    let Some(sizes) = solve_config_sizes(lambda, length) else {
        return Vec::new();
    };
    let choices: Vec<Vec<Partition>> = sizes.iter().map(|&n| partitions_of(n)).collect();
    let checks: Vec<Vec<Node>> = (0..RANK).map(ready_after).collect();

    fn search(
        step: usize,
        nu: &mut Configuration,
        length: usize,
        choices: &[Vec<Partition>],
        checks: &[Vec<Node>],
        out: &mut Vec<Configuration>,
    ) {
        if step == RANK {
            out.push(nu.clone());
            return;
        }
        let a = FILL_ORDER[step];
        for mu in &choices[a] {
            nu.parts[a] = mu.clone();
            let ok = checks[step].iter().all(|&b| {
                nu.part(b)
                    .distinct_parts()
                    .into_iter()
                    .all(|i| vacancy(nu, length, b, i) >= 0)
            });
            if ok {
                search(step + 1, nu, length, choices, checks, out);
            }
        }
        nu.parts[a] = Partition::empty();
    }

    let first = FILL_ORDER[0];
    let mut found = strategy.flat_map(&choices[first], |mu| {
        let mut nu = Configuration::default();
        nu.parts[first] = mu.clone();
        let mut out = Vec::new();
        if checks[0].is_empty()
            || checks[0].iter().all(|&b| {
                nu.part(b)
                    .distinct_parts()
                    .into_iter()
                    .all(|i| vacancy(&nu, length, b, i) >= 0)
            })
        {
            search(1, &mut nu, length, &choices, &checks, &mut out);
        }
        out
    });
    found.sort();
    found
}

/// Partitions with at most `rows` parts, each in `0..=width`, as weakly
/// decreasing vectors of length exactly `rows`.
pub fn box_partitions(rows: usize, width: i64) -> Vec<Vec<i64>> {
    fn go(k: usize, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        for x in (0..=cap).rev() {
            cur.push(x);
            go(k - 1, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if width < 0 {
        if rows == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(rows, width, &mut Vec::new(), &mut out);
    out
}

/// Every rigging of `nu`: each block `J^(a,i)` ranges over the partitions in
/// an `m_i^(a) x p_i^(a)` box.
pub fn riggings_of(nu: &Configuration, length: usize) -> Vec<RiggedConfiguration> {
    let vac = nu.vacancies(length);
    // One entry per (a, i) block with m > 0.
    let blocks: Vec<(usize, usize, Vec<Vec<i64>>)> = Node::ALL
        .into_iter()
        .flat_map(|a| {
            let part = nu.part(a);
            let vac = &vac;
            part.distinct_parts().into_iter().map(move |i| {
                (
                    a.index(),
                    i,
                    box_partitions(part.multiplicity(i), vac.get(a, i)),
                )
            })
        })
        .collect();
    let mut out = Vec::new();
    let mut pick = vec![0usize; blocks.len()];
    if blocks.iter().any(|(_, _, opts)| opts.is_empty()) {
        return out;
    }
    loop {
        let mut rows: [Vec<Row>; RANK] = Default::default();
        for ((a, i, opts), &k) in blocks.iter().zip(&pick) {
            rows[*a].extend(opts[k].iter().map(|&rigging| Row {
                length: *i,
                rigging,
            }));
        }
        out.push(RiggedConfiguration {
            length,
            parts: rows.map(RiggedPartition::new),
        });
        let mut k = 0;
        loop {
            if k == blocks.len() {
                return out;
            }
            pick[k] += 1;
            if pick[k] < blocks[k].2.len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
    }
}

/// `RC(lambda, L)`, sorted.
pub fn enumerate_rcs(
    lambda: Weight,
    length: usize,
    strategy: Strategy,
) -> Vec<RiggedConfiguration> {
    let configs = enumerate_configs(lambda, length, strategy);
    let mut out = strategy.flat_map(&configs, |nu| riggings_of(nu, length));
    out.sort();
    out
}

/// `q^{c(nu)} prod_{a,i} [p_i^(a) + m_i^(a) choose m_i^(a)]_q`.
pub fn config_term(nu: &Configuration, length: usize) -> LaurentPolynomial {
    let vac = nu.vacancies(length);
    let mut term = LaurentPolynomial::monomial(charge_via_vacancies(nu, length), 1);
    for a in Node::ALL {
        let part = nu.part(a);
        for i in part.distinct_parts() {
            let m = part.multiplicity(i) as i64;
            term = &term * &qbinom(vac.get(a, i) + m, m);
        }
    }
    term
}

/// The fermionic sum over configurations, using q-binomials.
pub fn fermionic_m_by_binomials(configs: &[Configuration], length: usize) -> LaurentPolynomial {
    configs.iter().map(|nu| config_term(nu, length)).sum()
}

/// `sum_{(nu,J)} q^{c(nu,J)}` over explicitly enumerated riggings.
pub fn fermionic_m_by_riggings<'a>(
    rcs: impl IntoIterator<Item = &'a RiggedConfiguration>,
) -> LaurentPolynomial {
    let mut m = LaurentPolynomial::zero();
    for rc in rcs {
        m.add_term(cc(rc), 1);
    }
    m
}

/// `M(lambda, L; q)`, computed through q-binomials and through riggings; the
/// two must coincide.
pub fn fermionic_m(lambda: Weight, length: usize, strategy: Strategy) -> Result<LaurentPolynomial> {
    let configs = enumerate_configs(lambda, length, strategy);
    let by_binomials = fermionic_m_by_binomials(&configs, length);
    let terms = strategy.map(&configs, |nu| {
        fermionic_m_by_riggings(&riggings_of(nu, length))
    });
    let by_riggings: LaurentPolynomial = terms.into_iter().sum();
    if by_binomials != by_riggings {
        return Err(Error::Internal(format!(
            "M({lambda}, {length}) disagrees: {by_binomials} vs {by_riggings}"
        )));
    }
    Ok(by_binomials)
}
