//! End-to-end verification: `X = M`, the bijection, its statistic, and the
//! step-level invariants of `delta`, for every dominant weight and every
//! length up to a bound.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::bijection::{
    delta, delta_branches, delta_inv, delta_inv_branches, delta_inv_unchecked, phi, phi_inv,
};
use crate::cartan::{dominant_weights, Weight};
use crate::crystal::{graph, Vertex};
use crate::energy::{energy_d, generating_polynomial, local_h, local_h_by_component};
use crate::exec::Strategy;
use crate::fermionic::{
    enumerate_configs, fermionic_m_by_binomials, fermionic_m_by_riggings, riggings_of,
};
use crate::graph_lemma::verify_graph_lemma;
use crate::poly::LaurentPolynomial;
use crate::rigged::{
    cc, charge_direct, charge_via_vacancies, vacancy_identity_violations, RiggedConfiguration,
};
use crate::tensor::{enumerate_hw_levels, is_classically_restricted, Path};
use crate::vacancy_table::{breakpoints_ordered, table_mismatches};

/// Failure counters for one `(lambda, L)` case. All zero on success.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Failures {
    /// q-binomial and rigging sums for `M` differ.
    pub m_routes: usize,
    /// The two charge formulas differ on a configuration.
    pub charge: usize,
    /// A configuration violates a vacancy-number identity.
    pub vacancy_identities: usize,
    /// `phi` or `phi_inv` failed, or `phi_inv(phi(rc)) != rc`, or a single
    /// `delta` step does not invert.
    pub roundtrip: usize,
    /// Two configurations share an image, or the images miss a path.
    pub injectivity: usize,
    /// `phi(rc)` is not a classically restricted path of the right weight.
    pub image: usize,
    /// `cc(rc) != D(phi(rc))`.
    pub statistic: usize,
    /// `cc(rc) - cc(delta(rc)) != -(rows of nu^(1))`.
    pub step_charge: usize,
    /// `H(b_{L-1} (x) b_L)` differs from the change in rows of `nu^(1)`.
    pub step_energy: usize,
    /// Vacancy-change tables disagree with recomputation.
    pub table: usize,
    /// Tie branches of `delta` or its inverse disagree.
    pub tie: usize,
    /// `delta(rc)` is not in `RC(lambda - wt(b), L - 1)`.
    pub delta_image: usize,
    /// Selected lengths are not monotone along a walk.
    pub monotonicity: usize,
}

impl Failures {
    pub fn total(&self) -> usize {
        let Failures {
            m_routes,
            charge,
            vacancy_identities,
            roundtrip,
            injectivity,
            image,
            statistic,
            step_charge,
            step_energy,
            table,
            tie,
            delta_image,
            monotonicity,
        } = self;
        m_routes
            + charge
            + vacancy_identities
            + roundtrip
            + injectivity
            + image
            + statistic
            + step_charge
            + step_energy
            + table
            + tie
            + delta_image
            + monotonicity
    }

    fn absorb(&mut self, o: &Failures) {
        self.m_routes += o.m_routes;
        self.charge += o.charge;
        self.vacancy_identities += o.vacancy_identities;
        self.roundtrip += o.roundtrip;
        self.injectivity += o.injectivity;
        self.image += o.image;
        self.statistic += o.statistic;
        self.step_charge += o.step_charge;
        self.step_energy += o.step_energy;
        self.table += o.table;
        self.tie += o.tie;
        self.delta_image += o.delta_image;
        self.monotonicity += o.monotonicity;
    }

    fn nonzero(&self) -> Vec<(&'static str, usize)> {
        [
            ("m_routes", self.m_routes),
            ("charge", self.charge),
            ("vacancy_identities", self.vacancy_identities),
            ("roundtrip", self.roundtrip),
            ("injectivity", self.injectivity),
            ("image", self.image),
            ("statistic", self.statistic),
            ("step_charge", self.step_charge),
            ("step_energy", self.step_energy),
            ("table", self.table),
            ("tie", self.tie),
            ("delta_image", self.delta_image),
            ("monotonicity", self.monotonicity),
        ]
        .into_iter()
        .filter(|&(_, n)| n > 0)
        .collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub weight: Weight,
    pub length: usize,
    pub x: LaurentPolynomial,
    pub m: LaurentPolynomial,
    pub equal: bool,
    pub paths: usize,
    pub configs: usize,
    pub rcs: usize,
    /// Whether the bijection checks ran for this case.
    pub bijection_checked: bool,
    /// Number of `delta` applications examined.
    pub delta_steps: usize,
    pub failures: Failures,
    pub elapsed_ms: f64,
}

impl CaseReport {
    pub fn failure_count(&self) -> usize {
        self.failures.total() + usize::from(!self.equal)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphChecks {
    pub routes: usize,
    pub lemma_counterexamples: usize,
    pub energy_pairs: usize,
    pub energy_mismatches: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub max_length: usize,
    pub graph: GraphChecks,
    pub cases: Vec<CaseReport>,
}

impl VerifyReport {
    pub fn failures(&self) -> usize {
        self.graph.lemma_counterexamples
            + self.graph.energy_mismatches
            + self
                .cases
                .iter()
                .map(CaseReport::failure_count)
                .sum::<usize>()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    /// Deterministic line-oriented text; timings are not included.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let g = &self.graph;
        let _ = writeln!(
            s,
            "graph routes={} lemma_counterexamples={} energy_pairs={} energy_mismatches={}",
            g.routes, g.lemma_counterexamples, g.energy_pairs, g.energy_mismatches
        );
        for c in &self.cases {
            let _ = write!(
                s,
                "case L={} weight={} paths={} configs={} rcs={} delta_steps={} equal={} X={} M={}",
                c.length, c.weight, c.paths, c.configs, c.rcs, c.delta_steps, c.equal, c.x, c.m
            );
            for (name, n) in c.failures.nonzero() {
                let _ = write!(s, " {name}={n}");
            }
            s.push('\n');
        }
        let _ = writeln!(
            s,
            "RESULT {} cases={} failures={}",
            if self.passed() { "pass" } else { "fail" },
            self.cases.len(),
            self.failures()
        );
        s
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub max_length: usize,
    /// Bijection and step checks run for `L <= bijection_max_length`.
    pub bijection_max_length: usize,
    pub strategy: Strategy,
}

impl VerifyOptions {
    pub fn new(max_length: usize) -> Self {
        VerifyOptions {
            max_length,
            bijection_max_length: max_length,
            strategy: Strategy::Parallel,
        }
    }
}

pub fn graph_checks() -> GraphChecks {
    let g = graph();
    let lemma = verify_graph_lemma(g);
    let mut mismatches = 0;
    let mut pairs = 0;
    for b in Vertex::all() {
        for c in Vertex::all() {
            pairs += 1;
            if local_h_by_component(b, c) != Ok(local_h(b, c)) {
                mismatches += 1;
            }
        }
    }
    GraphChecks {
        routes: lemma.routes,
        lemma_counterexamples: lemma.counterexamples.len(),
        energy_pairs: pairs,
        energy_mismatches: mismatches,
    }
}

/// Checks one `delta` application; returns the failures and the next
/// configuration (if any) so that callers can follow the whole chain.
pub fn check_delta_step(rc: &RiggedConfiguration) -> (Failures, Option<RiggedConfiguration>) {
    let mut f = Failures::default();
    let Ok(d) = delta(rc) else {
        f.roundtrip += 1;
        return (f, None);
    };
    let rec = &d.record;
    let before = rec.first_column_before as i64;
    let after = rec.first_column_after as i64;

    if cc(rc) - cc(&d.rc) != -before {
        f.step_charge += 1;
    }
    if d.rc.length >= 1 {
        match delta(&d.rc) {
            Ok(next) if local_h(next.vertex, d.vertex) as i64 == after - before => {}
            _ => f.step_energy += 1,
        }
    }
    if !breakpoints_ordered(rec) || !table_mismatches(rc, &d.rc, rec).is_empty() {
        f.table += 1;
    }
    match delta_branches(rc) {
        Ok(branches)
            if branches
                .iter()
                .all(|b| b.rc == d.rc && b.vertex == d.vertex) => {}
        _ => f.tie += 1,
    }
    if !delta_inv_branches(&d.rc, d.vertex)
        .iter()
        .all(|o| o.rc == *rc)
    {
        f.tie += 1;
    }
    let expected = rc.weight() - graph().wt(d.vertex);
    if d.rc.validate() != Ok(expected) {
        f.delta_image += 1;
    }
    let fwd = rec
        .selections
        .windows(2)
        .all(|w| w[0].length <= w[1].length);
    let inv = delta_inv_unchecked(&d.rc, d.vertex);
    let bwd = inv
        .selections
        .windows(2)
        .all(|w| w[0].length >= w[1].length);
    if !fwd || !bwd {
        f.monotonicity += 1;
    }
    if delta_inv(&d.rc, d.vertex).as_ref() != Ok(rc) {
        f.roundtrip += 1;
    }
    (f, Some(d.rc))
}

/// Bijection-level checks for one rigged configuration against the sorted
/// path set `paths` of its weight. Returns failures, the image, and the
/// number of `delta` steps examined.
pub fn check_rc(
    rc: &RiggedConfiguration,
    lambda: Weight,
    paths: &[Path],
) -> (Failures, Option<Path>, usize) {
    let mut f = Failures::default();
    let Ok(path) = phi(rc) else {
        f.roundtrip += 1;
        return (f, None, 0);
    };
    if !is_classically_restricted(&path, lambda) || paths.binary_search(&path).is_err() {
        f.image += 1;
    }
    if phi_inv(&path).as_ref() != Ok(rc) {
        f.roundtrip += 1;
    }
    if cc(rc) != energy_d(&path) {
        f.statistic += 1;
    }
    let mut steps = 0;
    let mut cur = rc.clone();
    while cur.length > 0 {
        let (sf, next) = check_delta_step(&cur);
        f.absorb(&sf);
        steps += 1;
        match next {
            Some(n) => cur = n,
            None => break,
        }
    }
    (f, Some(path), steps)
}

fn run_case(lambda: Weight, length: usize, paths: &[Path], opts: &VerifyOptions) -> CaseReport {
    let start = Instant::now();
    let strategy = opts.strategy;
    let mut failures = Failures::default();

    let x = generating_polynomial(paths);
    let configs = enumerate_configs(lambda, length, strategy);
    let m = fermionic_m_by_binomials(&configs, length);

    let per_config = strategy.map(&configs, |nu| {
        let mut f = Failures::default();
        if charge_direct(nu, length) != charge_via_vacancies(nu, length) {
            f.charge += 1;
        }
        if !vacancy_identity_violations(nu, length).is_empty() {
            f.vacancy_identities += 1;
        }
        (f, riggings_of(nu, length))
    });
    let mut rcs = Vec::new();
    for (f, r) in per_config {
        failures.absorb(&f);
        rcs.extend(r);
    }
    rcs.sort();
    if fermionic_m_by_riggings(&rcs) != m {
        failures.m_routes += 1;
    }

    let bijection_checked = length <= opts.bijection_max_length;
    let mut delta_steps = 0;
    if bijection_checked {
        let results = strategy.map(&rcs, |rc| check_rc(rc, lambda, paths));
        let mut images = BTreeSet::new();
        let mut duplicates = 0;
        for (f, img, steps) in results {
            failures.absorb(&f);
            delta_steps += steps;
            if let Some(p) = img {
                if !images.insert(p) {
                    duplicates += 1;
                }
            }
        }
        let missed = paths.iter().filter(|p| !images.contains(*p)).count();
        failures.injectivity += duplicates + missed;
    }

    CaseReport {
        weight: lambda,
        length,
        equal: x == m,
        x,
        m,
        paths: paths.len(),
        configs: configs.len(),
        rcs: rcs.len(),
        bijection_checked,
        delta_steps,
        failures,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

/// Cases in order of length, then lexicographic weight.
pub fn verify(opts: &VerifyOptions) -> VerifyReport {
    let levels = enumerate_hw_levels(opts.max_length, opts.strategy);
    let mut cases: Vec<(usize, Weight)> = Vec::new();
    for (length, level) in levels.iter().enumerate() {
        let mut weights: BTreeSet<Weight> = dominant_weights(length).into_iter().collect();
        weights.extend(level.keys().copied());
        cases.extend(weights.into_iter().map(|w| (length, w)));
    }
    let empty: Vec<Path> = Vec::new();
    let reports = opts.strategy.map(&cases, |&(length, lambda)| {
        let paths = levels[length].get(&lambda).unwrap_or(&empty);
        run_case(lambda, length, paths, opts)
    });
    VerifyReport {
        max_length: opts.max_length,
        graph: graph_checks(),
        cases: reports,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_harness_is_clean() {
        let report = verify(&VerifyOptions::new(3));
        assert!(report.passed(), "{}", report.to_text());
        assert!(report.to_text().ends_with(&format!(
            "RESULT pass cases={} failures=0\n",
            report.cases.len()
        )));
        let seq = verify(&VerifyOptions {
            strategy: Strategy::Sequential,
            ..VerifyOptions::new(3)
        });
        assert_eq!(seq.to_text(), report.to_text());
    }
}
