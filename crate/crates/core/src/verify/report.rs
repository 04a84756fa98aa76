use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_form, isomorphic, CanonicalForm};
use crate::catalog::ObstructionCatalog;
use crate::codec::encode_graph6;
use crate::decomposition::{has_bridge, vertex_connectivity};
use crate::graph::{Bits, Graph};
use crate::minors::{contains_any_minor, contains_minor, is_obstruction};
use crate::recognition::ClassPredicate;

use super::enumerate::levels;
use super::search::{compose_disconnected_for, search_obstructions, SearchMode};
use super::VerifyError;

const MAX_RECORDED: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub label: String,
    pub graph6: String,
}

impl Counterexample {
    pub fn new(label: impl Into<String>, g: &Graph) -> Self {
        Counterexample {
            label: label.into(),
            graph6: encode_graph6(g),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    /// At most the first twenty failures.
    pub counterexamples: Vec<Counterexample>,
    pub failures: usize,
    pub detail: Option<String>,
    #[serde(serialize_with = "serialize_secs")]
    pub elapsed: Duration,
}

fn serialize_secs<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl CheckResult {
    fn from_failures(name: &str, failures: Vec<Counterexample>, started: Instant) -> Self {
        let count = failures.len();
        CheckResult {
            name: name.to_string(),
            pass: count == 0,
            counterexamples: failures.into_iter().take(MAX_RECORDED).collect(),
            failures: count,
            detail: None,
            elapsed: started.elapsed(),
        }
    }

    fn mismatch(name: &str, detail: String, started: Instant) -> Self {
        CheckResult {
            name: name.to_string(),
            pass: false,
            counterexamples: Vec::new(),
            failures: 1,
            detail: Some(detail),
            elapsed: started.elapsed(),
        }
    }

    /// `CHECK <name> PASS|FAIL [graph6...]`
    pub fn machine_line(&self) -> String {
        let mut line = format!(
            "CHECK {} {}",
            self.name,
            if self.pass { "PASS" } else { "FAIL" }
        );
        for c in &self.counterexamples {
            line.push(' ');
            line.push_str(&c.graph6);
        }
        line
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<28} {}  ({:.2}s)",
            self.name,
            if self.pass { "PASS" } else { "FAIL" },
            self.elapsed.as_secs_f64()
        )?;
        if let Some(d) = &self.detail {
            write!(f, "  {d}")?;
        }
        if self.failures > 0 && !self.counterexamples.is_empty() {
            write!(f, "  {} failure(s):", self.failures)?;
            for c in &self.counterexamples {
                write!(f, " {}={}", c.label, c.graph6)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn machine_lines(&self) -> String {
        self.checks
            .iter()
            .map(|c| c.machine_line() + "\n")
            .collect()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let passed = self.checks.iter().filter(|c| c.pass).count();
        write!(f, "{passed}/{} checks passed", self.checks.len())
    }
}

/// For every graph on at most `n_max` vertices, membership in `cls` must
/// coincide with having none of `patterns` as a minor.
pub fn equivalence_check(
    patterns: &[Graph],
    cls: &ClassPredicate,
    n_max: usize,
) -> Result<CheckResult, VerifyError> {
    let started = Instant::now();
    let mut failures = Vec::new();
    for level in levels(n_max, false)? {
        let graphs: Vec<Graph> = level.graphs().collect();
        let bad: Vec<Counterexample> = graphs
            .par_iter()
            .filter_map(|g| {
                let member = cls.test(g);
                let hit = contains_any_minor(g, patterns);
                match (member, hit) {
                    (true, Some((i, _))) => {
                        Some(Counterexample::new(format!("member-with-minor-{i}"), g))
                    }
                    (false, None) => Some(Counterexample::new("nonmember-without-minor", g)),
                    _ => None,
                }
            })
            .collect();
        failures.extend(bad);
    }
    Ok(CheckResult::from_failures("equivalence", failures, started))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CatalogVerifyOptions {
    /// Run the membership/minor equivalence over all graphs up to this size.
    pub equivalence_n: Option<usize>,
    /// Recompute connected obstructions up to this size and compare.
    pub search_n: Option<usize>,
    pub search_mode: SearchMode,
}

const EXPECTED_CLASS_SIZES: [usize; 4] = [3, 12, 15, 3];

/// Runs every catalog invariant against the apex-pseudoforest class.
pub fn verify_catalog(
    catalog: &ObstructionCatalog,
    opts: &CatalogVerifyOptions,
) -> Result<VerificationReport, VerifyError> {
    let apf = ClassPredicate::apex_pseudoforest();
    let entries = &catalog.entries;
    let mut report = VerificationReport::default();

    let started = Instant::now();
    let sizes: Vec<usize> = (0..4).map(|i| catalog.class(i).count()).collect();
    report
        .checks
        .push(if entries.len() != 33 || sizes != EXPECTED_CLASS_SIZES {
            CheckResult::mismatch(
                "count",
                format!(
                    "count mismatch: {} != 33 (class sizes {sizes:?})",
                    entries.len()
                ),
                started,
            )
        } else {
            CheckResult::from_failures("count", Vec::new(), started)
        });

    let per_entry = |name: &str, bad: &(dyn Fn(&Graph, usize) -> bool + Sync)| {
        let started = Instant::now();
        let failures = entries
            .par_iter()
            .filter(|e| bad(&e.graph, e.connectivity_class))
            .map(|e| Counterexample::new(e.name.clone(), &e.graph))
            .collect();
        CheckResult::from_failures(name, failures, started)
    };

    report.checks.push(per_entry("obstruction", &|g, _| {
        !is_obstruction(g, &apf).expect("apex-pseudoforests are minor-closed")
    }));
    report.checks.push(per_entry("connectivity-class", &|g, i| {
        vertex_connectivity(g) != i
    }));
    report
        .checks
        .push(per_entry("connected-structure", &|g, _| {
            g.is_connected() && !has_connected_obstruction_shape(g)
        }));

    let started = Instant::now();
    let mut dup = Vec::new();
    for (i, a) in entries.iter().enumerate() {
        for b in &entries[i + 1..] {
            if isomorphic(&a.graph, &b.graph) {
                dup.push(Counterexample::new(
                    format!("{}~{}", a.name, b.name),
                    &b.graph,
                ));
            }
        }
    }
    report.checks.push(CheckResult::from_failures(
        "pairwise-non-isomorphic",
        dup,
        started,
    ));

    let started = Instant::now();
    let pairs: Vec<(usize, usize)> = (0..entries.len())
        .flat_map(|i| {
            (0..entries.len())
                .filter(move |&j| j != i)
                .map(move |j| (i, j))
        })
        .collect();
    let nested = pairs
        .par_iter()
        .filter(|&&(i, j)| contains_minor(&entries[j].graph, &entries[i].graph).is_some())
        .map(|&(i, j)| {
            Counterexample::new(
                format!("{}<={}", entries[i].name, entries[j].name),
                &entries[i].graph,
            )
        })
        .collect();
    report
        .checks
        .push(CheckResult::from_failures("antichain", nested, started));

    let started = Instant::now();
    let composed = compose_disconnected_for(&[Graph::diamond(), Graph::butterfly()], 1, &apf)?;
    let disconnected: Vec<&Graph> = entries
        .iter()
        .filter(|e| !e.graph.is_connected())
        .map(|e| &e.graph)
        .collect();
    report.checks.push(compare_sets(
        "compose-disconnected",
        &composed,
        &disconnected,
        started,
    )?);

    if let Some(n) = opts.equivalence_n {
        report
            .checks
            .push(equivalence_check(&catalog.graphs(), &apf, n)?);
    }
    if let Some(n) = opts.search_n {
        let started = Instant::now();
        let found = search_obstructions(&apf, n, true, opts.search_mode)?;
        let expected: Vec<&Graph> = entries
            .iter()
            .filter(|e| e.graph.is_connected() && e.graph.vertex_count() <= n)
            .map(|e| &e.graph)
            .collect();
        report.checks.push(compare_sets(
            "search-connected",
            &found,
            &expected,
            started,
        )?);
    }
    Ok(report)
}

/// Minimum degree two, no bridge, and both neighbours of every degree-2
/// vertex adjacent.
pub fn has_connected_obstruction_shape(g: &Graph) -> bool {
    g.min_degree() >= 2
        && !has_bridge(g)
        && (0..g.vertex_count()).all(|v| {
            let nb = g.neighbor_mask(v);
            if nb.count_ones() != 2 {
                return true;
            }
            let mut it = Bits(nb);
            let (a, b) = (it.next().unwrap(), it.next().unwrap());
            g.has_edge(a, b)
        })
}

fn compare_sets(
    name: &str,
    found: &BTreeSet<CanonicalForm>,
    expected: &[&Graph],
    started: Instant,
) -> Result<CheckResult, VerifyError> {
    let expected: BTreeSet<CanonicalForm> = expected
        .iter()
        .map(|g| canonical_form(g))
        .collect::<Result<_, _>>()?;
    let mut failures: Vec<Counterexample> = found
        .difference(&expected)
        .map(|f| Counterexample::new("extra", &f.to_graph()))
        .collect();
    failures.extend(
        expected
            .difference(found)
            .map(|f| Counterexample::new("missing", &f.to_graph())),
    );
    let mut r = CheckResult::from_failures(name, failures, started);
    r.detail = Some(format!(
        "{} found, {} expected",
        found.len(),
        expected.len()
    ));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_catalog;

    #[test]
    fn catalog_passes_structural_checks() {
        let report = verify_catalog(&build_catalog(), &CatalogVerifyOptions::default()).unwrap();
        assert!(report.all_passed(), "{report}");
        assert!(report
            .machine_lines()
            .lines()
            .all(|l| l.starts_with("CHECK ") && l.contains(" PASS")));
    }

    #[test]
    fn replaced_entry_is_caught() {
        let mut cat = build_catalog();
        let idx = cat.entries.iter().position(|e| e.name == "O2_5").unwrap();
        cat.entries[idx].graph = Graph::cycle(6).unwrap();
        let report = verify_catalog(&cat, &CatalogVerifyOptions::default()).unwrap();
        assert!(!report.all_passed());
        for name in ["obstruction", "connected-structure"] {
            let c = report.get(name).unwrap();
            assert!(!c.pass);
            assert_eq!(c.counterexamples[0].label, "O2_5");
        }
        // C6 is 2-connected, exactly like the entry it replaced
        assert!(report.get("connectivity-class").unwrap().pass);
    }

    #[test]
    fn missing_entry_fails_count() {
        let mut cat = build_catalog();
        cat.entries.pop();
        let report = verify_catalog(&cat, &CatalogVerifyOptions::default()).unwrap();
        let c = report.get("count").unwrap();
        assert!(!c.pass);
        assert!(c.detail.as_deref().unwrap().contains("32 != 33"));
    }

    #[test]
    fn equivalence_small() {
        let pf = ClassPredicate::pseudoforest();
        let obs = [Graph::diamond(), Graph::butterfly()];
        assert!(equivalence_check(&obs, &pf, 6).unwrap().pass);
        let empty = equivalence_check(&[], &pf, 5).unwrap();
        assert!(!empty.pass);
        assert!(empty
            .counterexamples
            .iter()
            .all(|c| c.label == "nonmember-without-minor"));
    }
}
