//! Named verification suites, as driven by `gparking verify <suite>`.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::scan::{scan_family, ScanOptions};
use super::families::{verify_block_join_equality, verify_uniform_offdiag_equality, MatrixCheck};
use super::check_equality;
use crate::enumeration::{parking_functions_within, tu_enumerate_within};
use crate::error::{Error, Result};
use crate::random;

/// `(name, alias, description)` for every suite.
pub const SUITES: &[(&str, &str, &str)] = &[
    ("thm1.1", "inequality", "dim R/J_H >= det H for random PSD H in G_n"),
    ("thm2.2", "uniform", "dim R/J_H = det H for uniform off-diagonal H"),
    ("thm2.3", "block-join", "dim R/J_H = det H for admissible block-join H"),
    ("lemma3.4", "components", "both sides factor over essential components"),
    ("prop3.11", "tu-census", "weighted TU-subgraph census equals det Q~_G"),
    ("thm3.9-scan", "classification", "equality agrees with the K^(a,1) classifier"),
    ("matrix-tree", "parking", "number of G-parking functions equals det L~_G"),
    ("counters", "ses", "recursive and enumerating counters agree; short exact sequence"),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Overrides the suite's default number of random instances.
    pub samples: Option<usize>,
    /// Scan size for the classification suite.
    pub n: usize,
    /// Largest rooted multiplicity for the classification suite.
    pub a: u64,
    pub max_edges: usize,
    pub max_box: u128,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            samples: None,
            n: 4,
            a: 2,
            max_edges: crate::enumeration::DEFAULT_MAX_EDGES,
            max_box: crate::ideal::DEFAULT_MAX_BOX,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    /// Per-instance rows, when the suite produces them.
    pub csv: Option<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            ..Self::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        let mut s = format!(
            "suite {}: {} ({} checked, {} failures)\n",
            self.name,
            if self.passed() { "PASS" } else { "FAIL" },
            self.checked,
            self.failures.len()
        );
        for n in &self.notes {
            s.push_str(&format!("  {n}\n"));
        }
        for f in self.failures.iter().take(20) {
            s.push_str(&format!("  failure: {f}\n"));
        }
        s
    }
}

fn resolve(name: &str) -> Option<&'static str> {
    SUITES
        .iter()
        .find(|(n, alias, _)| *n == name || *alias == name)
        .map(|(n, _, _)| *n)
}

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<SuiteReport> {
    let Some(canonical) = resolve(name) else {
        let available = SUITES
            .iter()
            .map(|(n, a, _)| format!("{n} ({a})"))
            .collect::<Vec<_>>()
            .join(", ");
        return Err(Error::UnknownSuite {
            name: name.to_string(),
            available,
        });
    };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let samples = |default: usize| opts.samples.unwrap_or(default);
    let mut report = SuiteReport::new(canonical);
    match canonical {
        "thm1.1" => {
            let mut strict = 0;
            for _ in 0..samples(300) {
                let c = MatrixCheck::of(random::psd_gn(&mut rng, 4, 5))?;
                report.checked += 1;
                if !c.dominates() {
                    report.failures.push(format!("{:?}: {} < {}", c.matrix.matrix(), c.std_count, c.det));
                } else if !c.equal() {
                    strict += 1;
                }
            }
            report.notes.push(format!("strict inequalities: {strict}"));
        }
        "thm2.2" => {
            let mut cases = vec![(vec![2, 2, 2], 2), (vec![3, 2], 1)];
            cases.extend((0..samples(200)).map(|_| random::uniform_offdiag(&mut rng, 5, 4)));
            for (diag, b) in cases {
                let c = verify_uniform_offdiag_equality(&diag, b)?;
                report.checked += 1;
                if !c.equal() {
                    report.failures.push(format!("diag {diag:?}, b {b}: {} != {}", c.std_count, c.det));
                }
            }
        }
        "thm2.3" => {
            for _ in 0..samples(200) {
                let (blocks, cross) = random::block_join(&mut rng, 5, 4);
                let c = verify_block_join_equality(&blocks, &cross)?;
                report.checked += 1;
                if !c.equal() {
                    report.failures.push(format!(
                        "blocks {blocks:?}, cross {cross:?}: {} != {}",
                        c.std_count, c.det
                    ));
                }
            }
        }
        "lemma3.4" => {
            for _ in 0..samples(200) {
                let g = random::multigraph(&mut rng, 6, 2);
                let v = check_equality(&g)?;
                report.checked += 1;
                if !v.is_multiplicative() {
                    report.failures.push(format!("{g:?}: totals do not factor"));
                }
                let parts_equal = v.per_component.iter().all(|c| c.equal());
                let zero_part = v.per_component.iter().any(|c| c.std_count.is_zero());
                if v.equal != (parts_equal || zero_part) {
                    report.failures.push(format!("{g:?}: total equality {} vs components", v.equal));
                }
            }
        }
        "prop3.11" => {
            let mut graphs = random::all_simple_connected(5);
            report.notes.push(format!("simple connected graphs on <= 5 vertices: {}", graphs.len()));
            graphs.extend((0..samples(100)).map(|_| random::multigraph_with_edges(&mut rng, 5, 3, 14)));
            for g in graphs {
                let tu = tu_enumerate_within(&g, opts.max_edges)?;
                let det = g.signless_laplacian_truncated().determinant();
                report.checked += 1;
                if BigInt::from(tu.weighted_sum.clone()) != det {
                    report.failures.push(format!("{g:?}: census {tu} vs det {det}"));
                }
            }
        }
        "thm3.9-scan" => {
            let scan = match opts.samples {
                Some(s) => ScanOptions::random(opts.n, opts.a, s, opts.seed),
                None => ScanOptions::exhaustive(opts.n, opts.a),
            };
            let r = scan_family(&scan)?;
            report.checked = r.rows.len();
            report.notes.extend(r.summary().lines().map(str::to_string));
            for cx in r.counterexamples()? {
                report.failures.push(format!(
                    "{:?}: {} (dim {}, det {}, components {:?}, generators {})",
                    cx.row.graph, cx.reason, cx.row.std_count, cx.row.det, cx.components, cx.generators
                ));
            }
            if r.partial {
                report.failures.push("scan budget exhausted; report is partial".into());
            }
            report.csv = Some(r.to_csv());
        }
        "matrix-tree" => {
            for _ in 0..samples(200) {
                let g = random::multigraph(&mut rng, 5, 3);
                let pf = parking_functions_within(&g, opts.max_box)?.len();
                let trees = g.laplacian_truncated().determinant();
                report.checked += 1;
                if BigInt::from(pf) != trees {
                    report.failures.push(format!("{g:?}: {pf} parking functions vs {trees} trees"));
                }
            }
        }
        "counters" => {
            for _ in 0..samples(1000) {
                let i = random::artinian_ideal(&mut rng, 4, 5);
                let (a, b) = (i.std_count_enum_within(opts.max_box)?, i.std_count_recursive()?);
                report.checked += 1;
                if a != b {
                    report.failures.push(format!("{i}: enum {a} vs recursive {b}"));
                }
            }
            for _ in 0..samples(500) {
                let i = random::artinian_ideal(&mut rng, 4, 5);
                let var = rng.gen_range(0..i.nvars());
                let r = rng.gen_range(1..=5);
                let whole = i.std_count_enum_within(opts.max_box)?;
                let colon: BigUint = i.colon_pure_power(var, r)?.std_count_enum_within(opts.max_box)?;
                let sum: BigUint = i.add_pure_power(var, r)?.std_count_enum_within(opts.max_box)?;
                report.checked += 1;
                if whole != &colon + &sum {
                    report.failures.push(format!("{i}, x{}^{r}: {whole} != {colon} + {sum}", var + 1));
                }
            }
        }
        _ => unreachable!("resolved names are listed in SUITES"),
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_lists_available() {
        let err = run_suite("bogus", &SuiteOptions::default()).unwrap_err();
        match err {
            Error::UnknownSuite { name, available } => {
                assert_eq!(name, "bogus");
                assert!(available.contains("thm3.9-scan"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn aliases_resolve() {
        assert_eq!(resolve("tu-census"), Some("prop3.11"));
        assert_eq!(resolve("thm2.2"), Some("thm2.2"));
        assert_eq!(resolve("nope"), None);
    }

    #[test]
    fn quick_runs_pass() {
        let opts = SuiteOptions {
            samples: Some(10),
            n: 3,
            a: 1,
            ..SuiteOptions::default()
        };
        for (name, _, _) in SUITES {
            if *name == "prop3.11" {
                continue;
            }
            let r = run_suite(name, &opts).unwrap();
            assert!(r.passed(), "{}", r.summary());
            assert!(r.checked > 0);
        }
    }
}
