//! Exhaustive and sampled scans over subgraphs of `K_{n+1}^{a,1}`.

use std::collections::HashSet;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use super::normal_form::CliqueNormalForm;
use super::{check_equality, classify_subgraph_of_ka1, one_skeleton_dimension, Classification};
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

/// Largest `n` for which every inner-edge subset is generated.
pub const MAX_EXHAUSTIVE_N: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanMode {
    Exhaustive,
    Random { samples: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanOptions {
    pub n: usize,
    /// Largest rooted multiplicity `a`.
    pub max_rooted: u64,
    pub mode: ScanMode,
    /// Stop after this many graphs have been checked; the report is then
    /// flagged partial.
    pub budget: Option<usize>,
    pub seed: u64,
    /// Skip graphs whose [`fingerprint`] was already seen.
    pub dedup: bool,
}

impl ScanOptions {
    pub fn exhaustive(n: usize, max_rooted: u64) -> Self {
        Self {
            n,
            max_rooted,
            mode: ScanMode::Exhaustive,
            budget: None,
            seed: 0,
            dedup: true,
        }
    }

    pub fn random(n: usize, max_rooted: u64, samples: usize, seed: u64) -> Self {
        Self {
            mode: ScanMode::Random { samples },
            seed,
            ..Self::exhaustive(n, max_rooted)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRow {
    pub graph: Multigraph,
    pub fingerprint: String,
    pub edge_hash: String,
    pub std_count: BigUint,
    pub det: BigInt,
    pub equal: bool,
    pub classification: Classification,
    /// `Some(true)` when the clique normal form predicts a strict
    /// inequality and the counts confirm it, `Some(false)` when predicted
    /// but not observed, `None` when the prediction does not apply.
    pub strict_prediction: Option<bool>,
}

impl ScanRow {
    pub fn agreement(&self) -> bool {
        self.equal == self.classification.holds
    }

    /// Equality holds only because some component has a zero quotient while
    /// another component is not a clique.
    pub fn degenerate(&self) -> bool {
        self.equal && !self.classification.cliques
    }
}

/// Everything needed to replay a disagreement by hand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub row: ScanRow,
    pub components: Vec<(Vec<usize>, BigUint, BigInt)>,
    pub generators: String,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanReport {
    pub rows: Vec<ScanRow>,
    pub generated: usize,
    pub duplicates: usize,
    pub partial: bool,
}

impl ScanReport {
    pub fn disagreements(&self) -> impl Iterator<Item = &ScanRow> {
        self.rows.iter().filter(|r| !r.agreement())
    }

    pub fn strict_prediction_failures(&self) -> impl Iterator<Item = &ScanRow> {
        self.rows.iter().filter(|r| r.strict_prediction == Some(false))
    }

    pub fn passed(&self) -> bool {
        self.disagreements().next().is_none() && self.strict_prediction_failures().next().is_none()
    }

    pub fn counterexamples(&self) -> Result<Vec<Counterexample>> {
        let mut out = Vec::new();
        for row in &self.rows {
            let reason = if !row.agreement() {
                format!(
                    "equal = {} but classifier predicts {}",
                    row.equal, row.classification.holds
                )
            } else if row.strict_prediction == Some(false) {
                "normal form predicts a strict inequality but the counts are equal".to_string()
            } else {
                continue;
            };
            let verdict = check_equality(&row.graph)?;
            let (ideal, _) = one_skeleton_dimension(&row.graph)?;
            out.push(Counterexample {
                row: row.clone(),
                components: verdict
                    .per_component
                    .into_iter()
                    .map(|c| (c.labels, c.std_count, c.det))
                    .collect(),
                generators: ideal.to_string(),
                reason,
            });
        }
        Ok(out)
    }

    pub const CSV_HEADER: &'static str =
        "fingerprint,n,edge_hash,std_count,det,equal,classified,agreement";

    /// One row per scanned graph.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                r.fingerprint,
                r.graph.n(),
                r.edge_hash,
                r.std_count,
                r.det,
                r.equal,
                r.classification.holds,
                r.agreement()
            );
        }
        out
    }

    pub fn summary(&self) -> String {
        let equal = self.rows.iter().filter(|r| r.equal).count();
        let strict_checked = self.rows.iter().filter(|r| r.strict_prediction.is_some()).count();
        let mut s = String::new();
        let _ = writeln!(s, "graphs generated: {}", self.generated);
        let _ = writeln!(s, "duplicates skipped: {}", self.duplicates);
        let _ = writeln!(s, "graphs checked: {}", self.rows.len());
        let _ = writeln!(s, "equal: {equal}");
        let _ = writeln!(s, "strict: {}", self.rows.len() - equal);
        let _ = writeln!(s, "equal via zero-dimensional component: {}", self.rows.iter().filter(|r| r.degenerate()).count());
        let _ = writeln!(s, "normal-form strictness predictions checked: {strict_checked}");
        let _ = writeln!(s, "disagreements: {}", self.disagreements().count());
        let _ = writeln!(s, "normal-form prediction failures: {}", self.strict_prediction_failures().count());
        let _ = writeln!(s, "partial: {}", self.partial);
        s
    }
}

fn hex16(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}

/// Hash of the labeled edge list `u-v:m;...`.
pub fn edge_hash(g: &Multigraph) -> String {
    let mut s = format!("n={};", g.n());
    for (u, v, m) in g.edges() {
        let _ = write!(s, "{u}-{v}:{m};");
    }
    hex16(s.as_bytes())
}

/// Relabeling-invariant fingerprint from a few rounds of neighbourhood
/// refinement (rooted multiplicity, then sorted multiset of
/// (edge multiplicity, neighbour colour)). Isomorphic graphs always agree;
/// distinct graphs may collide, so deduplication by fingerprint is a
/// heuristic.
pub fn fingerprint(g: &Multigraph) -> String {
    let n = g.n();
    let mut colour: Vec<String> = (1..=n).map(|v| g.rooted(v).to_string()).collect();
    for _ in 0..3 {
        colour = (1..=n)
            .map(|v| {
                let mut nb: Vec<String> = (1..=n)
                    .filter(|&u| u != v && g.multiplicity(u, v) > 0)
                    .map(|u| format!("{}:{}", g.multiplicity(u, v), colour[u - 1]))
                    .collect();
                nb.sort();
                format!("({}|{})", colour[v - 1], nb.join(","))
            })
            .collect();
    }
    colour.sort();
    hex16(format!("{n};{}", colour.join(";")).as_bytes())
}

fn inner_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n)
        .flat_map(|u| ((u + 1)..=n).map(move |v| (u, v)))
        .collect()
}

fn build(n: usize, pairs: &[(usize, usize)], inner_mask: u64, rooted: &[u64]) -> Multigraph {
    let mut g = Multigraph::empty(n).expect("n >= 1");
    for (k, &(u, v)) in pairs.iter().enumerate() {
        if inner_mask >> k & 1 == 1 {
            g.add_edges(u, v, 1).expect("in range");
        }
    }
    for (i, &m) in rooted.iter().enumerate() {
        g.add_edges(0, i + 1, m).expect("in range");
    }
    g
}

fn generate(opts: &ScanOptions) -> Result<Vec<Multigraph>> {
    let n = opts.n;
    if n == 0 {
        return Err(Error::NoVertices);
    }
    let pairs = inner_pairs(n);
    match opts.mode {
        ScanMode::Exhaustive => {
            if n > MAX_EXHAUSTIVE_N {
                return Err(Error::Hypothesis(format!(
                    "exhaustive scans need n <= {MAX_EXHAUSTIVE_N}, got {n}"
                )));
            }
            let base = opts.max_rooted + 1;
            let assignments = base.pow(n as u32);
            let mut out = Vec::new();
            for mask in 0u64..(1 << pairs.len()) {
                for code in 0..assignments {
                    let mut rest = code;
                    let rooted: Vec<u64> = (0..n)
                        .map(|_| {
                            let m = rest % base;
                            rest /= base;
                            m
                        })
                        .collect();
                    out.push(build(n, &pairs, mask, &rooted));
                }
            }
            Ok(out)
        }
        ScanMode::Random { samples } => {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            Ok((0..samples)
                .map(|_| {
                    let mask = rng.gen_range(0u64..(1 << pairs.len()));
                    let rooted: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=opts.max_rooted)).collect();
                    build(n, &pairs, mask, &rooted)
                })
                .collect())
        }
    }
}

fn scan_one(g: Multigraph) -> Result<ScanRow> {
    let verdict = check_equality(&g)?;
    let classification = classify_subgraph_of_ka1(&g)?;
    let strict_prediction = CliqueNormalForm::of(&g)
        .filter(CliqueNormalForm::predicts_strict)
        .map(|_| verdict.is_strict());
    Ok(ScanRow {
        fingerprint: fingerprint(&g),
        edge_hash: edge_hash(&g),
        std_count: verdict.std_count,
        det: verdict.det_q,
        equal: verdict.equal,
        classification,
        strict_prediction,
        graph: g,
    })
}

/// Checks equality against the classifier on subgraphs of `K_{n+1}^{a,1}`,
/// and the normal-form strictness prediction wherever it applies.
pub fn scan_family(opts: &ScanOptions) -> Result<ScanReport> {
    let all = generate(opts)?;
    let generated = all.len();
    let mut seen = HashSet::new();
    let mut todo = Vec::new();
    let mut duplicates = 0;
    let mut partial = false;
    for g in all {
        if opts.dedup && !seen.insert(fingerprint(&g)) {
            duplicates += 1;
            continue;
        }
        if opts.budget.is_some_and(|b| todo.len() >= b) {
            partial = true;
            break;
        }
        todo.push(g);
    }
    let rows = todo
        .into_par_iter()
        .map(scan_one)
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanReport {
        rows,
        generated,
        duplicates,
        partial,
    })
}
