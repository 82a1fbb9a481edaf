use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use super::generate::{check_range, enumerate_levels, DEFAULT_MAX};
use crate::congruence::{con_count, exceeds_threshold, few_criteria};
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::planarity::{is_dismantlable, is_planar_graph_oracle, is_planar_kr};

/// Knobs shared by the sweeps.
#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    /// Largest accepted `n`.
    pub max: usize,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            max: DEFAULT_MAX,
            jobs: None,
        }
    }
}

fn run_pool<T: Send>(jobs: Option<usize>, work: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(work()),
        Some(0) => Err(Error::Size("--jobs must be at least 1".into())),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| Error::Size(format!("cannot start {k} workers: {e}")))?;
            Ok(pool.install(work))
        }
    }
}

fn level(n: usize, opts: &RunOptions) -> Result<Vec<Lattice>> {
    check_range(n, opts.max)?;
    Ok(enumerate_levels(n).pop().expect("at least one level"))
}

/// Cover list as `a-b` tokens separated by spaces; `-` for the one-element
/// lattice.
pub fn cover_certificate(l: &Lattice) -> String {
    if l.cover_pairs().is_empty() {
        return "-".into();
    }
    let parts: Vec<String> = l
        .cover_pairs()
        .iter()
        .map(|(a, b)| format!("{a}-{b}"))
        .collect();
    parts.join(" ")
}

/// The distinct values of `|Con(L)|` over all `n`-element lattices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumReport {
    pub n: usize,
    /// Distinct values, largest first.
    pub values: Vec<u128>,
    /// Number of isomorphism classes per value.
    pub counts: BTreeMap<u128, usize>,
    pub total_classes: usize,
}

impl SpectrumReport {
    /// The five largest values predicted by `16, 8, 5, 4, 7/2` times
    /// `2^(n-5)`; `None` where the prediction is not an integer.
    pub fn predicted_top_five(n: usize) -> [Option<u128>; 5] {
        // Work in halves: 2 * value = k * 2^(n-5).
        [32u128, 16, 10, 8, 7].map(|twice| {
            let scaled = if n >= 5 {
                Some(twice << (n - 5))
            } else {
                let d = 1u128 << (5 - n);
                (twice % d == 0).then(|| twice / d)
            };
            scaled.filter(|s| s % 2 == 0).map(|s| s / 2)
        })
    }

    pub fn top(&self, k: usize) -> &[u128] {
        &self.values[..k.min(self.values.len())]
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "n={} classes={} distinct={}",
            self.n,
            self.total_classes,
            self.values.len()
        )
        .unwrap();
        writeln!(out, "con\tclasses").unwrap();
        for v in &self.values {
            writeln!(out, "{v}\t{}", self.counts[v]).unwrap();
        }
        let fmt = |xs: Vec<String>| xs.join(" ");
        let predicted = Self::predicted_top_five(self.n)
            .iter()
            .map(|p| p.map_or("n/a".to_string(), |v| v.to_string()))
            .collect();
        let observed = self.top(5).iter().map(|v| v.to_string()).collect();
        writeln!(out, "predicted top five: {}", fmt(predicted)).unwrap();
        writeln!(out, "observed top five: {}", fmt(observed)).unwrap();
        out
    }
}

pub fn spectrum(n: usize) -> Result<SpectrumReport> {
    spectrum_with(n, &RunOptions::default())
}

pub fn spectrum_with(n: usize, opts: &RunOptions) -> Result<SpectrumReport> {
    let lattices = level(n, opts)?;
    let cons: Vec<u128> = run_pool(opts.jobs, || lattices.par_iter().map(con_count).collect())?;
    let mut counts = BTreeMap::new();
    for c in cons {
        *counts.entry(c).or_insert(0usize) += 1;
    }
    Ok(SpectrumReport {
        n,
        values: counts.keys().rev().copied().collect(),
        counts,
        total_classes: lattices.len(),
    })
}

/// Per-class facts gathered by [`verify_theorem`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRecord {
    /// Canonical cover list.
    pub covers: String,
    pub con: u128,
    /// Verdict of the forbidden-subposet test.
    pub planar: bool,
    /// Verdict of the cover-graph test.
    pub graph_planar: bool,
    pub dismantlable: bool,
    pub many: bool,
    /// Structural criteria alone force few congruences.
    pub forced_few: bool,
}

impl ClassRecord {
    fn of(l: &Lattice) -> ClassRecord {
        let con = con_count(l);
        ClassRecord {
            covers: cover_certificate(l),
            con,
            planar: is_planar_kr(l).planar,
            graph_planar: is_planar_graph_oracle(l),
            dismantlable: is_dismantlable(l),
            many: exceeds_threshold(con, l.len()),
            forced_few: few_criteria(l).forces_few(),
        }
    }

    /// `covers<TAB>con<TAB>planar<TAB>dismantlable<TAB>many`.
    pub fn to_line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}",
            self.covers, self.con, self.planar, self.dismantlable, self.many
        )
    }
}

/// Outcome of checking that many congruences force planarity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub n: usize,
    pub classes_checked: usize,
    pub many_congruence_classes: usize,
    /// Classes with many congruences that are not planar.
    pub violations: Vec<String>,
    /// Planar classes that are not dismantlable.
    pub planar_not_dismantlable: Vec<String>,
    /// Classes whose structural few-congruence criteria hold although the
    /// class has many congruences.
    pub criteria_inconsistent: Vec<String>,
    /// Classes where the two planarity tests disagree.
    pub planarity_disagreements: Vec<String>,
    pub records: Vec<ClassRecord>,
}

impl TheoremReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "n={} classes={} many={} violations={}",
            self.n,
            self.classes_checked,
            self.many_congruence_classes,
            self.violations.len()
        )
        .unwrap();
        writeln!(
            out,
            "planar_not_dismantlable={} criteria_inconsistent={} planarity_disagreements={}",
            self.planar_not_dismantlable.len(),
            self.criteria_inconsistent.len(),
            self.planarity_disagreements.len()
        )
        .unwrap();
        for v in &self.violations {
            writeln!(out, "violation\t{v}").unwrap();
        }
        out
    }

    pub fn records_text(&self) -> String {
        let mut out = String::from("covers\tcon\tplanar\tdismantlable\tmany\n");
        for r in &self.records {
            out.push_str(&r.to_line());
            out.push('\n');
        }
        out
    }
}

pub fn verify_theorem(n: usize) -> Result<TheoremReport> {
    verify_theorem_with(n, &RunOptions::default())
}

pub fn verify_theorem_with(n: usize, opts: &RunOptions) -> Result<TheoremReport> {
    let lattices = level(n, opts)?;
    let records: Vec<ClassRecord> = run_pool(opts.jobs, || {
        lattices.par_iter().map(ClassRecord::of).collect()
    })?;
    Ok(theorem_report(n, records))
}

/// Aggregates per-class records in the order given.
pub fn theorem_report(n: usize, records: Vec<ClassRecord>) -> TheoremReport {
    let pick = |f: &dyn Fn(&ClassRecord) -> bool| -> Vec<String> {
        records
            .iter()
            .filter(|r| f(r))
            .map(|r| r.covers.clone())
            .collect()
    };
    TheoremReport {
        n,
        classes_checked: records.len(),
        many_congruence_classes: records.iter().filter(|r| r.many).count(),
        violations: pick(&|r| r.many && !r.planar),
        planar_not_dismantlable: pick(&|r| r.planar && !r.dismantlable),
        criteria_inconsistent: pick(&|r| r.forced_few && r.many),
        planarity_disagreements: pick(&|r| r.planar != r.graph_planar),
        records,
    }
}
