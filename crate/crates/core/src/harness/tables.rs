use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::io::RunRecord;
use crate::indicators::IndicatorKind;
use crate::stats::{mean_std, wilcoxon_rank_sum, MIN_SAMPLE};
use crate::{AlgorithmKind, ComparisonVerdict, Error, ProblemKind, Result, Verdict};

/// A value with four decimals (round-half-even on the exact binary value).
pub fn format_value(v: f64) -> String {
    format!("{v:.4}")
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CellSummary {
    pub mean: f64,
    /// `None` for single-run cells.
    pub std: Option<f64>,
    pub runs: usize,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub plus: usize,
    pub minus: usize,
    pub approx: usize,
}

impl Tally {
    fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Plus => self.plus += 1,
            Verdict::Minus => self.minus += 1,
            Verdict::Approx => self.approx += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.plus + self.minus + self.approx
    }
}

/// Per-indicator table: rows are problems, columns algorithms. Niching
/// variants are compared against their baselines.
#[derive(Debug, Clone)]
pub struct ComparisonTable {
    pub indicator: IndicatorKind,
    pub problems: Vec<ProblemKind>,
    pub algorithms: Vec<AlgorithmKind>,
    /// `cells[p][a]`.
    pub cells: Vec<Vec<CellSummary>>,
    /// `verdicts[p][a]`: variant vs baseline; `None` for baselines, unpaired
    /// columns and samples too small for the test.
    pub verdicts: Vec<Vec<Option<ComparisonVerdict>>>,
    /// Per column; `None` where the column has no baseline in the table.
    pub tallies: Vec<Option<Tally>>,
}

#[derive(Debug, Clone)]
pub struct ComparisonTables {
    pub igdx: ComparisonTable,
    pub igd_plus: ComparisonTable,
}

type Samples = BTreeMap<(ProblemKind, AlgorithmKind), Vec<(usize, f64, f64)>>;

fn group(records: &[RunRecord]) -> Result<Samples> {
    let mut samples = Samples::new();
    for r in records {
        let p: ProblemKind =
            r.problem.parse().map_err(|_| Error::Config(format!("unknown problem '{}' in results", r.problem)))?;
        let a: AlgorithmKind = r
            .algorithm
            .parse()
            .map_err(|_| Error::Config(format!("unknown algorithm '{}' in results", r.algorithm)))?;
        samples.entry((p, a)).or_default().push((r.run, r.igdx, r.igd_plus));
    }
    for v in samples.values_mut() {
        v.sort_by_key(|s| s.0);
    }
    Ok(samples)
}

impl ComparisonTables {
    /// Builds both tables over the given rows and columns; every cell needs
    /// at least one run.
    pub fn from_records(records: &[RunRecord], problems: &[ProblemKind], algorithms: &[AlgorithmKind]) -> Result<Self> {
        let samples = group(records)?;
        let missing: Vec<(String, String)> = problems
            .iter()
            .flat_map(|&p| algorithms.iter().map(move |&a| (p, a)))
            .filter(|key| !samples.contains_key(key))
            .map(|(p, a)| (p.id().to_string(), a.id().to_string()))
            .collect();
        if !missing.is_empty() {
            return Err(Error::IncompleteData(missing));
        }
        let build = |indicator: IndicatorKind| -> Result<ComparisonTable> {
            let values = |p: ProblemKind, a: AlgorithmKind| -> Vec<f64> {
                samples[&(p, a)].iter().map(|s| if indicator == IndicatorKind::Igdx { s.1 } else { s.2 }).collect()
            };
            let mut cells = Vec::new();
            let mut verdicts = Vec::new();
            let mut tallies: Vec<Option<Tally>> = algorithms
                .iter()
                .map(|a| a.baseline().filter(|b| algorithms.contains(b)).map(|_| Tally::default()))
                .collect();
            for &p in problems {
                let mut row = Vec::new();
                let mut vrow = Vec::new();
                for (ai, &a) in algorithms.iter().enumerate() {
                    let v = values(p, a);
                    let summary = if v.len() >= 2 {
                        let (mean, std) = mean_std(&v)?;
                        CellSummary { mean, std: Some(std), runs: v.len() }
                    } else {
                        CellSummary { mean: v[0], std: None, runs: 1 }
                    };
                    row.push(summary);
                    let verdict = match (a.baseline(), tallies[ai].is_some()) {
                        (Some(b), true) => {
                            let base = values(p, b);
                            if v.len() >= MIN_SAMPLE && base.len() >= MIN_SAMPLE {
                                Some(wilcoxon_rank_sum(&v, &base)?)
                            } else {
                                None
                            }
                        }
                        _ => None,
                    };
                    if let (Some(t), Some(c)) = (tallies[ai].as_mut(), verdict) {
                        t.add(c.symbol);
                    }
                    vrow.push(verdict);
                }
                cells.push(row);
                verdicts.push(vrow);
            }
            Ok(ComparisonTable {
                indicator,
                problems: problems.to_vec(),
                algorithms: algorithms.to_vec(),
                cells,
                verdicts,
                tallies,
            })
        };
        Ok(Self { igdx: build(IndicatorKind::Igdx)?, igd_plus: build(IndicatorKind::IgdPlus)? })
    }

    pub fn render(&self) -> String {
        format!("{}\n{}", self.igdx.render(), self.igd_plus.render())
    }
}

impl ComparisonTable {
    /// Whether cell `(p, a)` has the smaller mean within its baseline/variant pair.
    fn is_better(&self, p: usize, a: usize) -> bool {
        let kind = self.algorithms[a];
        let partner = kind.baseline().or_else(|| AlgorithmKind::ALL.into_iter().find(|v| v.baseline() == Some(kind)));
        match partner.and_then(|q| self.algorithms.iter().position(|&x| x == q)) {
            Some(q) => self.cells[p][a].mean < self.cells[p][q].mean,
            None => false,
        }
    }

    /// Markdown table: "mean ± std" cells, better of each pair in bold,
    /// verdict symbols on variant cells, and a `+/-/≈` tally row.
    pub fn render(&self) -> String {
        let title = match self.indicator {
            IndicatorKind::Igdx => "IGDX",
            IndicatorKind::IgdPlus => "IGD+",
        };
        let mut s = format!("### {title}\n\n| Problem |");
        for a in &self.algorithms {
            let _ = write!(s, " {} |", a.display_name());
        }
        s.push_str("\n|---|");
        s.push_str(&"---|".repeat(self.algorithms.len()));
        s.push('\n');
        for (p, problem) in self.problems.iter().enumerate() {
            let _ = write!(s, "| {} |", problem.display_name());
            for a in 0..self.algorithms.len() {
                let c = &self.cells[p][a];
                let mut text = match c.std {
                    Some(std) => format!("{} ± {}", format_value(c.mean), format_value(std)),
                    None => format_value(c.mean),
                };
                if self.is_better(p, a) {
                    text = format!("**{text}**");
                }
                if let Some(v) = self.verdicts[p][a] {
                    text = format!("{text} {}", v.symbol);
                }
                let _ = write!(s, " {text} |");
            }
            s.push('\n');
        }
        s.push_str("| +/-/≈ |");
        for t in &self.tallies {
            match t {
                Some(t) => {
                    let _ = write!(s, " {}/{}/{} |", t.plus, t.minus, t.approx);
                }
                None => s.push_str(" |"),
            }
        }
        s.push('\n');
        s
    }
}

/// Renders both tables over the problems and algorithms present in
/// `records`, in registry order; any absent pair is an incomplete-data error.
pub fn render_tables(records: &[RunRecord]) -> Result<String> {
    let samples = group(records)?;
    let problems: Vec<ProblemKind> =
        ProblemKind::ALL.into_iter().filter(|p| samples.keys().any(|k| k.0 == *p)).collect();
    let algorithms: Vec<AlgorithmKind> =
        AlgorithmKind::ALL.into_iter().filter(|a| samples.keys().any(|k| k.1 == *a)).collect();
    Ok(ComparisonTables::from_records(records, &problems, &algorithms)?.render())
}
