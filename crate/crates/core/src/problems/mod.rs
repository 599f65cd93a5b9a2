//! Multi-modal benchmark problems: SYM-PART (simple), Omni-test (D = 3) and
//! MMF1-MMF8, with deterministic samplers for their Pareto sets and fronts.

mod functions;

use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use crate::{Error, Result, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProblemKind {
    OmniTest,
    SymPart,
    Mmf1,
    Mmf2,
    Mmf3,
    Mmf4,
    Mmf5,
    Mmf6,
    Mmf7,
    Mmf8,
}

impl ProblemKind {
    /// Registry order, matching the rows of the comparison tables.
    pub const ALL: [ProblemKind; 10] = [
        ProblemKind::OmniTest,
        ProblemKind::SymPart,
        ProblemKind::Mmf1,
        ProblemKind::Mmf2,
        ProblemKind::Mmf3,
        ProblemKind::Mmf4,
        ProblemKind::Mmf5,
        ProblemKind::Mmf6,
        ProblemKind::Mmf7,
        ProblemKind::Mmf8,
    ];

    pub fn id(self) -> &'static str {
        match self {
            ProblemKind::OmniTest => "omni_test",
            ProblemKind::SymPart => "sym_part",
            ProblemKind::Mmf1 => "mmf1",
            ProblemKind::Mmf2 => "mmf2",
            ProblemKind::Mmf3 => "mmf3",
            ProblemKind::Mmf4 => "mmf4",
            ProblemKind::Mmf5 => "mmf5",
            ProblemKind::Mmf6 => "mmf6",
            ProblemKind::Mmf7 => "mmf7",
            ProblemKind::Mmf8 => "mmf8",
        }
    }

    pub fn display_name(self) -> &'static str {
        match self {
            ProblemKind::OmniTest => "Omni-test",
            ProblemKind::SymPart => "SYM-PART",
            ProblemKind::Mmf1 => "MMF1",
            ProblemKind::Mmf2 => "MMF2",
            ProblemKind::Mmf3 => "MMF3",
            ProblemKind::Mmf4 => "MMF4",
            ProblemKind::Mmf5 => "MMF5",
            ProblemKind::Mmf6 => "MMF6",
            ProblemKind::Mmf7 => "MMF7",
            ProblemKind::Mmf8 => "MMF8",
        }
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for ProblemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace(['-', ' '], "_");
        let norm = match norm.as_str() {
            "sympart" => "sym_part",
            "omnitest" | "omni" => "omni_test",
            other => other,
        };
        ProblemKind::ALL.into_iter().find(|k| k.id() == norm).ok_or_else(|| Error::Lookup(format!("problem '{s}'")))
    }
}

/// A box-constrained bi-objective benchmark problem.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemSpec<T> {
    kind: ProblemKind,
    lower: Vec<T>,
    upper: Vec<T>,
}

/// Looks a problem up by identifier (`sym_part`, `omni_test`, `mmf1`..`mmf8`;
/// display names such as `SYM-PART` are accepted too).
pub fn get_problem<T: Scalar>(name: &str) -> Result<ProblemSpec<T>> {
    Ok(ProblemSpec::new(name.parse()?))
}

impl<T: Scalar> ProblemSpec<T> {
    pub fn new(kind: ProblemKind) -> Self {
        let (lo, hi) = functions::bounds(kind);
        Self { kind, lower: lo.into_iter().map(T::lit).collect(), upper: hi.into_iter().map(T::lit).collect() }
    }

    pub fn kind(&self) -> ProblemKind {
        self.kind
    }

    pub fn name(&self) -> &'static str {
        self.kind.id()
    }

    pub fn dimension(&self) -> usize {
        functions::dimension(self.kind)
    }

    pub fn objective_count(&self) -> usize {
        2
    }

    pub fn lower(&self) -> &[T] {
        &self.lower
    }

    pub fn upper(&self) -> &[T] {
        &self.upper
    }

    /// Number of disjoint Pareto subsets that all map onto the full front.
    pub fn equivalent_subset_count(&self) -> usize {
        functions::subset_count(self.kind)
    }

    pub fn evaluate(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.dimension() {
            return Err(Error::dim(self.dimension(), x.len()));
        }
        Ok(functions::evaluate(self.kind, x))
    }

    /// Pareto-optimal decision vector with parameter `t` in `[0, 1]` on subset `s`.
    pub fn subset_point(&self, subset: usize, t: T) -> Vec<T> {
        assert!(subset < self.equivalent_subset_count(), "subset {subset} out of range");
        functions::subset_point(self.kind, subset, t)
    }

    /// Objective vector of `subset_point(s, t)`, for any `s`.
    pub fn set_image(&self, t: T) -> Vec<T> {
        functions::set_image(self.kind, t)
    }

    /// `count` points of one subset at the cell midpoints `t = (j + 1/2) / count`.
    pub fn subset_sample(&self, subset: usize, count: usize) -> Vec<Vec<T>> {
        midpoints::<T>(count).map(|t| self.subset_point(subset, t)).collect()
    }

    /// `n` decision vectors spread evenly over all subsets; the first
    /// `n mod subsets` subsets receive one extra point.
    pub fn pareto_set_sample(&self, n: usize) -> Vec<Vec<T>> {
        let subsets = self.equivalent_subset_count();
        (0..subsets).flat_map(|s| self.subset_sample(s, n / subsets + usize::from(s < n % subsets))).collect()
    }

    /// `n` points along the Pareto front at evenly spaced parameter midpoints.
    pub fn pareto_front_sample(&self, n: usize) -> Vec<Vec<T>> {
        midpoints::<T>(n).map(|u| functions::front_curve(self.kind, u)).collect()
    }

    /// IGDX and IGD+ reference sets of `n` points each.
    pub fn sample_reference_sets(&self, n: usize) -> Result<(Vec<Vec<T>>, Vec<Vec<T>>)> {
        let subsets = self.equivalent_subset_count();
        if n < subsets {
            return Err(Error::Domain(format!(
                "reference size {n} below the {subsets} Pareto subsets of {}",
                self.name()
            )));
        }
        Ok((self.pareto_set_sample(n), self.pareto_front_sample(n)))
    }

    /// Writes `<name>_pareto_set.csv` and `<name>_pareto_front.csv` into `dir`.
    pub fn export_reference_sets(&self, n: usize, dir: &Path) -> Result<()> {
        let (set, front) = self.sample_reference_sets(n)?;
        std::fs::create_dir_all(dir)?;
        write_points_csv(&dir.join(format!("{}_pareto_set.csv", self.name())), "x", &set)?;
        write_points_csv(&dir.join(format!("{}_pareto_front.csv", self.name())), "f", &front)?;
        Ok(())
    }
}

fn midpoints<T: Scalar>(count: usize) -> impl Iterator<Item = T> {
    let denom = count as f64;
    (0..count).map(move |j| T::lit((j as f64 + 0.5) / denom))
}

/// Comma-separated points with a `<prefix>1..<prefix>D` header and LF endings.
pub fn write_points_csv<T: Scalar>(path: &Path, prefix: &str, points: &[Vec<T>]) -> Result<()> {
    let width = points.first().map_or(0, |p| p.len());
    let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
    let header: Vec<String> = (1..=width).map(|i| format!("{prefix}{i}")).collect();
    writeln!(out, "{}", header.join(","))?;
    for p in points {
        let row: Vec<String> = p.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", row.join(","))?;
    }
    out.flush()?;
    Ok(())
}
