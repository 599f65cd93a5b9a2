use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::RunResult;
use crate::base::individual_rows;
use crate::dominance::sort_objectives;
use crate::{Individual, Result, Scalar};

/// One row of the results CSV.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub problem: String,
    pub algorithm: String,
    pub run: usize,
    pub seed: u64,
    pub igdx: f64,
    pub igd_plus: f64,
    pub evaluations: usize,
}

impl From<&RunResult> for RunRecord {
    fn from(r: &RunResult) -> Self {
        Self {
            problem: r.problem.id().to_string(),
            algorithm: r.algorithm.id().to_string(),
            run: r.run_index,
            seed: r.seed,
            igdx: r.igdx,
            igd_plus: r.igd_plus,
            evaluations: r.evaluations_used,
        }
    }
}

pub fn write_results(path: &Path, records: &[RunRecord]) -> Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_path(path)?;
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_results(path: &Path) -> Result<Vec<RunRecord>> {
    let mut r = csv::Reader::from_path(path)?;
    r.deserialize().map(|row| row.map_err(Into::into)).collect()
}

/// Writes the non-dominated members with header `x1..xD,f1..fM` and 17
/// significant digits per value.
pub fn dump_members<T: Scalar>(members: &[Individual<T>], path: &Path) -> Result<()> {
    let rows = individual_rows(members)?;
    let front: Vec<usize> =
        if rows.is_empty() { Vec::new() } else { sort_objectives(&rows)?.into_fronts().swap_remove(0) };
    let d = members.first().map_or(0, |m| m.decision().len());
    let m = rows.first().map_or(0, |r| r.len());
    let mut out = BufWriter::new(File::create(path)?);
    let header: Vec<String> = (1..=d).map(|i| format!("x{i}")).chain((1..=m).map(|i| format!("f{i}"))).collect();
    writeln!(out, "{}", header.join(","))?;
    for i in front {
        let line: Vec<String> =
            members[i].decision().iter().chain(rows[i]).map(|v| format!("{:.16e}", v.as_f64())).collect();
        writeln!(out, "{}", line.join(","))?;
    }
    out.flush()?;
    Ok(())
}

pub fn dump_population(result: &RunResult, path: &Path) -> Result<()> {
    dump_members(result.final_population.members(), path)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn read_rows(path: &Path) -> Vec<Vec<f64>> {
        let text = std::fs::read_to_string(path).unwrap();
        text.lines().skip(1).map(|l| l.split(',').map(|v| v.parse().unwrap()).collect()).collect()
    }

    #[test]
    fn single_member_dump() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("p.csv");
        let m = Individual::evaluated(vec![0.1, 1.0 / 3.0], vec![std::f64::consts::PI, 2.0]);
        dump_members(&[m], &path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), 2);
        assert_eq!(text.lines().next().unwrap(), "x1,x2,f1,f2");
        assert_eq!(read_rows(&path), vec![vec![0.1, 1.0 / 3.0, std::f64::consts::PI, 2.0]]);
    }

    #[test]
    fn dominated_members_are_dropped() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("p.csv");
        let a = Individual::evaluated(vec![0.0], vec![0.0, 0.0]);
        let b = Individual::evaluated(vec![1.0], vec![1.0, 1.0]);
        dump_members(&[b, a], &path).unwrap();
        assert_eq!(read_rows(&path), vec![vec![0.0, 0.0, 0.0]]);
    }

    #[test]
    fn results_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("r.csv");
        let rec = RunRecord {
            problem: "mmf1".into(),
            algorithm: "nsga2".into(),
            run: 0,
            seed: 7,
            igdx: 0.123456789012345,
            igd_plus: 1e-7,
            evaluations: 2000,
        };
        write_results(&path, std::slice::from_ref(&rec)).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.starts_with("problem,algorithm,run,seed,igdx,igd_plus,evaluations\n"));
        assert!(!text.contains('\r'));
        assert_eq!(read_results(&path).unwrap(), vec![rec]);
    }
}
