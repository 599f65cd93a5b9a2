use crate::base::{Individual, RandomStream};
use crate::{Error, Result, Scalar};

/// Preference used by binary tournaments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TournamentKey {
    /// Lower rank wins, then larger diversity (NSGA-II).
    RankThenDiversity,
    /// Lower fitness wins (SPEA2).
    Fitness,
}

impl TournamentKey {
    fn prefers<T: Scalar>(self, a: &Individual<T>, b: &Individual<T>) -> Result<bool> {
        let missing = |what: &str| Error::State(format!("tournament needs {what}"));
        match self {
            TournamentKey::RankThenDiversity => {
                let (ra, rb) = (a.rank.ok_or_else(|| missing("rank"))?, b.rank.ok_or_else(|| missing("rank"))?);
                let da = a.diversity.ok_or_else(|| missing("diversity"))?;
                let db = b.diversity.ok_or_else(|| missing("diversity"))?;
                Ok(ra < rb || (ra == rb && da > db))
            }
            TournamentKey::Fitness => {
                let fa = a.fitness.ok_or_else(|| missing("fitness"))?;
                let fb = b.fitness.ok_or_else(|| missing("fitness"))?;
                Ok(fa < fb)
            }
        }
    }
}

/// Draws two distinct members uniformly and returns the index of the
/// preferred one; on equal keys the first drawn wins.
pub fn binary_tournament<T: Scalar>(
    members: &[Individual<T>],
    rng: &mut RandomStream,
    key: TournamentKey,
) -> Result<usize> {
    let n = members.len();
    if n < 2 {
        return Err(Error::Domain(format!("tournament needs at least 2 members, got {n}")));
    }
    let first = rng.below(n);
    let mut second = rng.below(n - 1);
    if second >= first {
        second += 1;
    }
    if key.prefers(&members[second], &members[first])? {
        Ok(second)
    } else {
        Ok(first)
    }
}
