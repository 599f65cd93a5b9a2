use crate::{Error, Result, Scalar};

/// One candidate solution.
///
/// Scores (`rank`, `diversity`, `fitness`) are `None` until an environmental
/// selection assigns them, and are cleared whenever the decision vector changes.
#[derive(Debug, Clone, PartialEq)]
pub struct Individual<T> {
    decision: Vec<T>,
    objectives: Option<Vec<T>>,
    pub rank: Option<usize>,
    /// May be `+inf` (boundary solutions under crowding distance).
    pub diversity: Option<T>,
    pub fitness: Option<T>,
}

impl<T: Scalar> Individual<T> {
    pub fn new(decision: Vec<T>) -> Self {
        Self { decision, objectives: None, rank: None, diversity: None, fitness: None }
    }

    pub fn evaluated(decision: Vec<T>, objectives: Vec<T>) -> Self {
        Self { objectives: Some(objectives), ..Self::new(decision) }
    }

    pub fn decision(&self) -> &[T] {
        &self.decision
    }

    /// Replaces the decision vector and drops everything derived from it.
    pub fn set_decision(&mut self, decision: Vec<T>) {
        self.decision = decision;
        self.objectives = None;
        self.clear_scores();
    }

    pub fn objectives(&self) -> Option<&[T]> {
        self.objectives.as_deref()
    }

    /// Objectives, or a state error if the individual was never evaluated.
    pub fn try_objectives(&self) -> Result<&[T]> {
        self.objectives.as_deref().ok_or_else(|| Error::State("individual has not been evaluated".into()))
    }

    pub fn set_objectives(&mut self, objectives: Vec<T>) {
        self.objectives = Some(objectives);
    }

    pub fn is_evaluated(&self) -> bool {
        self.objectives.is_some()
    }

    pub fn clear_scores(&mut self) {
        self.rank = None;
        self.diversity = None;
        self.fitness = None;
    }
}

/// Ordered collection of individuals with a fixed survivor capacity.
#[derive(Debug, Clone, PartialEq)]
pub struct Population<T> {
    members: Vec<Individual<T>>,
    capacity: usize,
}

impl<T: Scalar> Population<T> {
    pub fn new(members: Vec<Individual<T>>, capacity: usize) -> Self {
        Self { members, capacity }
    }

    /// A population whose capacity equals its current size.
    pub fn from_members(members: Vec<Individual<T>>) -> Self {
        let capacity = members.len();
        Self { members, capacity }
    }

    pub fn members(&self) -> &[Individual<T>] {
        &self.members
    }

    pub fn members_mut(&mut self) -> &mut [Individual<T>] {
        &mut self.members
    }

    pub fn into_members(self) -> Vec<Individual<T>> {
        self.members
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Individual<T>> {
        self.members.iter()
    }

    /// Objective vectors of all members; fails if any member is unevaluated.
    pub fn objective_rows(&self) -> Result<Vec<&[T]>> {
        objective_rows(&self.members)
    }

    pub fn decision_rows(&self) -> Vec<&[T]> {
        self.members.iter().map(|m| m.decision()).collect()
    }
}

impl<'a, T> IntoIterator for &'a Population<T> {
    type Item = &'a Individual<T>;
    type IntoIter = std::slice::Iter<'a, Individual<T>>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

pub(crate) fn objective_rows<T: Scalar>(members: &[Individual<T>]) -> Result<Vec<&[T]>> {
    members.iter().map(|m| m.try_objectives()).collect()
}
