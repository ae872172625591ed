//! Exact spectra of small graphs: which shifts `k` admit a `k`-shifted-antimagic
//! labeling.
//!
//! Outside a finite window every shift is feasible, either by shifting an
//! SDDS labeling far enough up or by negating. Inside it each shift is
//! decided by exhaustive search.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::constructors::{construct_forest_sdds, construct_odd_degree};
use crate::families::Family;
use crate::graph::Graph;
use crate::labeling::{
    is_strongly_antimagic, mirror_base, sdds_shift_threshold, EdgeLabeling, Verdict,
};
use crate::search::{find_sdds, find_shifted, find_strong, SearchError, DEFAULT_BUDGET};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("no SDDS labeling found, so no finite window can be proved")]
    NoSddsFound,
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("bad parameters: {0}")]
    BadParameters(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Feasible(EdgeLabeling),
    Infeasible,
}

impl Decision {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Decision::Feasible(_))
    }
}

pub fn decide(g: &Graph, k: i64) -> Result<Decision, SpectrumError> {
    decide_with_budget(g, k, DEFAULT_BUDGET)
}

pub fn decide_with_budget(g: &Graph, k: i64, budget: usize) -> Result<Decision, SpectrumError> {
    Ok(match find_shifted(g, k, budget)? {
        Some(f) => Decision::Feasible(f),
        None => Decision::Infeasible,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SddsSource {
    Forest,
    OddDegree,
    Search,
}

/// Why every shift outside a window is feasible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    /// A strongly antimagic labeling; shifts by `k >= 0` stay strongly
    /// antimagic.
    Strong(EdgeLabeling),
    /// An SDDS labeling; shifts by `k >= hi` are antimagic.
    Sdds { labeling: EdgeLabeling, source: SddsSource },
}

/// Every `k > hi` and, by negation, every `k < lo` is feasible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
    pub justification: Justification,
}

impl Window {
    pub fn contains(&self, k: i64) -> bool {
        self.lo <= k && k <= self.hi
    }

    /// A certificate for a shift outside the window.
    pub fn certificate(&self, k: i64) -> Option<EdgeLabeling> {
        let base = match &self.justification {
            Justification::Strong(f) => f,
            Justification::Sdds { labeling, .. } => labeling,
        };
        if k > self.hi {
            Some(base.shifted(k))
        } else if k < self.lo {
            Some(base.shifted(mirror_base(base.len(), k)).negated())
        } else {
            None
        }
    }
}

pub fn finite_window(g: &Graph) -> Result<Window, SpectrumError> {
    finite_window_with_budget(g, DEFAULT_BUDGET)
}

/// `[-m, -1]` when a strongly antimagic labeling turns up, by search or
/// because the SDDS labeling already is one (always so on regular graphs),
/// else the SDDS window from [`sdds_window_with_budget`].
pub fn finite_window_with_budget(g: &Graph, budget: usize) -> Result<Window, SpectrumError> {
    let m = g.edge_count();
    if m == 0 {
        return Err(SpectrumError::EmptyGraph);
    }
    if m <= budget {
        if let Some(f) = find_strong(g, budget)? {
            return Ok(Window {
                lo: -(m as i64),
                hi: -1,
                justification: Justification::Strong(f),
            });
        }
    }
    let window = sdds_window_with_budget(g, budget)?;
    if let Justification::Sdds { labeling, .. } = &window.justification {
        if is_strongly_antimagic(g, labeling) == Ok(Verdict::Accept) {
            return Ok(Window {
                lo: -(m as i64),
                hi: -1,
                justification: Justification::Strong(labeling.clone()),
            });
        }
    }
    Ok(window)
}

pub fn sdds_window(g: &Graph) -> Result<Window, SpectrumError> {
    sdds_window_with_budget(g, DEFAULT_BUDGET)
}

/// `[-(t + m + 1), t]` with `t = (m - 1)(Δ - 1)`, backed by an SDDS labeling
/// from the forest or odd-degree constructor or, failing those, from search.
pub fn sdds_window_with_budget(g: &Graph, budget: usize) -> Result<Window, SpectrumError> {
    let m = g.edge_count();
    if m == 0 {
        return Err(SpectrumError::EmptyGraph);
    }
    let (labeling, source) = if let Ok(f) = construct_forest_sdds(g) {
        (f, SddsSource::Forest)
    } else if let Ok(f) = construct_odd_degree(g) {
        (f, SddsSource::OddDegree)
    } else if m <= budget {
        match find_sdds(g, budget)? {
            Some(f) => (f, SddsSource::Search),
            None => return Err(SpectrumError::NoSddsFound),
        }
    } else {
        return Err(SpectrumError::NoSddsFound);
    };
    let t = sdds_shift_threshold(g).expect("graph has edges");
    Ok(Window {
        lo: mirror_base(m, t),
        hi: t,
        justification: Justification::Sdds { labeling, source },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Feasible,
    Infeasible,
    /// Feasible because the shift lies outside the window.
    Lemma,
    /// Not decided: no window and outside the searched range, or over budget.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KVerdict {
    pub k: i64,
    pub status: Status,
    #[serde(serialize_with = "labels_or_null")]
    pub certificate: Option<EdgeLabeling>,
}

fn labels_or_null<S: serde::Serializer>(
    f: &Option<EdgeLabeling>,
    s: S,
) -> Result<S::Ok, S::Error> {
    match f {
        Some(f) => s.collect_seq(f.labels()),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub graph: Graph,
    #[serde(serialize_with = "window_pair")]
    pub window: Option<Window>,
    pub excluded: Vec<i64>,
    pub verdicts: Vec<KVerdict>,
}

fn window_pair<S: serde::Serializer>(w: &Option<Window>, s: S) -> Result<S::Ok, S::Error> {
    match w {
        Some(w) => s.collect_seq([w.lo, w.hi]),
        None => s.serialize_none(),
    }
}

impl SpectrumReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn verdict(&self, k: i64) -> Option<&KVerdict> {
        self.verdicts.iter().find(|v| v.k == k)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumOptions {
    pub budget: usize,
    /// Shifts to report besides the window.
    pub range: Option<(i64, i64)>,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        SpectrumOptions {
            budget: DEFAULT_BUDGET,
            range: None,
        }
    }
}

pub fn spectrum(g: &Graph) -> Result<SpectrumReport, SpectrumError> {
    spectrum_with(g, &SpectrumOptions::default())
}

/// Decides every shift in the window, plus the caller's range if given.
///
/// Shifts below their mirror `-(m + k + 1)` reuse the mirror's verdict. When
/// no window can be proved, only the caller's range is searched and nothing
/// is claimed outside it.
pub fn spectrum_with(g: &Graph, opts: &SpectrumOptions) -> Result<SpectrumReport, SpectrumError> {
    let m = g.edge_count();
    let window = match finite_window_with_budget(g, opts.budget) {
        Ok(w) => Some(w),
        Err(SpectrumError::NoSddsFound) if opts.range.is_some() => None,
        Err(SpectrumError::Search(_)) if opts.range.is_some() => None,
        Err(e) => return Err(e),
    };

    let mut ks: BTreeSet<i64> = BTreeSet::new();
    if let Some(w) = &window {
        ks.extend(w.lo..=w.hi);
    }
    if let Some((lo, hi)) = opts.range {
        if lo > hi {
            return Err(SpectrumError::BadParameters(format!("empty range {lo}:{hi}")));
        }
        ks.extend(lo..=hi);
    }
    if window.is_some() && opts.range.is_none() && m > opts.budget {
        return Err(SearchError::BudgetExceeded { m, budget: opts.budget }.into());
    }

    let outside = |k: i64| window.as_ref().is_some_and(|w| !w.contains(k));
    let to_search: BTreeSet<i64> = ks
        .iter()
        .copied()
        .filter(|&k| !outside(k))
        .map(|k| k.max(mirror_base(m, k)))
        .collect();
    let searched: BTreeMap<i64, Option<Decision>> = to_search
        .into_par_iter()
        .map(|k| match decide_with_budget(g, k, opts.budget) {
            Ok(d) => Ok((k, Some(d))),
            Err(SpectrumError::Search(_)) if opts.range.is_some() => Ok((k, None)),
            Err(e) => Err(e),
        })
        .collect::<Result<_, _>>()?;

    let mut verdicts = Vec::with_capacity(ks.len());
    for k in ks {
        let verdict = if outside(k) {
            KVerdict {
                k,
                status: Status::Lemma,
                certificate: window.as_ref().and_then(|w| w.certificate(k)),
            }
        } else {
            let mirror = mirror_base(m, k);
            let decision = &searched[&k.max(mirror)];
            match decision {
                None => KVerdict {
                    k,
                    status: Status::Unknown,
                    certificate: None,
                },
                Some(Decision::Infeasible) => KVerdict {
                    k,
                    status: Status::Infeasible,
                    certificate: None,
                },
                Some(Decision::Feasible(f)) => KVerdict {
                    k,
                    status: Status::Feasible,
                    certificate: Some(if k >= mirror { f.clone() } else { f.negated() }),
                },
            }
        };
        verdicts.push(verdict);
    }
    let excluded = verdicts
        .iter()
        .filter(|v| v.status == Status::Infeasible)
        .map(|v| v.k)
        .collect();
    Ok(SpectrumReport {
        graph: g.clone(),
        window,
        excluded,
        verdicts,
    })
}

/// The set of shifts at which a graph is not shifted-antimagic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExcludedSet {
    All,
    Finite(BTreeSet<i64>),
}

impl ExcludedSet {
    pub fn contains(&self, k: i64) -> bool {
        match self {
            ExcludedSet::All => true,
            ExcludedSet::Finite(s) => s.contains(&k),
        }
    }
}

/// Excluded shifts of a named family, in closed form.
pub fn closed_form_spectrum(family: Family) -> Result<ExcludedSet, SpectrumError> {
    let set = |ks: &[i64]| Ok(ExcludedSet::Finite(ks.iter().copied().collect()));
    match family {
        Family::Path { n } => match n {
            0 | 1 => Err(SpectrumError::BadParameters(format!("P{n} has no edges"))),
            2 => Ok(ExcludedSet::All),
            3 => set(&[-2, -1]),
            4 => set(&[-2]),
            5 => set(&[-3, -2]),
            _ => set(&[]),
        },
        Family::Star { n } => {
            if n < 2 {
                return Err(SpectrumError::BadParameters(format!("S{n} needs two leaves")));
            }
            let n = n as i64;
            if n % 2 == 0 {
                set(&[-n / 2 - 1, -n / 2])
            } else {
                set(&[-(n + 1) / 2])
            }
        }
        Family::DoubleStar { a, b } => {
            if a == 0 || b == 0 {
                return Err(SpectrumError::BadParameters(format!("S({a},{b})")));
            }
            let (a, b) = (a.max(b), a.min(b));
            match (a, b) {
                (2, 1) => set(&[-3, -2]),
                (_, 1) if a % 2 == 1 => set(&[-(a as i64 + 3) / 2]),
                _ => set(&[]),
            }
        }
        Family::Cp3 { c } => {
            if c == 0 {
                return Err(SpectrumError::BadParameters("cP3 needs c >= 1".into()));
            }
            let c = c as i64;
            Ok(ExcludedSet::Finite((-(5 * c / 2)..c / 2).collect()))
        }
        Family::TwoP4 | Family::TwoS3 => set(&[-5, -2]),
        Family::P5Prime => set(&[-3]),
    }
}
