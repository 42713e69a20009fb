//! Rewriting rules that lift a point-set gin to a curve gin, genus
//! bookkeeping, and a search for the fewest forced rewritings.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::monomial::{minimalize, Monomial, MonomialIdeal, Side};
use crate::{Error, Result};

/// Rule 1: `x0^e -> x0^e (x0, x1, x2)`. Rule 2: `x0^e x1^f -> x0^e x1^f (x1, x2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RewriteRule {
    One,
    Two,
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RewriteRule::One => write!(f, "rule-1"),
            RewriteRule::Two => write!(f, "rule-2"),
        }
    }
}

/// Which generator shapes the rules accept.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum RuleScope {
    /// Targets must be free of `x2`: `x0^e` and `x0^e x1^f`.
    Strict,
    /// Targets may carry a power of the lift variable `x2`, which the
    /// children inherit.
    #[default]
    ModuloLift,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LogEntry {
    pub rule: RewriteRule,
    pub target: Monomial,
    pub degree: u32,
}

/// Current minimal generators plus the rewriting history.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorTree {
    pub leaves: MonomialIdeal,
    pub applied: Vec<LogEntry>,
}

impl GeneratorTree {
    pub fn new(start: MonomialIdeal) -> Result<Self> {
        if start.num_vars() != 3 {
            return Err(Error::precondition(format!(
                "rewriting works in three variables, got {}",
                start.num_vars()
            )));
        }
        Ok(Self {
            leaves: start,
            applied: vec![],
        })
    }
}

fn children(target: &Monomial, rule: RewriteRule, scope: RuleScope) -> Option<Vec<Monomial>> {
    let [e, f, c] = <[u32; 3]>::try_from(target.exps()).ok()?;
    if c > 0 && scope == RuleScope::Strict {
        return None;
    }
    let m = |a, b, c| Monomial::new(vec![a, b, c]);
    match rule {
        RewriteRule::One if f == 0 => Some(vec![m(e + 1, 0, c), m(e, 1, c), m(e, 0, c + 1)]),
        RewriteRule::Two if f >= 1 => Some(vec![m(e, f + 1, c), m(e, f, c + 1)]),
        _ => None,
    }
}

/// The rule that applies to a generator's shape, if any.
pub fn rule_for(target: &Monomial, scope: RuleScope) -> Option<RewriteRule> {
    [RewriteRule::One, RewriteRule::Two]
        .into_iter()
        .find(|&r| children(target, r, scope).is_some())
}

pub fn apply_rule(
    t: &GeneratorTree,
    target: &Monomial,
    rule: RewriteRule,
    scope: RuleScope,
) -> Result<GeneratorTree> {
    let inapplicable = || Error::InapplicableRule {
        rule: rule.to_string(),
        target: target.to_string(),
    };
    if !t.leaves.generators().contains(target) {
        return Err(inapplicable());
    }
    let kids = children(target, rule, scope).ok_or_else(inapplicable)?;
    let gens = t
        .leaves
        .generators()
        .iter()
        .filter(|g| *g != target)
        .cloned()
        .chain(kids);
    let mut applied = t.applied.clone();
    applied.push(LogEntry {
        rule,
        target: target.clone(),
        degree: target.degree(),
    });
    Ok(GeneratorTree {
        leaves: minimalize(3, gens)?,
        applied,
    })
}

/// Start bound minus one for every logged rewriting below `degree_cap`.
pub fn bound_after(t: &GeneratorTree, start_bound: i64, degree_cap: u32) -> i64 {
    start_bound - t.applied.iter().filter(|e| e.degree < degree_cap).count() as i64
}

/// Upper limit on the ideal-side Hilbert count in one degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Cap {
    /// Cap when no cubic surface contains the curve; `None` means unconstrained.
    pub base: Option<u64>,
    /// Cap once a cubic is present; `None` falls back to `base`.
    pub with_cubic: Option<u64>,
}

/// Bézout-type caps on ideal-side counts of the curve ideal in `x0..x3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BezoutConstraints {
    pub caps: BTreeMap<u32, Cap>,
}

/// Number of degree-`d` multiples of one cubic in four variables.
fn cubic_multiples(d: u32) -> u64 {
    let cubic = minimalize(4, [Monomial::new(vec![3, 0, 0, 0])]).expect("four variables");
    cubic.hilbert_count(d, Side::Ideal)
}

impl Default for BezoutConstraints {
    /// No quadrics, at most one cubic, and at most one quartic unless a cubic
    /// is present (then only its multiples).
    fn default() -> Self {
        let mut caps = BTreeMap::new();
        caps.insert(
            2,
            Cap {
                base: Some(0),
                with_cubic: None,
            },
        );
        caps.insert(
            3,
            Cap {
                base: Some(1),
                with_cubic: None,
            },
        );
        caps.insert(
            4,
            Cap {
                base: Some(1),
                with_cubic: Some(cubic_multiples(4)),
            },
        );
        Self { caps }
    }
}

impl BezoutConstraints {
    pub fn empty() -> Self {
        Self {
            caps: BTreeMap::new(),
        }
    }

    /// Adds the quintic cap: with a cubic present, any quintic outside its
    /// multiples would cut out a curve of degree 15 < 16.
    pub fn with_quintic_cap(mut self) -> Self {
        self.caps.insert(
            5,
            Cap {
                base: None,
                with_cubic: Some(cubic_multiples(5)),
            },
        );
        self
    }

    pub fn only(degree: u32, cap: u64) -> Self {
        let mut caps = BTreeMap::new();
        caps.insert(
            degree,
            Cap {
                base: Some(cap),
                with_cubic: None,
            },
        );
        Self { caps }
    }

    fn h0(ideal: &MonomialIdeal, d: u32) -> u64 {
        ideal.lift(1).hilbert_count(d, Side::Ideal)
    }

    pub fn satisfied_by(&self, ideal: &MonomialIdeal) -> bool {
        let cubic = Self::h0(ideal, 3) >= 1;
        self.caps.iter().all(|(&d, cap)| {
            let limit = match (cubic, cap.with_cubic) {
                (true, Some(c)) => Some(c),
                _ => cap.base,
            };
            limit.is_none_or(|l| Self::h0(ideal, d) <= l)
        })
    }

    fn max_degree(&self) -> u32 {
        self.caps.keys().copied().max().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub scope: RuleScope,
    /// Reject intermediate ideals that are not Borel-fixed.
    pub require_borel: bool,
    pub max_depth: usize,
    pub degree_cap: u32,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            scope: RuleScope::ModuloLift,
            require_borel: true,
            max_depth: 16,
            degree_cap: 7,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SearchOutcome {
    Found {
        count: usize,
        witness: Vec<LogEntry>,
        final_ideal: MonomialIdeal,
    },
    /// The depth limit cut off part of the search space.
    Inconclusive { max_depth: usize },
    /// The finite search space holds no ideal meeting the constraints.
    Unsatisfiable,
}

/// Fewest rewritings below `degree_cap` until the caps hold, by 0-1 BFS.
///
/// Only generators of degree at most the largest capped degree are
/// rewritten: rewriting anything higher cannot change a capped count.
pub fn min_forced_rewritings(
    start: &MonomialIdeal,
    constraints: &BezoutConstraints,
    cfg: &SearchConfig,
) -> Result<SearchOutcome> {
    let root = GeneratorTree::new(start.clone())?;
    let top = constraints.max_degree();
    let mut best: HashMap<MonomialIdeal, usize> = HashMap::new();
    let mut queue: VecDeque<(GeneratorTree, usize)> = VecDeque::new();
    best.insert(root.leaves.clone(), 0);
    queue.push_back((root, 0));
    let mut truncated = false;
    while let Some((node, cost)) = queue.pop_front() {
        if best.get(&node.leaves).is_some_and(|&c| c < cost) {
            continue;
        }
        if constraints.satisfied_by(&node.leaves) {
            return Ok(SearchOutcome::Found {
                count: cost,
                final_ideal: node.leaves.clone(),
                witness: node.applied,
            });
        }
        if node.applied.len() >= cfg.max_depth {
            truncated = true;
            continue;
        }
        let mut targets: Vec<Monomial> = node
            .leaves
            .generators()
            .iter()
            .filter(|g| g.degree() <= top)
            .cloned()
            .collect();
        targets.sort();
        for target in targets {
            let Some(rule) = rule_for(&target, cfg.scope) else {
                continue;
            };
            let next = apply_rule(&node, &target, rule, cfg.scope)?;
            if cfg.require_borel && !next.leaves.is_borel_fixed() {
                continue;
            }
            let step = usize::from(target.degree() < cfg.degree_cap);
            let next_cost = cost + step;
            if best.get(&next.leaves).is_some_and(|&c| c <= next_cost) {
                continue;
            }
            best.insert(next.leaves.clone(), next_cost);
            if step == 0 {
                queue.push_front((next, next_cost));
            } else {
                queue.push_back((next, next_cost));
            }
        }
    }
    Ok(if truncated {
        SearchOutcome::Inconclusive {
            max_depth: cfg.max_depth,
        }
    } else {
        SearchOutcome::Unsatisfiable
    })
}
