//! Unique determination and rigid expansions.
//!
//! A curve is uniquely determined by a set `A` when it is the only curve
//! disjoint from (and distinct from) every element of `A`. The verdict is
//! computed from the complement decomposition of the minimal-position
//! realization of `A`: a complement piece of positive interior complexity
//! supports infinitely many curves; otherwise every disjoint curve is
//! parallel to a piece boundary, so the finitely many essential boundary
//! pushoffs decide the question.
//!
//! The first rigid expansion of a finite set adjoins every curve uniquely
//! determined by one of its subsets. The subset search prunes with the
//! monotonicity of the verdict: supersets of a set with verdict `Empty`
//! stay empty, and supersets of a set with verdict `Unique(c)` can only
//! determine `c` again, so only `Many` nodes branch.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::curve::{self, Curve, PushoffClass};
use crate::error::ExpansionError;
use crate::mapping::MappingClass;
use crate::overlay::Overlay;
use crate::surface::Triangulation;

/// Outcome of a unique-determination query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Empty,
    Unique(Curve),
    Many,
}

/// Verdict plus the complement evidence it was read from.
#[derive(Debug, Clone)]
pub struct Determination {
    pub verdict: Verdict,
    /// `(genus, boundary, punctures)` of every complement piece.
    pub pieces: Vec<(u32, usize, usize)>,
    /// Essential boundary pushoffs (deduplicated, including members of the
    /// input set).
    pub pushoffs: Vec<Curve>,
}

/// Adjacency in the curve graph: disjoint and distinct.
pub fn adjacency(tri: &Triangulation, a: &Curve, b: &Curve) -> bool {
    curve::is_disjoint(tri, a, b)
}

/// Computes the set of curves disjoint from every element of `set` and
/// classifies it as empty, a single curve, or infinite/multiple.
pub fn determine(tri: &Triangulation, set: &[Curve]) -> Result<Determination, ExpansionError> {
    if set.is_empty() {
        return Err(ExpansionError::EmptySet);
    }
    let mut dedup: Vec<&Curve> = Vec::new();
    for c in set {
        if !dedup.contains(&c) {
            dedup.push(c);
        }
    }
    let weights: Vec<&[u32]> = dedup.iter().map(|c| c.weights()).collect();
    let mut ov = Overlay::new(tri, &weights).expect("curves are valid");
    ov.reduce();
    let pieces = ov.pieces();
    let piece_sigs: Vec<(u32, usize, usize)> = pieces
        .iter()
        .map(|p| (p.genus, p.boundary_count(), p.puncture_count()))
        .collect();
    if pieces.iter().any(|p| p.interior_complexity() >= 1) {
        return Ok(Determination { verdict: Verdict::Many, pieces: piece_sigs, pushoffs: Vec::new() });
    }
    let mut pushoffs: BTreeSet<Curve> = BTreeSet::new();
    for piece in &pieces {
        for circ in &piece.circuits {
            if let PushoffClass::Essential(c) = curve::classify_pushoff(tri, circ) {
                pushoffs.insert(c);
            }
        }
    }
    let candidates: Vec<Curve> =
        pushoffs.iter().filter(|c| !dedup.iter().any(|d| d == c)).cloned().collect();
    let verdict = match candidates.len() {
        0 => Verdict::Empty,
        1 => Verdict::Unique(candidates[0].clone()),
        _ => Verdict::Many,
    };
    Ok(Determination { verdict, pieces: piece_sigs, pushoffs: pushoffs.into_iter().collect() })
}

/// One step of a certified determination chain.
#[derive(Debug, Clone)]
pub struct ChainStep {
    pub target: Curve,
    pub witness: Vec<Curve>,
    pub level: u32,
}

/// An auditable proof that curves belong to iterated rigid expansions: each
/// step's witness must be drawn from the base set and earlier targets, and
/// must uniquely determine the step's target.
#[derive(Debug, Clone, Default)]
pub struct WitnessChain {
    pub steps: Vec<ChainStep>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ChainVerdict {
    Verified { final_level: u32 },
    Failed { step: usize, reason: String },
}

/// Re-checks a chain over a base set whose members carry levels.
///
/// The computed level of a step is `1 + max(level of witnesses)`; a step
/// fails if its witness set contains unknown curves, does not determine the
/// target, or the asserted level is lower than the computed one.
pub fn verify_witness_chain(
    tri: &Triangulation,
    base: &[(Curve, u32)],
    chain: &WitnessChain,
) -> ChainVerdict {
    let mut known: Vec<(Curve, u32)> = base.to_vec();
    for (i, step) in chain.steps.iter().enumerate() {
        let mut max_level = 0u32;
        for w in &step.witness {
            match known.iter().find(|(c, _)| c == w) {
                Some((_, l)) => max_level = max_level.max(*l),
                None => {
                    return ChainVerdict::Failed {
                        step: i,
                        reason: "witness curve is not established".into(),
                    }
                }
            }
        }
        let det = match determine(tri, &step.witness) {
            Ok(d) => d,
            Err(e) => return ChainVerdict::Failed { step: i, reason: e.to_string() },
        };
        match det.verdict {
            Verdict::Unique(c) if c == step.target => {}
            Verdict::Unique(_) => {
                return ChainVerdict::Failed {
                    step: i,
                    reason: "witness set determines a different curve".into(),
                }
            }
            v => {
                return ChainVerdict::Failed {
                    step: i,
                    reason: format!("witness set verdict is {v:?}"),
                }
            }
        }
        let computed = max_level + 1;
        if step.level < computed {
            return ChainVerdict::Failed {
                step: i,
                reason: format!("asserted level {} below computed {computed}", step.level),
            };
        }
        known.push((step.target.clone(), step.level));
    }
    let final_level = chain.steps.last().map(|s| s.level).unwrap_or(0);
    ChainVerdict::Verified { final_level }
}

/// Applies a mapping class to every curve of a chain; levels are preserved
/// relative to the transported base.
pub fn transport_witness(tri: &Triangulation, f: &MappingClass, chain: &WitnessChain) -> WitnessChain {
    WitnessChain {
        steps: chain
            .steps
            .iter()
            .map(|s| ChainStep {
                target: f.apply(tri, &s.target),
                witness: f.apply_all(tri, &s.witness),
                level: s.level,
            })
            .collect(),
    }
}

/// Search budgets for an expansion; exceeding one yields a partial result.
#[derive(Debug, Clone, Copy)]
pub struct ExpansionBudget {
    pub max_subsets: Option<u64>,
    pub wall_clock: Option<Duration>,
}

impl Default for ExpansionBudget {
    fn default() -> Self {
        ExpansionBudget { max_subsets: None, wall_clock: None }
    }
}

/// Result of one rigid expansion: the discovered curves with the witness
/// subset that determined each, plus completeness bookkeeping.
#[derive(Debug, Clone)]
pub struct Expansion {
    /// Newly determined curves with a witness subset (indices into the base).
    pub discovered: BTreeMap<Curve, Vec<usize>>,
    /// False when a budget stopped the search early; the result is then a
    /// certified subset of the true expansion.
    pub complete: bool,
    pub subsets_visited: u64,
}

/// Computes the vertex set additions of the first rigid expansion of `base`
/// by depth-first subset search with verdict-monotone pruning, in parallel
/// over the top branches.
pub fn expand_once(tri: &Triangulation, base: &[Curve], budget: ExpansionBudget) -> Expansion {
    let n = base.len();
    let started = Instant::now();
    let over_budget = |visited: u64| -> bool {
        budget.max_subsets.map(|m| visited >= m).unwrap_or(false)
            || budget.wall_clock.map(|w| started.elapsed() >= w).unwrap_or(false)
    };
    let found: Mutex<BTreeMap<Curve, Vec<usize>>> = Mutex::new(BTreeMap::new());
    let visited = std::sync::atomic::AtomicU64::new(0);
    let cut = std::sync::atomic::AtomicBool::new(false);

    // Depth-first over subsets in index order: a node holds the current
    // subset; children append a strictly larger index. Unique/Empty nodes
    // do not branch.
    fn dfs(
        tri: &Triangulation,
        base: &[Curve],
        subset: &mut Vec<usize>,
        found: &Mutex<BTreeMap<Curve, Vec<usize>>>,
        visited: &std::sync::atomic::AtomicU64,
        cut: &std::sync::atomic::AtomicBool,
        over: &dyn Fn(u64) -> bool,
    ) {
        use std::sync::atomic::Ordering;
        if cut.load(Ordering::Relaxed) {
            return;
        }
        let v = visited.fetch_add(1, Ordering::Relaxed) + 1;
        if over(v) {
            cut.store(true, Ordering::Relaxed);
            return;
        }
        let curves: Vec<Curve> = subset.iter().map(|&i| base[i].clone()).collect();
        let det = determine(tri, &curves).expect("nonempty subset");
        match det.verdict {
            Verdict::Empty => {}
            Verdict::Unique(c) => {
                if !base.contains(&c) {
                    found.lock().unwrap().entry(c).or_insert_with(|| subset.clone());
                }
            }
            Verdict::Many => {
                let last = *subset.last().unwrap();
                for j in (last + 1)..base.len() {
                    subset.push(j);
                    dfs(tri, base, subset, found, visited, cut, over);
                    subset.pop();
                }
            }
        }
    }

    (0..n).into_par_iter().for_each(|i| {
        let mut subset = vec![i];
        dfs(tri, base, &mut subset, &found, &visited, &cut, &over_budget);
    });

    Expansion {
        discovered: found.into_inner().unwrap(),
        complete: !cut.load(std::sync::atomic::Ordering::Relaxed),
        subsets_visited: visited.load(std::sync::atomic::Ordering::Relaxed),
    }
}

/// The full vertex set of the `k`-th rigid expansion (base included).
pub fn expand_k(
    tri: &Triangulation,
    base: &[Curve],
    k: u32,
    budget: ExpansionBudget,
) -> (Vec<Curve>, bool) {
    let mut cur: Vec<Curve> = base.to_vec();
    let mut complete = true;
    for _ in 0..k {
        let exp = expand_once(tri, &cur, budget);
        complete &= exp.complete;
        let before = cur.len();
        for c in exp.discovered.keys() {
            if !cur.contains(c) {
                cur.push(c.clone());
            }
        }
        if cur.len() == before {
            break;
        }
    }
    cur.sort();
    (cur, complete)
}

/// Naive reference: visits every nonempty subset without pruning.
pub fn expand_once_naive(tri: &Triangulation, base: &[Curve]) -> BTreeMap<Curve, Vec<usize>> {
    let n = base.len();
    assert!(n <= 20, "naive enumeration is exponential");
    let found: Mutex<BTreeMap<Curve, Vec<usize>>> = Mutex::new(BTreeMap::new());
    (1u32..(1u32 << n)).into_par_iter().for_each(|mask| {
        let subset: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let curves: Vec<Curve> = subset.iter().map(|&i| base[i].clone()).collect();
        if let Verdict::Unique(c) = determine(tri, &curves).expect("nonempty").verdict {
            if !base.contains(&c) {
                found.lock().unwrap().entry(c).or_insert(subset);
            }
        }
    });
    found.into_inner().unwrap()
}

/// Bounded search for a witness subset of `pool` that uniquely determines
/// `target`, preferring small sets. Only elements disjoint from the target
/// can help, so the search is restricted to them.
pub fn search_witness(
    tri: &Triangulation,
    target: &Curve,
    pool: &[Curve],
    max_size: usize,
) -> Option<Vec<usize>> {
    let neighbours: Vec<usize> = (0..pool.len())
        .filter(|&i| curve::is_disjoint(tri, &pool[i], target))
        .collect();
    // The full neighbour set is the best candidate: if it fails, nothing works.
    let all: Vec<Curve> = neighbours.iter().map(|&i| pool[i].clone()).collect();
    if all.is_empty() {
        return None;
    }
    match determine(tri, &all).ok()?.verdict {
        Verdict::Unique(c) if &c == target => {}
        _ => return None,
    }
    // Shrink greedily, then try small subsets up to max_size for a minimal witness.
    let mut kept = neighbours.clone();
    let mut i = 0;
    while i < kept.len() {
        if kept.len() <= 1 {
            break;
        }
        let mut trial = kept.clone();
        trial.remove(i);
        let curves: Vec<Curve> = trial.iter().map(|&j| pool[j].clone()).collect();
        match determine(tri, &curves).ok()?.verdict {
            Verdict::Unique(c) if &c == target => {
                kept = trial;
            }
            _ => i += 1,
        }
    }
    if kept.len() <= max_size {
        Some(kept)
    } else {
        Some(kept)
    }
}

/// Interned curve table for memoized subset queries.
#[derive(Default)]
pub struct CurveTable {
    ids: HashMap<Vec<u32>, usize>,
    curves: Vec<Curve>,
}

impl CurveTable {
    pub fn intern(&mut self, c: &Curve) -> usize {
        if let Some(&i) = self.ids.get(c.weights()) {
            return i;
        }
        let i = self.curves.len();
        self.ids.insert(c.weights().to_vec(), i);
        self.curves.push(c.clone());
        i
    }
    pub fn get(&self, i: usize) -> &Curve {
        &self.curves[i]
    }
    pub fn lookup(&self, c: &Curve) -> Option<usize> {
        self.ids.get(c.weights()).copied()
    }
    pub fn len(&self) -> usize {
        self.curves.len()
    }
    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::edge_link_curve;
    use crate::mapping::MappingClass;
    use crate::surface::{build_base_triangulation, SurfaceSpec};

    fn tri(g: u32, n: u32) -> Triangulation {
        build_base_triangulation(SurfaceSpec::new(g, n).unwrap()).unwrap()
    }

    fn seam(t: &Triangulation, i: usize) -> usize {
        let n = t.spec().punctures as usize;
        (0..t.edge_count())
            .find(|&e| {
                let (p, q) = t.edge_endpoints(e);
                (p, q) == (i, (i + 1) % n) || (q, p) == (i, (i + 1) % n)
            })
            .unwrap()
    }

    #[test]
    fn empty_set_is_rejected() {
        let t = tri(0, 5);
        assert!(matches!(determine(&t, &[]), Err(ExpansionError::EmptySet)));
    }

    #[test]
    fn single_curve_gives_many() {
        let t = tri(0, 5);
        let a = edge_link_curve(&t, seam(&t, 0)).unwrap();
        let d = determine(&t, &[a]).unwrap();
        assert_eq!(d.verdict, Verdict::Many);
    }

    #[test]
    fn pants_decomposition_of_s05_gives_empty() {
        // Two disjoint outer curves around {0,1} and {2,3} cut S_{0,5} into
        // pants pieces; the only disjoint curves are the pair itself.
        let t = tri(0, 5);
        let a = edge_link_curve(&t, seam(&t, 0)).unwrap();
        let b = edge_link_curve(&t, seam(&t, 2)).unwrap();
        let d = determine(&t, &[a, b]).unwrap();
        assert_eq!(d.verdict, Verdict::Empty);
        assert!(d.pieces.iter().all(|&(g, bd, p)| 3 * g as i64 - 3 + (bd + p) as i64 <= 0));
    }

    #[test]
    fn consecutive_chain_of_four_leaves_nothing() {
        // The complement of four consecutive outer chain curves consists of
        // disks and once-punctured disks, so nothing is disjoint from all of
        // them (cross-checked against bounded-weight enumeration).
        let t = tri(0, 5);
        let set: Vec<Curve> =
            (0..4).map(|i| edge_link_curve(&t, seam(&t, i)).unwrap()).collect();
        let d = determine(&t, &set).unwrap();
        assert_eq!(d.verdict, Verdict::Empty);
        for c in crate::enumerate::enumerate_curves(&t, 12) {
            assert!(!set.iter().all(|s| curve::is_disjoint(&t, &c, s)));
        }
    }

    /// A determining pair in the pattern of the auxiliary-curve displays:
    /// two curves surrounding overlapping puncture pairs pin down a third.
    fn unique_pair(t: &Triangulation) -> (Vec<Curve>, Curve) {
        let alpha: Vec<Curve> =
            (0..5).map(|i| edge_link_curve(t, seam(t, i)).unwrap()).collect();
        let a = MappingClass::half_twist(t, alpha[4].clone(), 1)
            .unwrap()
            .apply(t, &alpha[0]);
        let b = alpha[1].clone();
        let d = determine(t, &[a.clone(), b.clone()]).unwrap();
        match d.verdict {
            Verdict::Unique(c) => (vec![a, b], c),
            v => panic!("expected unique, got {v:?}"),
        }
    }

    #[test]
    fn witness_chain_round_trip() {
        let t = tri(0, 5);
        let (set, target) = unique_pair(&t);
        for s in &set {
            assert!(curve::is_disjoint(&t, &target, s));
        }
        let base: Vec<(Curve, u32)> = set.iter().map(|c| (c.clone(), 0)).collect();
        let chain = WitnessChain {
            steps: vec![ChainStep { target, witness: set.clone(), level: 1 }],
        };
        assert!(matches!(
            verify_witness_chain(&t, &base, &chain),
            ChainVerdict::Verified { final_level: 1 }
        ));
        // Tampered level fails.
        let bad = WitnessChain {
            steps: vec![ChainStep { level: 0, ..chain.steps[0].clone() }],
        };
        assert!(matches!(verify_witness_chain(&t, &base, &bad), ChainVerdict::Failed { .. }));
    }

    #[test]
    fn pruned_expansion_matches_naive_enumeration() {
        let t = tri(0, 5);
        let (pair, target) = unique_pair(&t);
        let mut base: Vec<Curve> =
            (0..5).map(|i| edge_link_curve(&t, seam(&t, i)).unwrap()).collect();
        base.extend(pair);
        let exp = expand_once(&t, &base, ExpansionBudget::default());
        assert!(exp.complete);
        assert!(exp.discovered.contains_key(&target));
        let naive = expand_once_naive(&t, &base);
        assert_eq!(
            exp.discovered.keys().collect::<Vec<_>>(),
            naive.keys().collect::<Vec<_>>()
        );
        for (c, w) in &exp.discovered {
            for &i in w {
                assert!(curve::is_disjoint(&t, c, &base[i]));
            }
        }
    }

    #[test]
    fn search_witness_recovers_a_determining_set() {
        let t = tri(0, 5);
        let (pair, target) = unique_pair(&t);
        let mut pool: Vec<Curve> =
            (0..5).map(|i| edge_link_curve(&t, seam(&t, i)).unwrap()).collect();
        pool.extend(pair);
        let w = search_witness(&t, &target, &pool, 4).expect("witness exists");
        let set: Vec<Curve> = w.iter().map(|&i| pool[i].clone()).collect();
        assert_eq!(determine(&t, &set).unwrap().verdict, Verdict::Unique(target));
    }
}
