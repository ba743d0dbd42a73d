//! The matching engine: configuration, preprocessing, pruning, sequential
//! search, and the brute-force reference enumerator.
//!
//! A *match* is an injective mapping from pattern nodes to target nodes under
//! which node labels agree and every pattern arc has a same-direction,
//! label-compatible target arc. Extra target arcs are allowed (the occurrence
//! is not required to be induced), and two mappings onto the same target node
//! set count separately.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::bitset::Bitset;
use crate::domains::{
    forward_check_singletons, initial_domains, refine_arc_consistency, AcPasses, DomainTable,
};
use crate::graph::{LabelId, LabeledDigraph, NodeId};
use crate::ordering::{build_ordering, OrderingError, OrderingOptions, VariableOrdering};

/// Search strategy. The `ri-ds` family adds candidate domains to the plain
/// backtracking search; the `-si` and `-fc` suffixes add domain-size
/// tie-breaking in the ordering and singleton forward checking.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Ri,
    RiDs,
    RiDsSi,
    RiDsSiFc,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Ri,
        Algorithm::RiDs,
        Algorithm::RiDsSi,
        Algorithm::RiDsSiFc,
    ];

    /// Domains are computed, refined, consulted during search, and feed
    /// singleton-first ordering.
    pub fn uses_domains(self) -> bool {
        !matches!(self, Algorithm::Ri)
    }

    /// Domain size participates in ordering tie-breaks.
    pub fn domain_tiebreak(self) -> bool {
        matches!(self, Algorithm::RiDsSi | Algorithm::RiDsSiFc)
    }

    /// Singleton domains are forward-checked after refinement.
    pub fn forward_checking(self) -> bool {
        matches!(self, Algorithm::RiDsSiFc)
    }

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Ri => "ri",
            Algorithm::RiDs => "ri-ds",
            Algorithm::RiDsSi => "ri-ds-si",
            Algorithm::RiDsSiFc => "ri-ds-si-fc",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown algorithm {0:?}, expected one of: ri, ri-ds, ri-ds-si, ri-ds-si-fc")]
pub struct UnknownAlgorithm(pub String);

impl FromStr for Algorithm {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ri" => Ok(Algorithm::Ri),
            "ri-ds" => Ok(Algorithm::RiDs),
            "ri-ds-si" => Ok(Algorithm::RiDsSi),
            "ri-ds-si-fc" => Ok(Algorithm::RiDsSiFc),
            other => Err(UnknownAlgorithm(other.to_owned())),
        }
    }
}

/// Engine configuration shared by the sequential and parallel runners.
#[derive(Debug, Clone)]
pub struct EngineConfig {
    pub algorithm: Algorithm,
    /// Arc-consistency effort during preprocessing (domain variants only).
    pub ac_passes: AcPasses,
    /// Wall-clock budget covering preprocessing plus matching. `None` means
    /// unlimited.
    pub time_limit: Option<Duration>,
    /// Advisory for front ends: the engine reports every match to the sink
    /// either way, a counting sink simply ignores the mapping payload.
    pub count_only: bool,
}

impl EngineConfig {
    pub const DEFAULT_TIME_LIMIT: Duration = Duration::from_secs(180);

    pub fn new(algorithm: Algorithm) -> Self {
        EngineConfig {
            algorithm,
            ac_passes: AcPasses::Fixpoint,
            time_limit: Some(Self::DEFAULT_TIME_LIMIT),
            count_only: false,
        }
    }

    pub fn without_time_limit(mut self) -> Self {
        self.time_limit = None;
        self
    }
}

/// Run metrics. Times are wall clock; `search_space_size` counts candidate
/// feasibility checks (every invocation of the pruning cascade counts once);
/// steal counters stay zero on sequential runs.
#[derive(Debug, Clone, Copy, Default)]
pub struct SearchStats {
    pub preprocessing_time: Duration,
    pub matching_time: Duration,
    pub total_time: Duration,
    pub search_space_size: u64,
    pub match_count: u64,
    pub steals_ok: u64,
    pub steals_failed: u64,
    pub timed_out: bool,
}

/// Receiver of complete matches. `mapping[p]` is the target node assigned to
/// pattern node `p`. Implementations must tolerate concurrent reports from
/// parallel workers.
pub trait MatchSink: Sync {
    fn report(&self, mapping: &[NodeId]);
}

/// Counts matches and discards the mappings.
#[derive(Default)]
pub struct CountingSink {
    count: AtomicU64,
}

impl CountingSink {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn value(&self) -> u64 {
        self.count.load(AtomicOrdering::Relaxed)
    }
}

impl MatchSink for CountingSink {
    fn report(&self, _mapping: &[NodeId]) {
        self.count.fetch_add(1, AtomicOrdering::Relaxed);
    }
}

/// Collects all matches; reports are serialized through a mutex.
#[derive(Default)]
pub struct CollectingSink {
    matches: Mutex<Vec<Vec<NodeId>>>,
}

impl CollectingSink {
    pub fn new() -> Self {
        Self::default()
    }

    /// Matches in report order (deterministic only for sequential runs).
    pub fn into_matches(self) -> Vec<Vec<NodeId>> {
        self.matches.into_inner().unwrap()
    }

    /// Matches sorted lexicographically, for order-insensitive comparison.
    pub fn into_sorted_matches(self) -> Vec<Vec<NodeId>> {
        let mut m = self.into_matches();
        m.sort_unstable();
        m
    }
}

impl MatchSink for CollectingSink {
    fn report(&self, mapping: &[NodeId]) {
        self.matches.lock().unwrap().push(mapping.to_vec());
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("pattern graph has no nodes")]
    EmptyPattern,
    #[error("worker count must be at least 1")]
    InvalidWorkerCount,
    #[error("task group size must be between 1 and 64")]
    InvalidGroupSize,
}

/// Where the candidate targets for one ordering position come from.
#[derive(Debug, Clone, Copy)]
pub(crate) enum CandidateSource {
    /// Neighborhood of the target node mapped at this ordering position.
    ParentImage(u32),
    /// Every target node (parentless position, no domains).
    AllTargets,
    /// The position's own domain (parentless position, domain variants).
    Domain,
}

/// A pattern arc between this position and an earlier one: the mapped images
/// must be joined by a target arc in the same direction with the same label.
#[derive(Debug, Clone, Copy)]
pub(crate) struct EdgeConstraint {
    pub(crate) other_pos: u32,
    /// True: pattern arc goes from this position's node to the earlier node.
    pub(crate) outgoing: bool,
    pub(crate) label: LabelId,
}

/// Static per-position data derived from the ordering, consulted on the hot
/// path of both runners.
pub(crate) struct PositionPlan {
    pub(crate) node: NodeId,
    pub(crate) label: LabelId,
    pub(crate) in_degree: u32,
    pub(crate) out_degree: u32,
    pub(crate) source: CandidateSource,
    constraints_start: u32,
    constraints_end: u32,
}

pub(crate) struct SearchPlan {
    positions: Vec<PositionPlan>,
    constraints: Vec<EdgeConstraint>,
}

impl SearchPlan {
    fn build(g_p: &LabeledDigraph, ordering: &VariableOrdering, use_domains: bool) -> SearchPlan {
        let np = ordering.len();
        let mut positions = Vec::with_capacity(np);
        let mut constraints = Vec::new();
        for pos in 0..np {
            let node = ordering.node_at(pos);
            let start = constraints.len() as u32;
            for (w, label) in g_p.out_arcs(node) {
                let wpos = ordering.position_of(w);
                if wpos < pos {
                    constraints.push(EdgeConstraint {
                        other_pos: wpos as u32,
                        outgoing: true,
                        label,
                    });
                }
            }
            for (u, label) in g_p.in_arcs(node) {
                let upos = ordering.position_of(u);
                if upos < pos {
                    constraints.push(EdgeConstraint {
                        other_pos: upos as u32,
                        outgoing: false,
                        label,
                    });
                }
            }
            let source = match ordering.parent_position(pos) {
                Some(j) => CandidateSource::ParentImage(j as u32),
                None if use_domains => CandidateSource::Domain,
                None => CandidateSource::AllTargets,
            };
            positions.push(PositionPlan {
                node,
                label: g_p.label(node),
                in_degree: g_p.in_degree(node) as u32,
                out_degree: g_p.out_degree(node) as u32,
                source,
                constraints_start: start,
                constraints_end: constraints.len() as u32,
            });
        }
        SearchPlan {
            positions,
            constraints,
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.positions.len()
    }

    pub(crate) fn position(&self, pos: usize) -> &PositionPlan {
        &self.positions[pos]
    }

    /// The pruning cascade, cheapest rule first, short-circuiting:
    /// domain membership (domain variants), injectivity, node label,
    /// degree lower bounds, then arcs to already-mapped positions.
    #[inline]
    pub(crate) fn check(
        &self,
        g_t: &LabeledDigraph,
        domains: Option<&DomainTable>,
        stack: &[NodeId],
        used: &Bitset,
        pos: usize,
        cand: NodeId,
    ) -> bool {
        let p = &self.positions[pos];
        if let Some(d) = domains {
            if !d.contains(p.node, cand) {
                return false;
            }
        }
        if used.contains(cand as usize) {
            return false;
        }
        if g_t.label(cand) != p.label {
            return false;
        }
        if (g_t.in_degree(cand) as u32) < p.in_degree
            || (g_t.out_degree(cand) as u32) < p.out_degree
        {
            return false;
        }
        for c in &self.constraints[p.constraints_start as usize..p.constraints_end as usize] {
            let other = stack[c.other_pos as usize];
            let found = if c.outgoing {
                g_t.arc_label(cand, other)
            } else {
                g_t.arc_label(other, cand)
            };
            if found != Some(c.label) {
                return false;
            }
        }
        true
    }
}

/// Candidate targets for one ordering position, always in ascending id order.
pub(crate) enum CandidateIter<'a> {
    Slice(std::slice::Iter<'a, NodeId>),
    Range(std::ops::Range<NodeId>),
    Bits(crate::bitset::Ones<'a>),
}

impl Iterator for CandidateIter<'_> {
    type Item = NodeId;

    #[inline]
    fn next(&mut self) -> Option<NodeId> {
        match self {
            CandidateIter::Slice(it) => it.next().copied(),
            CandidateIter::Range(it) => it.next(),
            CandidateIter::Bits(it) => it.next().map(|t| t as NodeId),
        }
    }
}

/// A matching instance after preprocessing: ordering and domains are fixed,
/// only the search itself remains. Produced by [`prepare`]; run it with
/// [`Prepared::run_sequential`] or [`Prepared::run_parallel`].
pub struct Prepared<'g> {
    pub(crate) g_p: &'g LabeledDigraph,
    pub(crate) g_t: &'g LabeledDigraph,
    pub(crate) config: EngineConfig,
    pub(crate) ordering: VariableOrdering,
    pub(crate) domains: Option<DomainTable>,
    pub(crate) plan: SearchPlan,
    /// Preprocessing proved no match exists (an empty or conflicting domain);
    /// the runners skip the search and report zero matches.
    pub(crate) dead: bool,
    pub(crate) preprocessing: Duration,
}

/// Runs preprocessing: domains (for the domain variants: initial filter,
/// arc-consistency refinement, optionally singleton forward checking) and the
/// variable ordering.
pub fn prepare<'g>(
    g_p: &'g LabeledDigraph,
    g_t: &'g LabeledDigraph,
    config: &EngineConfig,
) -> Result<Prepared<'g>, EngineError> {
    let started = Instant::now();
    if g_p.node_count() == 0 {
        return Err(EngineError::EmptyPattern);
    }
    let mut dead = false;
    let domains = if config.algorithm.uses_domains() {
        let mut d = initial_domains(g_p, g_t);
        refine_arc_consistency(&mut d, g_p, g_t, config.ac_passes);
        if config.algorithm.forward_checking() && forward_check_singletons(&mut d).is_err() {
            // Two pattern nodes pinned to one target: provably zero matches.
            dead = true;
        }
        if d.any_empty() {
            dead = true;
        }
        Some(d)
    } else {
        None
    };
    let options = match &domains {
        Some(d) => OrderingOptions {
            singleton_first: true,
            domain_tiebreak: config.algorithm.domain_tiebreak(),
            domain_sizes: Some(d.sizes()),
        },
        None => OrderingOptions::default(),
    };
    let ordering = build_ordering(g_p, &options).map_err(|e| match e {
        OrderingError::EmptyPattern => EngineError::EmptyPattern,
        OrderingError::DomainSizesRequired { .. } => {
            unreachable!("domain sizes are always supplied alongside domain flags")
        }
    })?;
    let plan = SearchPlan::build(g_p, &ordering, domains.is_some());
    Ok(Prepared {
        g_p,
        g_t,
        config: config.clone(),
        ordering,
        domains,
        plan,
        dead,
        preprocessing: started.elapsed(),
    })
}

impl<'g> Prepared<'g> {
    pub fn ordering(&self) -> &VariableOrdering {
        &self.ordering
    }

    pub fn domains(&self) -> Option<&DomainTable> {
        self.domains.as_ref()
    }

    pub fn preprocessing_time(&self) -> Duration {
        self.preprocessing
    }

    /// True if preprocessing already proved there are no matches.
    pub fn is_dead(&self) -> bool {
        self.dead
    }

    /// Remaining wall-clock budget for a search started now.
    pub(crate) fn search_deadline(&self) -> Option<Instant> {
        self.config
            .time_limit
            .map(|limit| Instant::now() + limit.saturating_sub(self.preprocessing))
    }

    pub(crate) fn candidates(&self, pos: usize, stack: &[NodeId]) -> CandidateIter<'_> {
        match self.plan.position(pos).source {
            CandidateSource::ParentImage(j) => {
                CandidateIter::Slice(self.g_t.neighborhood(stack[j as usize]).iter())
            }
            CandidateSource::AllTargets => {
                CandidateIter::Range(0..self.g_t.node_count() as NodeId)
            }
            CandidateSource::Domain => {
                let node = self.plan.position(pos).node;
                CandidateIter::Bits(
                    self.domains
                        .as_ref()
                        .expect("domain candidate source requires domains")
                        .row(node)
                        .iter(),
                )
            }
        }
    }

    fn stats_base(&self) -> SearchStats {
        SearchStats {
            preprocessing_time: self.preprocessing,
            ..SearchStats::default()
        }
    }

    /// Depth-first enumeration on the calling thread. Candidate order is
    /// fixed (ascending target ids), so repeated runs check the same
    /// candidates in the same order and report matches in the same order.
    pub fn run_sequential<S: MatchSink>(&self, sink: &S) -> SearchStats {
        let started = Instant::now();
        let mut stats = self.stats_base();
        if !self.dead {
            let mut dfs = SequentialDfs {
                prepared: self,
                sink,
                stack: Vec::with_capacity(self.plan.len()),
                used: Bitset::new(self.g_t.node_count()),
                mapping_buf: vec![0; self.g_p.node_count()],
                deadline: self.search_deadline(),
                checks: 0,
                matches: 0,
                timed_out: false,
            };
            dfs.descend(0);
            stats.search_space_size = dfs.checks;
            stats.match_count = dfs.matches;
            stats.timed_out = dfs.timed_out;
        }
        stats.matching_time = started.elapsed();
        stats.total_time = stats.preprocessing_time + stats.matching_time;
        stats
    }
}

/// How many candidate checks pass between wall-clock probes.
pub(crate) const TIMEOUT_PROBE_INTERVAL: u64 = 4096;

struct SequentialDfs<'a, 'g, S: MatchSink> {
    prepared: &'a Prepared<'g>,
    sink: &'a S,
    stack: Vec<NodeId>,
    used: Bitset,
    mapping_buf: Vec<NodeId>,
    deadline: Option<Instant>,
    checks: u64,
    matches: u64,
    timed_out: bool,
}

impl<S: MatchSink> SequentialDfs<'_, '_, S> {
    fn descend(&mut self, pos: usize) {
        let np = self.prepared.plan.len();
        let mut candidates = self.prepared.candidates(pos, &self.stack);
        while let Some(cand) = candidates.next() {
            if self.timed_out {
                return;
            }
            if !self.check_counted(pos, cand) {
                continue;
            }
            self.stack.push(cand);
            self.used.insert(cand as usize);
            if pos + 1 == np {
                self.emit();
            } else {
                self.descend(pos + 1);
            }
            self.stack.pop();
            self.used.remove(cand as usize);
        }
    }

    fn check_counted(&mut self, pos: usize, cand: NodeId) -> bool {
        self.checks += 1;
        if self.checks % TIMEOUT_PROBE_INTERVAL == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.timed_out = true;
                    return false;
                }
            }
        }
        self.prepared.plan.check(
            self.prepared.g_t,
            self.prepared.domains.as_ref(),
            &self.stack,
            &self.used,
            pos,
            cand,
        )
    }

    fn emit(&mut self) {
        for (pos, &t) in self.stack.iter().enumerate() {
            self.mapping_buf[self.prepared.ordering.node_at(pos) as usize] = t;
        }
        self.sink.report(&self.mapping_buf);
        self.matches += 1;
    }
}

/// Preprocesses and enumerates on the calling thread.
pub fn enumerate_sequential<S: MatchSink>(
    g_p: &LabeledDigraph,
    g_t: &LabeledDigraph,
    config: &EngineConfig,
    sink: &S,
) -> Result<SearchStats, EngineError> {
    Ok(prepare(g_p, g_t, config)?.run_sequential(sink))
}

/// Size guard for [`enumerate_bruteforce`].
#[derive(Debug, Error, PartialEq, Eq)]
#[error(
    "instance too large for brute force: pattern {pattern_nodes} nodes (max {max_pattern}), \
     target {target_nodes} nodes (max {max_target})"
)]
pub struct InstanceTooLarge {
    pub pattern_nodes: usize,
    pub target_nodes: usize,
    pub max_pattern: usize,
    pub max_target: usize,
}

pub const BRUTE_FORCE_MAX_PATTERN: usize = 8;
pub const BRUTE_FORCE_MAX_TARGET: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteForceResult {
    /// Every match as a by-pattern-node-id mapping, in lexicographic order.
    pub matches: Vec<Vec<NodeId>>,
}

impl BruteForceResult {
    pub fn count(&self) -> u64 {
        self.matches.len() as u64
    }
}

/// Reference enumerator: tries every injective mapping and verifies the match
/// conditions at the leaves, with no ordering, pruning, or domains. Kept
/// deliberately naive so it shares nothing with the engine it cross-checks;
/// the size guard keeps the factorial enumeration affordable.
pub fn enumerate_bruteforce(
    g_p: &LabeledDigraph,
    g_t: &LabeledDigraph,
) -> Result<BruteForceResult, InstanceTooLarge> {
    let (np, nt) = (g_p.node_count(), g_t.node_count());
    if np > BRUTE_FORCE_MAX_PATTERN || nt > BRUTE_FORCE_MAX_TARGET {
        return Err(InstanceTooLarge {
            pattern_nodes: np,
            target_nodes: nt,
            max_pattern: BRUTE_FORCE_MAX_PATTERN,
            max_target: BRUTE_FORCE_MAX_TARGET,
        });
    }
    let mut result = BruteForceResult {
        matches: Vec::new(),
    };
    let mut mapping = vec![0 as NodeId; np];
    let mut used = vec![false; nt];
    assign(g_p, g_t, 0, &mut mapping, &mut used, &mut result.matches);
    return Ok(result);

    fn assign(
        g_p: &LabeledDigraph,
        g_t: &LabeledDigraph,
        p: usize,
        mapping: &mut Vec<NodeId>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<NodeId>>,
    ) {
        if p == g_p.node_count() {
            if is_match(g_p, g_t, mapping) {
                out.push(mapping.clone());
            }
            return;
        }
        for t in 0..g_t.node_count() {
            if used[t] {
                continue;
            }
            used[t] = true;
            mapping[p] = t as NodeId;
            assign(g_p, g_t, p + 1, mapping, used, out);
            used[t] = false;
        }
    }

    fn is_match(g_p: &LabeledDigraph, g_t: &LabeledDigraph, mapping: &[NodeId]) -> bool {
        for p in 0..g_p.node_count() as NodeId {
            if g_p.label(p) != g_t.label(mapping[p as usize]) {
                return false;
            }
        }
        g_p.arcs().all(|(u, v, label)| {
            g_t.arc_label(mapping[u as usize], mapping[v as usize]) == Some(label)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::LabelRegistry;

    /// Build pattern and target over one shared registry; arcs may carry labels.
    pub(crate) fn instance(
        p_labels: &[&str],
        p_arcs: &[(NodeId, NodeId, &str)],
        t_labels: &[&str],
        t_arcs: &[(NodeId, NodeId, &str)],
    ) -> (LabeledDigraph, LabeledDigraph) {
        let mut reg = LabelRegistry::new();
        let p_ids: Vec<LabelId> = p_labels.iter().map(|l| reg.intern_node_label(l)).collect();
        let t_ids: Vec<LabelId> = t_labels.iter().map(|l| reg.intern_node_label(l)).collect();
        let p_triples: Vec<_> = p_arcs
            .iter()
            .map(|&(u, v, l)| (u, v, reg.intern_arc_label(l)))
            .collect();
        let t_triples: Vec<_> = t_arcs
            .iter()
            .map(|&(u, v, l)| (u, v, reg.intern_arc_label(l)))
            .collect();
        (
            LabeledDigraph::from_parts("p", p_ids, &p_triples).unwrap(),
            LabeledDigraph::from_parts("t", t_ids, &t_triples).unwrap(),
        )
    }

    fn count(algorithm: Algorithm, g_p: &LabeledDigraph, g_t: &LabeledDigraph) -> u64 {
        let sink = CountingSink::new();
        let stats =
            enumerate_sequential(g_p, g_t, &EngineConfig::new(algorithm), &sink).unwrap();
        assert_eq!(stats.match_count, sink.value());
        assert!(!stats.timed_out);
        stats.match_count
    }

    #[test]
    fn single_node_pattern_counts_label_occurrences() {
        let (p, t) = instance(&["A"], &[], &["A", "A", "B"], &[]);
        for algorithm in Algorithm::ALL {
            assert_eq!(count(algorithm, &p, &t), 2, "{algorithm}");
        }
    }

    #[test]
    fn triangle_in_triangle_has_three_rotations() {
        let arcs = [(0, 1, ""), (1, 2, ""), (2, 0, "")];
        let (p, t) = instance(&["A"; 3], &arcs, &["A"; 3], &arcs);
        for algorithm in Algorithm::ALL {
            assert_eq!(count(algorithm, &p, &t), 3, "{algorithm}");
        }
    }

    #[test]
    fn matches_need_not_be_induced() {
        // Pattern a -> b embeds into a double-arc pair both ways.
        let (p, t) = instance(&["A", "A"], &[(0, 1, "")], &["A", "A"], &[(0, 1, ""), (1, 0, "")]);
        for algorithm in Algorithm::ALL {
            assert_eq!(count(algorithm, &p, &t), 2, "{algorithm}");
        }
    }

    #[test]
    fn direction_is_respected() {
        let (p, t) = instance(&["A", "A"], &[(0, 1, "")], &["A", "A"], &[(1, 0, "")]);
        for algorithm in Algorithm::ALL {
            assert_eq!(count(algorithm, &p, &t), 1, "{algorithm}");
        }
    }

    #[test]
    fn arc_labels_must_agree() {
        let (p, t) = instance(
            &["A", "A"],
            &[(0, 1, "x")],
            &["A", "A", "A"],
            &[(0, 1, "x"), (1, 2, "y")],
        );
        for algorithm in Algorithm::ALL {
            assert_eq!(count(algorithm, &p, &t), 1, "{algorithm}");
        }
    }

    #[test]
    fn node_labels_must_agree() {
        let (p, t) = instance(&["A", "B"], &[(0, 1, "")], &["A", "A"], &[(0, 1, "")]);
        for algorithm in Algorithm::ALL {
            assert_eq!(count(algorithm, &p, &t), 0, "{algorithm}");
        }
    }

    #[test]
    fn pattern_larger_than_target_yields_zero() {
        let (p, t) = instance(&["A"; 4], &[], &["A"; 3], &[]);
        for algorithm in Algorithm::ALL {
            assert_eq!(count(algorithm, &p, &t), 0, "{algorithm}");
        }
    }

    #[test]
    fn empty_pattern_is_rejected() {
        let (_, t) = instance(&["A"], &[], &["A"], &[]);
        let p = LabeledDigraph::from_parts("p", vec![], &[]).unwrap();
        let sink = CountingSink::new();
        assert_eq!(
            enumerate_sequential(&p, &t, &EngineConfig::new(Algorithm::Ri), &sink),
            Err(EngineError::EmptyPattern)
        );
    }

    #[test]
    fn disconnected_pattern_enumerates_both_components() {
        // Two isolated pattern arcs into a target with two disjoint arcs:
        // each pattern arc can bind to either target arc, injectively.
        let (p, t) = instance(
            &["A"; 4],
            &[(0, 1, ""), (2, 3, "")],
            &["A"; 4],
            &[(0, 1, ""), (2, 3, "")],
        );
        for algorithm in Algorithm::ALL {
            assert_eq!(count(algorithm, &p, &t), 2, "{algorithm}");
        }
    }

    #[test]
    fn reported_mappings_are_by_pattern_node() {
        let (p, t) = instance(
            &["A", "B"],
            &[(0, 1, "")],
            &["B", "A"],
            &[(1, 0, "")],
        );
        let sink = CollectingSink::new();
        enumerate_sequential(&p, &t, &EngineConfig::new(Algorithm::Ri), &sink).unwrap();
        assert_eq!(sink.into_matches(), vec![vec![1, 0]]);
    }

    #[test]
    fn search_space_counts_every_cascade_invocation() {
        // RI, single-node pattern: the root scans all of V(G_t), so exactly
        // node_count checks run.
        let (p, t) = instance(&["A"], &[], &["A", "B", "A", "C"], &[]);
        let sink = CountingSink::new();
        let stats =
            enumerate_sequential(&p, &t, &EngineConfig::new(Algorithm::Ri), &sink).unwrap();
        assert_eq!(stats.search_space_size, 4);
        assert_eq!(stats.match_count, 2);
    }

    #[test]
    fn domain_variants_scan_domains_at_the_root() {
        let (p, t) = instance(&["A"], &[], &["A", "B", "A", "C"], &[]);
        let sink = CountingSink::new();
        let stats =
            enumerate_sequential(&p, &t, &EngineConfig::new(Algorithm::RiDs), &sink).unwrap();
        // D(root) = {0, 2}: two checks instead of four.
        assert_eq!(stats.search_space_size, 2);
        assert_eq!(stats.match_count, 2);
    }

    #[test]
    fn dead_preprocessing_skips_search() {
        // No target node carries label B: the domain of pattern node 1 is
        // empty and the search never starts.
        let (p, t) = instance(&["A", "B"], &[(0, 1, "")], &["A", "A"], &[(0, 1, "")]);
        let sink = CountingSink::new();
        let prepared = prepare(&p, &t, &EngineConfig::new(Algorithm::RiDs)).unwrap();
        assert!(prepared.is_dead());
        let stats = prepared.run_sequential(&sink);
        assert_eq!(stats.match_count, 0);
        assert_eq!(stats.search_space_size, 0);
        assert!(!stats.timed_out);
    }

    #[test]
    fn conflicting_singletons_mean_zero_matches_not_an_error() {
        // Both pattern A-nodes can only map to the single target A.
        let (p, t) = instance(
            &["A", "A", "B"],
            &[(0, 2, ""), (1, 2, "")],
            &["A", "B", "B"],
            &[(0, 1, ""), (0, 2, "")],
        );
        let prepared = prepare(&p, &t, &EngineConfig::new(Algorithm::RiDsSiFc)).unwrap();
        assert!(prepared.is_dead());
        let sink = CountingSink::new();
        assert_eq!(prepared.run_sequential(&sink).match_count, 0);
        // The plain variants agree on the count the slow way.
        assert_eq!(count(Algorithm::Ri, &p, &t), 0);
    }

    #[test]
    fn stats_times_are_consistent() {
        let (p, t) = instance(&["A"], &[], &["A"; 5], &[]);
        let sink = CountingSink::new();
        let stats =
            enumerate_sequential(&p, &t, &EngineConfig::new(Algorithm::RiDsSiFc), &sink).unwrap();
        assert_eq!(
            stats.total_time,
            stats.preprocessing_time + stats.matching_time
        );
    }

    #[test]
    fn timeout_reports_partial_work() {
        // A pathological all-A instance with a zero time limit: the run must
        // stop early and flag it.
        let labels = vec!["A"; 10];
        let t_arcs: Vec<(NodeId, NodeId, &str)> = (0..10u32)
            .flat_map(|u| (0..10u32).filter(move |&v| v != u).map(move |v| (u, v, "")))
            .collect();
        let p_arcs: Vec<(NodeId, NodeId, &str)> = (0..6u32)
            .flat_map(|u| (0..6u32).filter(move |&v| v != u).map(move |v| (u, v, "")))
            .collect();
        let (p, t) = instance(&labels[..6], &p_arcs, &labels, &t_arcs);
        let mut config = EngineConfig::new(Algorithm::Ri);
        config.time_limit = Some(Duration::ZERO);
        let sink = CountingSink::new();
        let stats = enumerate_sequential(&p, &t, &config, &sink).unwrap();
        assert!(stats.timed_out);
        // The probe runs every TIMEOUT_PROBE_INTERVAL checks, so the overshoot
        // is bounded by one interval.
        assert!(stats.search_space_size <= TIMEOUT_PROBE_INTERVAL);
    }

    #[test]
    fn bruteforce_counts_injective_placements() {
        // Unlabeled 2-node pattern with no arcs in a 4-node target:
        // 4 * 3 ordered placements.
        let (p, t) = instance(&["A", "A"], &[], &["A"; 4], &[]);
        let result = enumerate_bruteforce(&p, &t).unwrap();
        assert_eq!(result.count(), 12);
        // All mappings distinct.
        let mut dedup = result.matches.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 12);
    }

    #[test]
    fn bruteforce_rejects_oversized_instances() {
        let (p, t) = instance(&["A"; 2], &[], &["A"; 13], &[]);
        assert!(enumerate_bruteforce(&p, &t).is_err());
        let (p, t) = instance(&["A"; 9], &[], &["A"; 9], &[]);
        assert!(enumerate_bruteforce(&p, &t).is_err());
        let _ = (p, t);
    }

    #[test]
    fn algorithm_names_round_trip() {
        for algorithm in Algorithm::ALL {
            assert_eq!(algorithm.name().parse::<Algorithm>().unwrap(), algorithm);
        }
        assert!("vf2".parse::<Algorithm>().is_err());
    }
}
