//! Per-pattern-node candidate domains.
//!
//! A domain `D(p)` is the set of target nodes that pattern node `p` may still
//! map to. Domains start from label and degree compatibility, are tightened by
//! arc-consistency refinement, and can be tightened further by forward-checking
//! singleton domains. The search consults them as an O(1) membership filter and
//! as the candidate source for positions with no parent.

use thiserror::Error;

use crate::bitset::Bitset;
use crate::graph::{LabeledDigraph, NodeId};

/// One bitset over target nodes per pattern node, with cached cardinalities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DomainTable {
    rows: Vec<Bitset>,
    cards: Vec<usize>,
    target_count: usize,
}

impl DomainTable {
    /// Builds a table from explicit member lists (mainly for tests and small
    /// fixtures). Members must be below `target_count`.
    pub fn from_members(target_count: usize, members: &[Vec<NodeId>]) -> Self {
        let mut rows = Vec::with_capacity(members.len());
        let mut cards = Vec::with_capacity(members.len());
        for list in members {
            let mut row = Bitset::new(target_count);
            for &t in list {
                row.insert(t as usize);
            }
            cards.push(row.count());
            rows.push(row);
        }
        DomainTable {
            rows,
            cards,
            target_count,
        }
    }

    pub fn pattern_count(&self) -> usize {
        self.rows.len()
    }

    pub fn target_count(&self) -> usize {
        self.target_count
    }

    pub fn row(&self, p: NodeId) -> &Bitset {
        &self.rows[p as usize]
    }

    /// Cardinality of `D(p)`.
    pub fn size(&self, p: NodeId) -> usize {
        self.cards[p as usize]
    }

    /// All cardinalities, indexed by pattern node (the shape the ordering
    /// options expect).
    pub fn sizes(&self) -> Vec<usize> {
        self.cards.clone()
    }

    pub fn contains(&self, p: NodeId, t: NodeId) -> bool {
        self.rows[p as usize].contains(t as usize)
    }

    /// Removes `t` from `D(p)`; returns true if it was present.
    pub fn remove(&mut self, p: NodeId, t: NodeId) -> bool {
        let removed = self.rows[p as usize].remove(t as usize);
        if removed {
            self.cards[p as usize] -= 1;
        }
        removed
    }

    /// True if any domain is empty, in which case no match exists and the
    /// search can be skipped entirely.
    pub fn any_empty(&self) -> bool {
        self.cards.contains(&0)
    }

    /// Sorted member list of `D(p)` (diagnostics and tests).
    pub fn row_vec(&self, p: NodeId) -> Vec<NodeId> {
        self.row(p).iter().map(|t| t as NodeId).collect()
    }
}

/// Initial domains: `t ∈ D(p)` iff the labels are equal and `t`'s in- and
/// out-degrees are at least `p`'s.
pub fn initial_domains(g_p: &LabeledDigraph, g_t: &LabeledDigraph) -> DomainTable {
    let nt = g_t.node_count();
    let mut rows = Vec::with_capacity(g_p.node_count());
    let mut cards = Vec::with_capacity(g_p.node_count());
    for p in 0..g_p.node_count() as NodeId {
        let mut row = Bitset::new(nt);
        for t in 0..nt as NodeId {
            if g_p.label(p) == g_t.label(t)
                && g_p.in_degree(p) <= g_t.in_degree(t)
                && g_p.out_degree(p) <= g_t.out_degree(t)
            {
                row.insert(t as usize);
            }
        }
        cards.push(row.count());
        rows.push(row);
    }
    DomainTable {
        rows,
        cards,
        target_count: nt,
    }
}

/// How far to push arc-consistency refinement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AcPasses {
    /// One sweep over all pattern nodes.
    Single,
    /// Sweep until no domain changes.
    Fixpoint,
}

/// Arc-consistency refinement, in place.
///
/// A target `t` stays in `D(p)` only if every pattern arc incident to `p` has
/// a supporting target arc: for each `p -> q` some `u ∈ D(q)` with a
/// label-compatible arc `t -> u`, and symmetrically for `q -> p`. A sweep
/// visits pattern nodes in id order and observes removals made earlier in the
/// same sweep; `Fixpoint` repeats sweeps until stable (the result is the
/// unique largest arc-consistent subtable, independent of sweep order).
/// Returns the number of removed candidates.
pub fn refine_arc_consistency(
    domains: &mut DomainTable,
    g_p: &LabeledDigraph,
    g_t: &LabeledDigraph,
    passes: AcPasses,
) -> usize {
    let mut removed_total = 0;
    let mut doomed: Vec<NodeId> = Vec::new();
    loop {
        let mut removed_this_pass = 0;
        for p in 0..g_p.node_count() as NodeId {
            doomed.clear();
            for t in domains.row(p).iter() {
                if !supported(domains, g_p, g_t, p, t as NodeId) {
                    doomed.push(t as NodeId);
                }
            }
            for &t in &doomed {
                domains.remove(p, t);
            }
            removed_this_pass += doomed.len();
        }
        removed_total += removed_this_pass;
        match passes {
            AcPasses::Single => break,
            AcPasses::Fixpoint if removed_this_pass == 0 => break,
            AcPasses::Fixpoint => {}
        }
    }
    removed_total
}

/// Does `t` have a label-compatible supporting arc in the current domains for
/// every pattern arc incident to `p`?
fn supported(
    domains: &DomainTable,
    g_p: &LabeledDigraph,
    g_t: &LabeledDigraph,
    p: NodeId,
    t: NodeId,
) -> bool {
    for (q, lab) in g_p.out_arcs(p) {
        let ok = g_t
            .out_arcs(t)
            .any(|(u, tlab)| tlab == lab && domains.contains(q, u));
        if !ok {
            return false;
        }
    }
    for (q, lab) in g_p.in_arcs(p) {
        let ok = g_t
            .in_arcs(t)
            .any(|(u, tlab)| tlab == lab && domains.contains(q, u));
        if !ok {
            return false;
        }
    }
    true
}

/// Two pattern nodes pinned to the same single target: no match can exist.
/// This is an early "zero matches" signal, not a fatal error.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("pattern nodes {first} and {second} both have the singleton domain {{{target}}}")]
pub struct ConflictingSingletons {
    pub first: NodeId,
    pub second: NodeId,
    pub target: NodeId,
}

/// Forward-checks singleton domains, in place.
///
/// The sole candidate of every singleton domain is removed from all other
/// domains (an injective mapping cannot reuse it); removals that create new
/// singletons are processed the same way until none remain.
pub fn forward_check_singletons(domains: &mut DomainTable) -> Result<(), ConflictingSingletons> {
    let n = domains.pattern_count() as NodeId;
    let mut queue: Vec<NodeId> = (0..n).filter(|&p| domains.size(p) == 1).collect();
    let mut processed = vec![false; n as usize];
    while let Some(p) = queue.pop() {
        if processed[p as usize] {
            continue;
        }
        processed[p as usize] = true;
        let t = domains
            .row(p)
            .iter()
            .next()
            .expect("singleton domain cannot be empty") as NodeId;
        for q in 0..n {
            if q == p || !domains.contains(q, t) {
                continue;
            }
            if domains.size(q) == 1 {
                return Err(ConflictingSingletons {
                    first: p.min(q),
                    second: p.max(q),
                    target: t,
                });
            }
            domains.remove(q, t);
            if domains.size(q) == 1 {
                queue.push(q);
            }
        }
    }
    Ok(())
}
