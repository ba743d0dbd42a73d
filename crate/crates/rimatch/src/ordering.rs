//! Static variable ordering for the pattern graph.
//!
//! The search assigns pattern nodes in a fixed order `mu` chosen greedily
//! before matching starts: each step picks the unplaced node that is most
//! constrained by the nodes already placed, so failures happen as close to the
//! root of the search tree as possible. Arc direction is ignored here; all
//! adjacency below is the undirected neighborhood.

use thiserror::Error;

use crate::graph::{LabeledDigraph, NodeId};

/// Result of the greedy ordering: the node permutation plus, per position,
/// the earliest previously-placed neighbor (the "parent") whose image will
/// supply the candidate targets for this position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableOrdering {
    mu: Vec<NodeId>,
    parents: Vec<Option<NodeId>>,
    positions: Vec<u32>,
}

impl VariableOrdering {
    /// The pattern nodes in assignment order.
    pub fn mu(&self) -> &[NodeId] {
        &self.mu
    }

    pub fn len(&self) -> usize {
        self.mu.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mu.is_empty()
    }

    pub fn node_at(&self, pos: usize) -> NodeId {
        self.mu[pos]
    }

    /// Position of `node` within `mu`.
    pub fn position_of(&self, node: NodeId) -> usize {
        self.positions[node as usize] as usize
    }

    /// Parent pattern node for position `pos`: the node earliest in `mu`
    /// adjacent (either direction) to `mu[pos]`, if any. Always earlier in the
    /// ordering than `pos` itself.
    pub fn parent(&self, pos: usize) -> Option<NodeId> {
        self.parents[pos]
    }

    /// Position of the parent of position `pos` within `mu`.
    pub fn parent_position(&self, pos: usize) -> Option<usize> {
        self.parents[pos].map(|p| self.position_of(p))
    }

    /// One line per position: `pos node parent`, with `-` for no parent.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (pos, &node) in self.mu.iter().enumerate() {
            match self.parents[pos] {
                Some(p) => out.push_str(&format!("{pos} {node} {p}\n")),
                None => out.push_str(&format!("{pos} {node} -\n")),
            }
        }
        out
    }
}

/// Knobs for the domain-aware ordering variants. The plain ordering uses the
/// default (all off).
#[derive(Debug, Clone, Default)]
pub struct OrderingOptions {
    /// Place all pattern nodes whose domain has exactly one candidate at the
    /// front of the ordering, keeping their relative greedy order.
    pub singleton_first: bool,
    /// Break ties in the greedy key by preferring the smaller domain.
    pub domain_tiebreak: bool,
    /// Per-pattern-node domain cardinalities; required by either flag above.
    pub domain_sizes: Option<Vec<usize>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrderingError {
    #[error("pattern graph has no nodes")]
    EmptyPattern,
    #[error("ordering options require domain sizes for all {expected} pattern nodes")]
    DomainSizesRequired { expected: usize },
}

/// Number of neighbors of `v` already placed in the prefix.
pub fn weight_mapped(g: &LabeledDigraph, in_prefix: &[bool], v: NodeId) -> usize {
    g.neighborhood(v)
        .iter()
        .filter(|&&w| in_prefix[w as usize])
        .count()
}

/// Number of placed nodes `w` that share an *unplaced* common neighbor with
/// `v`: placing `v` constrains those future assignments too.
pub fn weight_neighborhood(g: &LabeledDigraph, in_prefix: &[bool], v: NodeId) -> usize {
    let mut counted = vec![false; g.node_count()];
    let mut total = 0;
    for &x in g.neighborhood(v) {
        if in_prefix[x as usize] {
            continue;
        }
        for &w in g.neighborhood(x) {
            if in_prefix[w as usize] && !counted[w as usize] {
                counted[w as usize] = true;
                total += 1;
            }
        }
    }
    total
}

/// Builds the greedy ordering.
///
/// Every step maximizes the key `(weight_mapped, weight_neighborhood, degree)`
/// lexicographically over the unplaced nodes; with `domain_tiebreak` a smaller
/// domain wins remaining ties, and the final tie-break is always the smallest
/// node id, making the result deterministic. On the empty prefix both weights
/// are zero, so the first pick is a maximum-degree node. With
/// `singleton_first`, nodes whose domain is a single candidate are then moved
/// to the front, preserving their relative order. Parents are computed from
/// the final ordering.
pub fn build_ordering(
    g: &LabeledDigraph,
    options: &OrderingOptions,
) -> Result<VariableOrdering, OrderingError> {
    let n = g.node_count();
    if n == 0 {
        return Err(OrderingError::EmptyPattern);
    }
    let domain_sizes = match (
        options.singleton_first || options.domain_tiebreak,
        &options.domain_sizes,
    ) {
        (true, Some(sizes)) if sizes.len() == n => Some(sizes.as_slice()),
        (true, _) => return Err(OrderingError::DomainSizesRequired { expected: n }),
        (false, _) => None,
    };

    let mut in_prefix = vec![false; n];
    let mut wm = vec![0usize; n];
    let mut mu: Vec<NodeId> = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<(NodeId, (usize, usize, usize))> = None;
        for v in 0..n as NodeId {
            if in_prefix[v as usize] {
                continue;
            }
            let key = (
                wm[v as usize],
                weight_neighborhood(g, &in_prefix, v),
                g.degree(v),
            );
            let better = match &best {
                None => true,
                Some((b, bkey)) => match key.cmp(bkey) {
                    std::cmp::Ordering::Greater => true,
                    std::cmp::Ordering::Less => false,
                    std::cmp::Ordering::Equal => {
                        if options.domain_tiebreak {
                            let sizes = domain_sizes.unwrap();
                            sizes[v as usize] < sizes[*b as usize]
                        } else {
                            false // equal keys: keep the smaller id found first
                        }
                    }
                },
            };
            if better {
                best = Some((v, key));
            }
        }
        let (pick, _) = best.unwrap();
        in_prefix[pick as usize] = true;
        for &w in g.neighborhood(pick) {
            wm[w as usize] += 1;
        }
        mu.push(pick);
    }

    if options.singleton_first {
        let sizes = domain_sizes.unwrap();
        let (front, back): (Vec<NodeId>, Vec<NodeId>) =
            mu.iter().partition(|&&v| sizes[v as usize] == 1);
        mu = front;
        mu.extend(back);
    }

    let mut positions = vec![0u32; n];
    for (pos, &v) in mu.iter().enumerate() {
        positions[v as usize] = pos as u32;
    }
    let parents = mu
        .iter()
        .enumerate()
        .map(|(pos, &v)| {
            mu[..pos]
                .iter()
                .copied()
                .find(|&w| g.neighborhood(v).contains(&w))
        })
        .collect();

    Ok(VariableOrdering {
        mu,
        parents,
        positions,
    })
}
