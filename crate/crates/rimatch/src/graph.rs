//! Labeled directed graphs and their text format.
//!
//! Graphs are simple digraphs (no self-loops, no duplicate arcs) with a string
//! label per node and an optional string label per arc. Labels are interned
//! into dense integer ids through a [`LabelRegistry`] so that all label
//! comparisons during search are integer comparisons. A pattern graph and a
//! target graph that are matched against each other must be interned through
//! the *same* registry.
//!
//! The text format, line by line:
//!
//! ```text
//! #<name>
//! <node count N>
//! <node 0 label>
//! ...
//! <node N-1 label>
//! <arc count M>
//! <u> <v>            (unlabeled arc u -> v)
//! <u> <v> <label>    (labeled arc u -> v)
//! ```
//!
//! Node ids are 0-based, fields are separated by single spaces and lines end
//! with `\n`. [`write_graph`] emits arcs sorted by `(u, v)`; parsing accepts
//! arcs in any order.

use std::collections::HashMap;

use thiserror::Error;

/// Node index within one graph.
pub type NodeId = u32;
/// Dense id of an interned label.
pub type LabelId = u32;

#[derive(Default, Clone)]
struct Interner {
    names: Vec<String>,
    ids: HashMap<String, LabelId>,
}

impl Interner {
    fn intern(&mut self, name: &str) -> LabelId {
        if let Some(&id) = self.ids.get(name) {
            return id;
        }
        let id = self.names.len() as LabelId;
        self.names.push(name.to_owned());
        self.ids.insert(name.to_owned(), id);
        id
    }

    fn name(&self, id: LabelId) -> &str {
        &self.names[id as usize]
    }
}

/// Bijective mapping between label strings and dense [`LabelId`]s, with
/// separate id spaces for node labels and arc labels.
///
/// Arcs written without a label are interned as the empty string.
#[derive(Default, Clone)]
pub struct LabelRegistry {
    nodes: Interner,
    arcs: Interner,
}

impl LabelRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn intern_node_label(&mut self, name: &str) -> LabelId {
        self.nodes.intern(name)
    }

    pub fn intern_arc_label(&mut self, name: &str) -> LabelId {
        self.arcs.intern(name)
    }

    pub fn node_label_name(&self, id: LabelId) -> &str {
        self.nodes.name(id)
    }

    pub fn arc_label_name(&self, id: LabelId) -> &str {
        self.arcs.name(id)
    }

    pub fn node_label_count(&self) -> usize {
        self.nodes.names.len()
    }

    pub fn arc_label_count(&self) -> usize {
        self.arcs.names.len()
    }
}

/// Problems detected while assembling a graph from node labels and an arc list.
///
/// `index` is the position of the offending arc in the input slice, which the
/// parser maps back to a line number.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("arc {index}: endpoint {endpoint} out of range (graph has {node_count} nodes)")]
    EndpointOutOfRange {
        index: usize,
        endpoint: u64,
        node_count: usize,
    },
    #[error("arc {index}: self-loop at node {node}")]
    SelfLoop { index: usize, node: NodeId },
    #[error("arc {index}: duplicate arc {from} -> {to}")]
    DuplicateArc {
        index: usize,
        from: NodeId,
        to: NodeId,
    },
}

/// A simple directed graph with dense node ids, interned labels and
/// compressed adjacency.
///
/// Out-neighbors, in-neighbors and the undirected neighborhood of every node
/// are stored as flat sorted arrays, so neighbor scans are cache-friendly and
/// arc lookups are binary searches.
#[derive(Clone, PartialEq, Eq)]
pub struct LabeledDigraph {
    name: String,
    labels: Vec<LabelId>,
    arc_count: usize,
    out_off: Vec<u32>,
    out_nbr: Vec<NodeId>,
    out_lab: Vec<LabelId>,
    in_off: Vec<u32>,
    in_nbr: Vec<NodeId>,
    in_lab: Vec<LabelId>,
    und_off: Vec<u32>,
    und_nbr: Vec<NodeId>,
}

impl LabeledDigraph {
    /// Builds a graph from per-node labels and `(from, to, arc label)` triples.
    ///
    /// Label ids are taken at face value; the caller keeps them coherent with
    /// whatever registry it uses. Rejects out-of-range endpoints, self-loops
    /// and duplicate arcs (regardless of arc label).
    pub fn from_parts(
        name: impl Into<String>,
        labels: Vec<LabelId>,
        arcs: &[(NodeId, NodeId, LabelId)],
    ) -> Result<Self, BuildError> {
        let n = labels.len();
        let mut seen = HashMap::with_capacity(arcs.len());
        for (index, &(u, v, _)) in arcs.iter().enumerate() {
            for endpoint in [u, v] {
                if endpoint as usize >= n {
                    return Err(BuildError::EndpointOutOfRange {
                        index,
                        endpoint: endpoint as u64,
                        node_count: n,
                    });
                }
            }
            if u == v {
                return Err(BuildError::SelfLoop { index, node: u });
            }
            if seen.insert((u, v), ()).is_some() {
                return Err(BuildError::DuplicateArc {
                    index,
                    from: u,
                    to: v,
                });
            }
        }

        let mut out_deg = vec![0u32; n];
        let mut in_deg = vec![0u32; n];
        for &(u, v, _) in arcs {
            out_deg[u as usize] += 1;
            in_deg[v as usize] += 1;
        }
        let out_off = prefix_sums(&out_deg);
        let in_off = prefix_sums(&in_deg);

        let mut out_nbr = vec![0; arcs.len()];
        let mut out_lab = vec![0; arcs.len()];
        let mut in_nbr = vec![0; arcs.len()];
        let mut in_lab = vec![0; arcs.len()];
        let mut out_cursor: Vec<u32> = out_off[..n].to_vec();
        let mut in_cursor: Vec<u32> = in_off[..n].to_vec();
        for &(u, v, lab) in arcs {
            let c = out_cursor[u as usize] as usize;
            out_nbr[c] = v;
            out_lab[c] = lab;
            out_cursor[u as usize] += 1;
            let c = in_cursor[v as usize] as usize;
            in_nbr[c] = u;
            in_lab[c] = lab;
            in_cursor[v as usize] += 1;
        }
        for v in 0..n {
            sort_adjacency(&out_off, &mut out_nbr, &mut out_lab, v);
            sort_adjacency(&in_off, &mut in_nbr, &mut in_lab, v);
        }

        // Undirected neighborhood: sorted union of in- and out-neighbors.
        let mut und_off = vec![0u32; n + 1];
        let mut und_nbr = Vec::with_capacity(arcs.len());
        for v in 0..n {
            let o = &out_nbr[out_off[v] as usize..out_off[v + 1] as usize];
            let i = &in_nbr[in_off[v] as usize..in_off[v + 1] as usize];
            merge_dedup(o, i, &mut und_nbr);
            und_off[v + 1] = und_nbr.len() as u32;
        }

        Ok(LabeledDigraph {
            name: name.into(),
            labels,
            arc_count: arcs.len(),
            out_off,
            out_nbr,
            out_lab,
            in_off,
            in_nbr,
            in_lab,
            und_off,
            und_nbr,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn label(&self, v: NodeId) -> LabelId {
        self.labels[v as usize]
    }

    pub fn out_degree(&self, v: NodeId) -> usize {
        let v = v as usize;
        (self.out_off[v + 1] - self.out_off[v]) as usize
    }

    pub fn in_degree(&self, v: NodeId) -> usize {
        let v = v as usize;
        (self.in_off[v + 1] - self.in_off[v]) as usize
    }

    /// Number of distinct neighbors, ignoring arc direction.
    pub fn degree(&self, v: NodeId) -> usize {
        self.neighborhood(v).len()
    }

    /// Out-neighbors of `v` in ascending id order.
    pub fn out_neighbors(&self, v: NodeId) -> &[NodeId] {
        let v = v as usize;
        &self.out_nbr[self.out_off[v] as usize..self.out_off[v + 1] as usize]
    }

    /// In-neighbors of `v` in ascending id order.
    pub fn in_neighbors(&self, v: NodeId) -> &[NodeId] {
        let v = v as usize;
        &self.in_nbr[self.in_off[v] as usize..self.in_off[v + 1] as usize]
    }

    /// Out-arcs of `v` as `(neighbor, arc label)` pairs in ascending neighbor order.
    pub fn out_arcs(&self, v: NodeId) -> impl Iterator<Item = (NodeId, LabelId)> + '_ {
        let v = v as usize;
        let range = self.out_off[v] as usize..self.out_off[v + 1] as usize;
        self.out_nbr[range.clone()]
            .iter()
            .copied()
            .zip(self.out_lab[range].iter().copied())
    }

    /// In-arcs of `v` as `(source, arc label)` pairs in ascending source order.
    pub fn in_arcs(&self, v: NodeId) -> impl Iterator<Item = (NodeId, LabelId)> + '_ {
        let v = v as usize;
        let range = self.in_off[v] as usize..self.in_off[v + 1] as usize;
        self.in_nbr[range.clone()]
            .iter()
            .copied()
            .zip(self.in_lab[range].iter().copied())
    }

    /// All nodes adjacent to `v` in either direction, deduplicated, in
    /// ascending id order.
    pub fn neighborhood(&self, v: NodeId) -> &[NodeId] {
        let v = v as usize;
        &self.und_nbr[self.und_off[v] as usize..self.und_off[v + 1] as usize]
    }

    /// Label of the arc `u -> v`, or `None` if the arc does not exist.
    pub fn arc_label(&self, u: NodeId, v: NodeId) -> Option<LabelId> {
        let (off, nbr) = (&self.out_off, &self.out_nbr);
        let range = off[u as usize] as usize..off[u as usize + 1] as usize;
        let slice = &nbr[range.clone()];
        slice
            .binary_search(&v)
            .ok()
            .map(|i| self.out_lab[range.start + i])
    }

    pub fn has_arc(&self, u: NodeId, v: NodeId) -> bool {
        self.arc_label(u, v).is_some()
    }

    /// All arcs as `(from, to, arc label)` triples in `(from, to)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (NodeId, NodeId, LabelId)> + '_ {
        (0..self.node_count() as NodeId)
            .flat_map(move |u| self.out_arcs(u).map(move |(v, lab)| (u, v, lab)))
    }
}

fn prefix_sums(degrees: &[u32]) -> Vec<u32> {
    let mut off = vec![0u32; degrees.len() + 1];
    for (i, &d) in degrees.iter().enumerate() {
        off[i + 1] = off[i] + d;
    }
    off
}

fn sort_adjacency(off: &[u32], nbr: &mut [NodeId], lab: &mut [LabelId], v: usize) {
    let range = off[v] as usize..off[v + 1] as usize;
    let mut pairs: Vec<(NodeId, LabelId)> = nbr[range.clone()]
        .iter()
        .copied()
        .zip(lab[range.clone()].iter().copied())
        .collect();
    pairs.sort_unstable_by_key(|&(n, _)| n);
    for (i, (n, l)) in pairs.into_iter().enumerate() {
        nbr[range.start + i] = n;
        lab[range.start + i] = l;
    }
}

fn merge_dedup(a: &[NodeId], b: &[NodeId], out: &mut Vec<NodeId>) {
    let (mut i, mut j) = (0, 0);
    let mut last: Option<NodeId> = None;
    while i < a.len() || j < b.len() {
        let next = if j >= b.len() || (i < a.len() && a[i] <= b[j]) {
            let x = a[i];
            i += 1;
            x
        } else {
            let x = b[j];
            j += 1;
            x
        };
        if last != Some(next) {
            out.push(next);
            last = Some(next);
        }
    }
}

/// Rejection diagnostics for the text format. Every variant names the
/// offending 1-based line.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: malformed header, expected '#<name>'")]
    MalformedHeader { line: usize },
    #[error("line {line}: malformed count, expected a decimal integer")]
    MalformedCount { line: usize },
    #[error("line {line}: node count must be at least 1")]
    EmptyGraph { line: usize },
    #[error("line {line}: malformed arc, expected 'u v' or 'u v <label>'")]
    MalformedArc { line: usize },
    #[error("line {line}: node index {index} out of range (graph has {node_count} nodes)")]
    NodeIndexOutOfRange {
        line: usize,
        index: u64,
        node_count: usize,
    },
    #[error("line {line}: self-loop at node {node}")]
    SelfLoop { line: usize, node: NodeId },
    #[error("line {line}: duplicate arc {from} -> {to}")]
    DuplicateArc {
        line: usize,
        from: NodeId,
        to: NodeId,
    },
    #[error("line {line}: unexpected end of input, expected {expected}")]
    UnexpectedEnd { line: usize, expected: &'static str },
    #[error("line {line}: trailing data after the arc list")]
    TrailingData { line: usize },
}

/// Parses the text format, interning labels through `registry`.
pub fn parse_graph(src: &str, registry: &mut LabelRegistry) -> Result<LabeledDigraph, ParseError> {
    let mut lines = src.lines().enumerate().map(|(i, l)| (i + 1, l));
    let mut line_no = 0;
    let mut next_line = |expected: &'static str| -> Result<(usize, &str), ParseError> {
        match lines.next() {
            Some((no, l)) => Ok((no, l)),
            None => Err(ParseError::UnexpectedEnd {
                line: line_no + 1,
                expected,
            }),
        }
    };

    let (no, header) = next_line("header")?;
    line_no = no;
    let name = header
        .strip_prefix('#')
        .ok_or(ParseError::MalformedHeader { line: no })?;

    let (no, count_line) = next_line("node count")?;
    line_no = no;
    let node_count: usize = count_line
        .parse()
        .map_err(|_| ParseError::MalformedCount { line: no })?;
    if node_count == 0 {
        return Err(ParseError::EmptyGraph { line: no });
    }

    let mut labels = Vec::with_capacity(node_count);
    for _ in 0..node_count {
        let (no, label_line) = next_line("node label")?;
        line_no = no;
        labels.push(registry.intern_node_label(label_line));
    }

    let (no, count_line) = next_line("arc count")?;
    line_no = no;
    let arc_count: usize = count_line
        .parse()
        .map_err(|_| ParseError::MalformedCount { line: no })?;

    let mut arcs = Vec::with_capacity(arc_count);
    let mut arc_lines = Vec::with_capacity(arc_count);
    for _ in 0..arc_count {
        let (no, arc_line) = next_line("arc")?;
        line_no = no;
        let mut fields = arc_line.splitn(3, ' ');
        let u = parse_endpoint(fields.next(), no, node_count)?;
        let v = parse_endpoint(fields.next(), no, node_count)?;
        let label = match fields.next() {
            // A present-but-empty third field would not survive a write/parse
            // round trip ("u v " vs "u v"), so it is rejected.
            Some("") => return Err(ParseError::MalformedArc { line: no }),
            Some(name) => name,
            None => "",
        };
        arcs.push((u, v, registry.intern_arc_label(label)));
        arc_lines.push(no);
    }

    if let Some((no, _)) = lines.next() {
        return Err(ParseError::TrailingData { line: no });
    }

    LabeledDigraph::from_parts(name, labels, &arcs).map_err(|e| match e {
        // Endpoints were range-checked above; only the arc-list errors remain.
        BuildError::SelfLoop { index, node } => ParseError::SelfLoop {
            line: arc_lines[index],
            node,
        },
        BuildError::DuplicateArc { index, from, to } => ParseError::DuplicateArc {
            line: arc_lines[index],
            from,
            to,
        },
        BuildError::EndpointOutOfRange {
            index, endpoint, ..
        } => ParseError::NodeIndexOutOfRange {
            line: arc_lines[index],
            index: endpoint,
            node_count,
        },
    })
}

fn parse_endpoint(
    field: Option<&str>,
    line: usize,
    node_count: usize,
) -> Result<NodeId, ParseError> {
    let text = field.ok_or(ParseError::MalformedArc { line })?;
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::MalformedArc { line });
    }
    let value: u64 = text.parse().map_err(|_| ParseError::MalformedArc { line })?;
    if value >= node_count as u64 {
        return Err(ParseError::NodeIndexOutOfRange {
            line,
            index: value,
            node_count,
        });
    }
    Ok(value as NodeId)
}

/// Serializes a graph to the text format with arcs in `(u, v)` order.
///
/// Parsing the output through a fresh registry reproduces the graph; writing
/// it again reproduces the bytes.
pub fn write_graph(g: &LabeledDigraph, registry: &LabelRegistry) -> String {
    let mut out = String::new();
    out.push('#');
    out.push_str(g.name());
    out.push('\n');
    out.push_str(&g.node_count().to_string());
    out.push('\n');
    for v in 0..g.node_count() {
        out.push_str(registry.node_label_name(g.label(v as NodeId)));
        out.push('\n');
    }
    out.push_str(&g.arc_count().to_string());
    out.push('\n');
    for u in 0..g.node_count() as NodeId {
        for (v, lab) in g.out_arcs(u) {
            out.push_str(&u.to_string());
            out.push(' ');
            out.push_str(&v.to_string());
            let name = registry.arc_label_name(lab);
            if !name.is_empty() {
                out.push(' ');
                out.push_str(name);
            }
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Test convenience: intern string labels and build the graph in one step.
    pub(crate) fn graph(
        name: &str,
        labels: &[&str],
        arcs: &[(NodeId, NodeId)],
    ) -> (LabelRegistry, LabeledDigraph) {
        let mut reg = LabelRegistry::new();
        let ids: Vec<LabelId> = labels.iter().map(|l| reg.intern_node_label(l)).collect();
        let unlabeled = reg.intern_arc_label("");
        let triples: Vec<(NodeId, NodeId, LabelId)> =
            arcs.iter().map(|&(u, v)| (u, v, unlabeled)).collect();
        let g = LabeledDigraph::from_parts(name, ids, &triples).unwrap();
        (reg, g)
    }

    #[test]
    fn parses_minimal_graph() {
        let mut reg = LabelRegistry::new();
        let g = parse_graph("#g\n1\nA\n0\n", &mut reg).unwrap();
        assert_eq!(g.name(), "g");
        assert_eq!(g.node_count(), 1);
        assert_eq!(g.arc_count(), 0);
        assert_eq!(reg.node_label_name(g.label(0)), "A");
    }

    #[test]
    fn parses_arcs_and_labels() {
        let mut reg = LabelRegistry::new();
        let src = "#t\n3\nA\nB\nA\n3\n0 1\n1 2 x\n2 0\n";
        let g = parse_graph(src, &mut reg).unwrap();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.arc_count(), 3);
        assert!(g.has_arc(0, 1));
        assert!(g.has_arc(1, 2));
        assert!(!g.has_arc(1, 0));
        assert_eq!(reg.arc_label_name(g.arc_label(1, 2).unwrap()), "x");
        assert_eq!(reg.arc_label_name(g.arc_label(0, 1).unwrap()), "");
        assert_eq!(g.label(0), g.label(2));
        assert_ne!(g.label(0), g.label(1));
    }

    #[test]
    fn rejects_bad_header() {
        let mut reg = LabelRegistry::new();
        assert_eq!(
            parse_graph("g\n1\nA\n0\n", &mut reg),
            Err(ParseError::MalformedHeader { line: 1 })
        );
    }

    #[test]
    fn rejects_out_of_range_endpoint() {
        let mut reg = LabelRegistry::new();
        assert_eq!(
            parse_graph("#g\n2\nA\nA\n1\n0 2\n", &mut reg),
            Err(ParseError::NodeIndexOutOfRange {
                line: 6,
                index: 2,
                node_count: 2
            })
        );
    }

    #[test]
    fn rejects_duplicate_arc_naming_second_line() {
        let mut reg = LabelRegistry::new();
        assert_eq!(
            parse_graph("#g\n2\nA\nA\n2\n0 1\n0 1\n", &mut reg),
            Err(ParseError::DuplicateArc {
                line: 7,
                from: 0,
                to: 1
            })
        );
    }

    #[test]
    fn duplicate_check_ignores_arc_label() {
        let mut reg = LabelRegistry::new();
        assert_eq!(
            parse_graph("#g\n2\nA\nA\n2\n0 1 x\n0 1 y\n", &mut reg),
            Err(ParseError::DuplicateArc {
                line: 7,
                from: 0,
                to: 1
            })
        );
    }

    #[test]
    fn rejects_self_loop() {
        let mut reg = LabelRegistry::new();
        assert_eq!(
            parse_graph("#g\n2\nA\nA\n1\n1 1\n", &mut reg),
            Err(ParseError::SelfLoop { line: 6, node: 1 })
        );
    }

    #[test]
    fn rejects_truncated_input() {
        let mut reg = LabelRegistry::new();
        assert_eq!(
            parse_graph("#g\n2\nA\n", &mut reg),
            Err(ParseError::UnexpectedEnd {
                line: 4,
                expected: "node label"
            })
        );
        assert_eq!(
            parse_graph("#g\n2\nA\nA\n2\n0 1\n", &mut reg),
            Err(ParseError::UnexpectedEnd {
                line: 7,
                expected: "arc"
            })
        );
    }

    #[test]
    fn rejects_zero_nodes_and_bad_counts() {
        let mut reg = LabelRegistry::new();
        assert_eq!(
            parse_graph("#g\n0\n0\n", &mut reg),
            Err(ParseError::EmptyGraph { line: 2 })
        );
        assert_eq!(
            parse_graph("#g\nx\n", &mut reg),
            Err(ParseError::MalformedCount { line: 2 })
        );
    }

    #[test]
    fn rejects_malformed_arcs() {
        let mut reg = LabelRegistry::new();
        for bad in ["0", "0  1", "0 -1", "a b", "0 1 "] {
            let src = format!("#g\n2\nA\nA\n1\n{bad}\n");
            assert_eq!(
                parse_graph(&src, &mut reg),
                Err(ParseError::MalformedArc { line: 6 }),
                "arc line {bad:?} should be rejected"
            );
        }
    }

    #[test]
    fn rejects_trailing_data() {
        let mut reg = LabelRegistry::new();
        assert_eq!(
            parse_graph("#g\n1\nA\n0\nextra\n", &mut reg),
            Err(ParseError::TrailingData { line: 5 })
        );
    }

    #[test]
    fn adjacency_views_are_sorted_and_consistent() {
        let (_, g) = graph(
            "g",
            &["A"; 5],
            &[(3, 1), (0, 1), (0, 4), (2, 0), (4, 0), (1, 2)],
        );
        assert_eq!(g.out_neighbors(0), &[1, 4]);
        assert_eq!(g.in_neighbors(0), &[2, 4]);
        assert_eq!(g.neighborhood(0), &[1, 2, 4]);
        assert_eq!(g.out_degree(0), 2);
        assert_eq!(g.in_degree(0), 2);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.neighborhood(1), &[0, 2, 3]);
    }

    #[test]
    fn writes_canonical_form() {
        let mut reg = LabelRegistry::new();
        let src = "#t\n3\nA\nB\nA\n3\n2 0\n0 1 x\n1 2\n";
        let g = parse_graph(src, &mut reg).unwrap();
        assert_eq!(write_graph(&g, &reg), "#t\n3\nA\nB\nA\n3\n0 1 x\n1 2\n2 0\n");
    }

    /// Brute-force neighborhood oracle: scan the whole arc list.
    fn neighborhood_oracle(n: usize, arcs: &[(NodeId, NodeId)], v: NodeId) -> Vec<NodeId> {
        let mut nbr: Vec<NodeId> = (0..n as NodeId)
            .filter(|&w| {
                arcs.iter()
                    .any(|&(a, b)| (a == v && b == w) || (a == w && b == v))
            })
            .collect();
        nbr.sort_unstable();
        nbr
    }

    fn arbitrary_arcs(max_nodes: usize) -> impl Strategy<Value = (usize, Vec<(NodeId, NodeId)>)> {
        (1..=max_nodes).prop_flat_map(|n| {
            let arcs = proptest::collection::vec((0..n as NodeId, 0..n as NodeId), 0..40)
                .prop_map(|mut pairs| {
                    pairs.retain(|&(u, v)| u != v);
                    pairs.sort_unstable();
                    pairs.dedup();
                    pairs
                });
            (Just(n), arcs)
        })
    }

    proptest! {
        #[test]
        fn neighborhood_matches_arc_scan((n, arcs) in arbitrary_arcs(12)) {
            let labels = vec!["A"; n];
            let (_, g) = graph("g", &labels, &arcs);
            for v in 0..n as NodeId {
                prop_assert_eq!(g.neighborhood(v), neighborhood_oracle(n, &arcs, v).as_slice());
                prop_assert!(g.degree(v) <= g.in_degree(v) + g.out_degree(v));
            }
        }

        #[test]
        fn write_parse_write_is_identity((n, arcs) in arbitrary_arcs(10), label_picks in proptest::collection::vec(0u8..4, 10)) {
            let labels: Vec<String> = (0..n).map(|i| format!("L{}", label_picks[i % label_picks.len()])).collect();
            let label_refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
            let (reg, g) = graph("g", &label_refs, &arcs);
            let first = write_graph(&g, &reg);
            let mut reg2 = LabelRegistry::new();
            let reparsed = parse_graph(&first, &mut reg2).unwrap();
            let second = write_graph(&reparsed, &reg2);
            prop_assert_eq!(first, second);
        }
    }
}
