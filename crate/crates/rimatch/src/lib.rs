//! Subgraph enumeration on labeled directed graphs.
//!
//! Given a pattern graph and a target graph over a shared label space, the
//! engine enumerates every injective mapping of pattern nodes to target nodes
//! under which each pattern arc has a same-direction, label-compatible target
//! arc (extra target arcs are allowed). Search follows a constraint-first
//! static variable ordering with short-circuit pruning; the `ri-ds` family
//! additionally precomputes per-pattern-node candidate domains, refines them by
//! arc consistency, and can tighten ordering and domains further via domain
//! size tie-breaking and singleton forward checking. Enumeration runs either
//! sequentially or on a receiver-initiated work-stealing scheduler with
//! private per-worker deques.

pub mod bitset;
pub mod domains;
pub mod engine;
pub mod generate;
pub mod graph;
pub mod ordering;
pub mod scheduler;

pub use bitset::Bitset;
pub use domains::{
    forward_check_singletons, initial_domains, refine_arc_consistency, AcPasses,
    ConflictingSingletons, DomainTable,
};
pub use engine::{
    enumerate_bruteforce, enumerate_sequential, prepare, Algorithm, BruteForceResult,
    CollectingSink, CountingSink, EngineConfig, EngineError, InstanceTooLarge, MatchSink,
    Prepared, SearchStats,
};
pub use generate::{
    extract_pattern, generate_instance, generate_target, GenerateError, GeneratorSpec,
    LabelDistribution, PatternMode, SmallInstanceOptions,
};
pub use graph::{
    parse_graph, write_graph, BuildError, LabelId, LabelRegistry, LabeledDigraph, NodeId,
    ParseError,
};
pub use ordering::{build_ordering, OrderingError, OrderingOptions, VariableOrdering};
pub use scheduler::{run_parallel, ParallelOptions, SchedulerAudit};
