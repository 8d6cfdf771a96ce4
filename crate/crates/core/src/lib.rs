//! Heavy-subgraph conditions, closure operations and exact cycle oracles
//! for small simple graphs.

pub mod closure;
pub mod cycles;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod heavy;
pub mod pattern;

pub use closure::{
    c_closure, check_closed_shape, closure, closure_unchecked, ClosureError, ClosureKind, ClosureTrace, Policy,
    RegionMap,
};
pub use cycles::{circumference, hamiltonian_cycle, is_hamiltonian, CycleCertificate, OracleError};
pub use families::{find_induced_p_member, FamilyError, FamilyGraph, FamilySpec, Predicate};
pub use graph::{Graph, GraphError, VertexSet};
pub use heavy::{graph_satisfies, ConditionKind, HeavyError};
pub use pattern::{induced_copies, make_pattern, InducedCopy, PatternKind, PatternSpec};
