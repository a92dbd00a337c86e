//! Graph representations and plumbing: loopless [`SimpleGraph`] (the counted
//! graph), [`TargetGraph`] (the colour graph, loops and vertex weights
//! allowed), named-family constructors, graph6 serialization, and canonical
//! forms for isomorphism dedup.

mod canon;
mod graph6;
mod simple;
mod target;

pub use canon::{canonical_form, canonical_graph, is_isomorphic, CanonicalForm};
pub use graph6::{parse_graph6, write_graph6};
pub use simple::{FamilyGraph, FamilyKind, SimpleGraph, MAX_VERTICES};
pub use target::{format_rational, parse_rational, TargetGraph};

pub mod family {
    //! Constructors for the named graph families, with their documented
    //! vertex labellings.
    pub use super::simple::{
        complete, complete_bipartite, cycle, disjoint_union, make_family, path, star,
    };
    pub use super::target::{complete_target, h_ind, h_wr, hard_core, looped_complete};
}
