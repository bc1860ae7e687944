//! Ribbon graphs as signed rotation systems, with partial duality,
//! ribbon graph minors, biseparations, and three independent deciders for
//! whether a ribbon graph has a partial dual of Euler genus at most one.

pub mod arrows;
pub mod biseparation;
pub mod bouquet;
pub mod canon;
pub mod characterize;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod graph;
pub mod knots;
pub mod minors;
pub mod pdual;
pub mod structure;
pub mod subset;

pub use arrows::{from_arrow_presentation, to_arrow_presentation, Arrow, ArrowPresentation, Direction};
pub use biseparation::{
    biseparation_kind, defines_biseparation, find_biseparation, find_biseparation_with_cap, separating_vertices, theorem2_check,
    theorem2_mismatches, BiseparationCertificate, BiseparationKind, ComponentGenus,
};
pub use bouquet::{
    arc_labelling, extract_obstruction, find_obstruction_minor, intersection_graph, is_bouquet, minimal_odd_cycle,
    quotient_graph, two_colouring_to_rp2_biseparation, ArcLabel, BouquetSplit, ObstructionBranch,
};
pub use canon::{
    are_equivalent, canonical_form, canonical_representative, find_isomorphism, from_canonical_form, labeled_form,
    CanonicalForm, Isomorphism, LabeledForm,
};
pub use characterize::{
    decide, decide_biseparation, decide_brute, decide_excluded_minor, decide_with, obstruction_search, pinned_obstructions, Limits,
    pinned_plane_obstructions, spanning_tree_reduction, verify_theorem1, Decision, Witness,
};
pub use enumerate::{count_classes, enumerate, enumerate_with_cap, EnumerationSpec};
pub use error::{Error, GraphError, Result};
pub use format::{parse_rg, to_rg_string};
pub use graph::{Edge, End, HalfEdge, RibbonGraph, Vertex};
pub use knots::{all_a_ribbon_graph, knot_report, representable_in_rp3, KnotReport, PdCode, SignedGaussCode};
pub use minors::{
    apply_step, contract_edge, delete_edge, delete_vertex, eq1_check, has_any_minor, has_minor, labeled_minors, minor_classes,
    one_step_minors, replay, verify_certificate, MinorCertificate, MinorSearch, MinorStep,
};
pub use pdual::{genus_profile, genus_profile_with_cap, geometric_dual, partial_dual, partial_dual_mask, GenusProfile};
pub use structure::{
    boundary_components, components, euler_genus, face_count, is_connected, is_orientable, num_components, restrict,
    BandSide, BoundaryWalk, Corner,
};
pub use subset::EdgeSubset;
