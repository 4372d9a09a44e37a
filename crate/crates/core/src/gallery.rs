//! A small catalog of causal diagrams that exercise the identification
//! routines. These are the regression fixtures used throughout the test
//! suites; the CLI ships the same graphs as text files.

use crate::graph::Admg;

/// X -> Z -> Y with X <-> Y: the treatment reaches the outcome only through
/// the mediator Z, while a latent confounder couples X and Y directly.
pub fn front_door() -> Admg {
    Admg::parse("X -> Z\nZ -> Y\nX <-> Y").unwrap()
}

/// X -> Y with X <-> Y: the unshielded confounded edge. The canonical
/// non-identifiable causal effect.
pub fn bow() -> Admg {
    Admg::parse("X -> Y\nX <-> Y").unwrap()
}

/// X -> Y with X <-> W <-> Y: W is a childless collider between two latent
/// confounders. P(y|do(x)) is identifiable, but conditioning on W opens the
/// path X <-> W <-> Y, so P(y|w,do(x)) is not.
pub fn bidirected_collider() -> Admg {
    Admg::parse("X -> Y\nX <-> W\nW <-> Y").unwrap()
}

/// S -> Z -> X -> Y with X <-> S and S <-> Y. The causal effect of X on Y is
/// identifiable even though a bidirected path X <-> S <-> Y reaches a child
/// of X, because that path climbs through an ancestor of X. The treated
/// counterfactual is not identifiable here.
pub fn ancestral_confounder_chain() -> Admg {
    Admg::parse("S -> Z\nZ -> X\nX -> Y\nX <-> S\nS <-> Y").unwrap()
}

/// X -> Z -> Y with X <-> Z and X <-> Y: front door plus confounding of the
/// mediator. Nothing about the treated counterfactual survives here, even
/// given every interventional distribution.
pub fn confounded_front_door() -> Admg {
    Admg::parse("X -> Z\nZ -> Y\nX <-> Z\nX <-> Y").unwrap()
}

/// X1 -> X2 -> Y, X1 -> Y, X2 <-> Y: two ordered treatments where the later
/// one is confounded with the outcome.
pub fn sequential_treatments_confounded() -> Admg {
    Admg::parse("X1 -> X2\nX1 -> Y\nX2 -> Y\nX2 <-> Y").unwrap()
}

/// X1 -> X2, X1 -> W, X2 -> W, W -> Y, X2 <-> Y: two treatments feeding a
/// shared mediator W; the joint treated counterfactual is identifiable.
pub fn sequential_treatments_mediated() -> Admg {
    Admg::parse("X1 -> X2\nX1 -> W\nX2 -> W\nW -> Y\nX2 <-> Y").unwrap()
}

/// The mediated two-treatment diagram with the treatments confounded with
/// each other: identifiable from interventions but not from observations.
pub fn sequential_treatments_mediated_confounded() -> Admg {
    Admg::parse("X1 -> X2\nX1 -> W\nX2 -> W\nW -> Y\nX2 <-> Y\nX1 <-> X2").unwrap()
}

/// Z -> X -> Y with Z -> Y: the classic measured-confounder adjustment graph.
pub fn measured_confounder() -> Admg {
    Admg::parse("Z -> X\nX -> Y\nZ -> Y").unwrap()
}
