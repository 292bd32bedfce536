#pragma once

#include "k0wb/bundle.hpp"

// Programmatic builders for the example bundles the acceptance tests
// consume. Each builder is deterministic and documents its oracle in
// the bundle's provenance string.

namespace k0wb::gallery {

// mod kA2 for the quiver 1 -> 2: indecomposables {S2, P1, S1}, basis
// morphisms a: S2 -> P1 and b: P1 -> S1 with b∘a = 0, conflation
// generator S2 -> P1 -> S1. Structure constants come from two-vertex
// quiver representation computations.
Bundle build_mod_a2();

// The additive subcategory D = add{2, 3, 2/3, 1/2} of the bounded
// derived category of kA3, with Seq_D generated by 3 -> 2/3 -> 2.
Bundle build_paper_example_d();

// Window |i| <= radius of the bounded derived category of kA2:
// indecomposables P2[i], P1[i], S1[i] with the rotation conflation
// families and identity rotations, shift = index increment.
Bundle build_derived_window_a2(int radius = 2);

// Cluster category of A2 via the F-orbit construction on the radius-3
// window, F = tau^{-1}∘[1]; five representatives, pentagon Homs,
// conflations transported from the window. Declares X = add{P1, P2}.
Bundle build_cluster_a2();

// The right-exact structure on mod kA2: sequence generators
// (A, f, B, coker f) for every basis morphism plus C -> 0 -> 0 shapes,
// weak equivalences the isomorphisms.
Bundle build_rightexact_structure(const Bundle& base);
Bundle build_rightexact_mod_a2();

std::vector<std::string> bundle_names();
Bundle build(const std::string& name, int window_radius = 2);

}  // namespace k0wb::gallery
