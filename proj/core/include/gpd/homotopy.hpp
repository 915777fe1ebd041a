// Homotopy invariants of finite groupoids and of translation groupoids over
// complexes: pi0, pi1 via isotropy and via the 2-truncated nerve, pi1 of the
// combinatorial Borel model (X x EG)/G with its fiber and projection maps,
// the effect quotient of a simplicial action, and executable exactness
// checks for the induced sequences.

#pragma once

#include <gpd/bibundle.hpp>
#include <gpd/fpgroup.hpp>
#include <gpd/groupoid.hpp>
#include <gpd/simplicial.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gpd {

struct Pi0 {
  OrbitPartition partition;
  int basepoint_class = 0;
};

Pi0 pi0(FiniteGroupoid const &g, int basepoint = 0);

// For finite discrete groupoids pi1 is the isotropy group (and everything
// higher vanishes); cross-checked against pi1_nerve in the test suites.
Isotropy pi1_finite(FiniteGroupoid const &g, int a0);

// Fundamental group of the 2-truncated nerve at a0's component: one
// generator per arrow, relations from units, a spanning tree and all
// composable pairs; returned simplified.
GroupPresentation pi1_nerve(FiniteGroupoid const &g, int a0);

// Guard on the product complex driving the Borel model.
inline constexpr long kBorelCellGuard = 200'000;

struct BorelModel {
  ComplexAction action;
  int basepoint = 0;

  PosetProduct product;          // X x EG order complex
  ComplexAction total_action;    // diagonal action on the product
  std::vector<int> total_class;  // product vertex -> quotient vertex
  SimplicialComplex y;           // the homotopy quotient 2-skeleton
  int y_basepoint = 0;

  Pi1Data x_pi1;                  // spanning-tree presentation of X
  Pi1Data y_pi1;                  // raw presentation of the quotient
  GroupPresentation presentation; // simplified pi1 of the quotient
  Rewriter rewriter;              // raw quotient generators -> simplified
  std::vector<int> generator_origin;  // simplified generator -> raw generator

  GroupPresentation group_presentation;  // multiplication-table presentation of G
  PresentationMap fiber_map;             // x_pi1.presentation -> presentation
  PresentationMap proj_map;              // presentation -> group_presentation

  std::vector<int> canonical_lift;  // quotient vertex -> chosen product vertex
  std::vector<int> gen_label;       // raw quotient generator -> monodromy element
};

// pi1 of the 2-skeleton of (X x EG)/G at the image of (x0, e). X must be
// connected; throws std::length_error when the product exceeds the cell
// guard. fiber_map is induced by the slice inclusion of X, proj_map by the
// deck monodromy onto G.
BorelModel borel_pi1(ComplexAction const &a, int x0);

struct EffResult {
  bool uniform = true;
  int non_uniform_vertex = -1;      // witness when not uniform
  std::vector<int> kernel_elements; // elements acting trivially on every star
  FiniteGroup kernel;
  std::vector<int> coset_of;        // group element -> quotient element
  ComplexAction quotient_action;    // action of G/K on the same complex
};

// Star-pointwise-fixing elements form the discrete ineffective kernel. The
// uniform case (the star-fixers at every vertex coincide with the global
// kernel) yields the quotient action; otherwise only the witness is
// reported.
EffResult eff_translation(ComplexAction const &a);

enum class Verdict { Exact, ExactAbelianOnly, ObstructionFound, NotChecked };
std::string verdict_name(Verdict v);

struct SequenceCheck {
  struct Item {
    std::string name;
    bool pass = false;
    std::string detail;
  };
  std::vector<Item> items;
  Verdict overall = Verdict::NotChecked;
  std::string summary;
  bool passed() const {
    return overall == Verdict::Exact || overall == Verdict::ExactAbelianOnly;
  }
};

// Checks 0 -> pi1(X) -> pi1(Borel) -> G -> 0: composite triviality by
// evaluation in G, injectivity and middle exactness at the abelianized
// level, surjectivity of the projection (exactly, for |G| <= 8, via image
// generation), and the relative hom-count necessary conditions.
SequenceCheck check_example4_sequence(ComplexAction const &a, int x0);

// Checks 0 -> K -> pi1(G x X) -> pi1((G/K) x X) -> 0 through the two Borel
// models, at abelianized and hom-signature level. Requires the uniform
// kernel case and pi2(X) = 0 (X a 1-complex or a cone); reports not-checked
// otherwise.
SequenceCheck check_eff_sequence(ComplexAction const &a, int x0);

// True when X is a graph or a simplicial cone (both have vanishing pi2).
bool pi2_obstruction_ruled_out(SimplicialComplex const &x);

}  // namespace gpd
