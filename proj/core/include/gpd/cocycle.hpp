// Groupoid-valued cocycles on grid covers and the ordered lifting algorithm
// along functors whose object map is surjective and whose arrows lift with
// prescribed source.

#pragma once

#include <gpd/bibundle.hpp>
#include <gpd/groupoid.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gpd {

// Cells are the multi-indices {1..N}^dim in row-major order; two closed
// cells are adjacent iff every coordinate differs by at most one (faces and
// corners both count).
struct GridCover {
  int dim = 1;  // 0, 1 or 2
  int N = 1;

  int cell_count() const;
  std::vector<int> coords(int cell) const;       // dim entries in 1..N
  int cell_id(std::vector<int> const &c) const;  // inverse of coords
  bool adjacent(int a, int b) const;
  std::vector<int> neighbors(int cell) const;  // ascending, excludes the cell

  void validate() const;  // throws std::invalid_argument
  bool operator==(GridCover const &) const = default;
};

struct Cocycle {
  GridCover cover;
  GroupoidRef groupoid;
  std::vector<int> f;  // cell -> object
  // dense cell x cell arrow table; defined exactly on adjacent-or-equal pairs
  std::vector<int> g;

  int transition(int mu, int nu) const {
    return g[static_cast<size_t>(mu) * cover.cell_count() + nu];
  }
  void set_transition(int mu, int nu, int arrow) {
    g[static_cast<size_t>(mu) * cover.cell_count() + nu] = arrow;
  }
};

struct CocycleViolation {
  std::string message;
};

// Checks the domain of g, the anchor equations src(g_{mu nu}) = f_nu and
// tgt(g_{mu nu}) = f_mu, units on the diagonal, and the triple condition
// g_{mu nu} g_{nu kappa} = g_{mu kappa} on pairwise-adjacent triples.
std::vector<CocycleViolation> validate_cocycle(Cocycle const &c, size_t max_reports = 50);

Cocycle constant_cocycle(GridCover cover, GroupoidRef groupoid, int object);

// Coboundary action: f'_mu = tgt(lambda_mu), g'_{mu nu} = lambda_mu g_{mu nu}
// lambda_nu^-1; requires src(lambda_mu) = f_mu.
Cocycle coboundary_twist(Cocycle const &c, std::vector<int> const &lambda);

// Componentwise image cocycle {phi(f_mu), phi(g_{mu nu})}; the structure
// groupoid of c must be the source of phi.
Cocycle pushforward(GroupoidFunctor const &phi, Cocycle const &c);

struct LiftHypothesesReport {
  bool objects_surjective = false;
  bool arrows_lift_with_source = false;  // (phi, src) onto target arrows x compatible objects
  int missed_object = -1;
  std::array<int, 2> unliftable{-1, -1};  // (target arrow, source object) with no lift
  bool ok() const { return objects_surjective && arrows_lift_with_source; }
};

LiftHypothesesReport check_lift_hypotheses(GroupoidFunctor const &phi);

// Lifts a cocycle over the target of phi to one over its source, cell by
// cell in lexicographic order: the transition into the least processed
// neighbour is lifted freely (least arrow id) and fixes the new object lift;
// every other processed transition is forced through an already-lifted
// pairwise-adjacent intermediary. The result pushes forward to c exactly.
// `seed` optionally prescribes the object lift of the first cell.
Cocycle lift_cocycle(GroupoidFunctor const &phi, Cocycle const &c,
                     std::optional<int> seed = std::nullopt);

struct CechBundle {
  GroupoidRef cech;  // pair groupoid on the cover cells
  Bibundle bundle;   // left Cech, right structure groupoid
};

// The bundle determined by a cocycle: total set is one fiber copy
// { (mu, g) : tgt(g) = f_mu } per cell, the pair-groupoid action transports
// along tree chains (single-step transport is g_{nu mu} . -), and the right
// action composes. Principal over the Cech groupoid.
CechBundle cocycle_to_bundle(Cocycle const &c);

// Local sections of a principal bundle over the pair groupoid of the cover
// cells, turned back into a cocycle (least-point sections).
Cocycle cocycle_from_cech_bundle(Bibundle const &b, GridCover const &cover);

// Coboundary search over the connecting arrows at the first cell; exhaustive.
bool cocycles_equivalent(Cocycle const &a, Cocycle const &b);

}  // namespace gpd
