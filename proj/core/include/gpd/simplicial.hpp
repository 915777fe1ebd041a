// 2-skeletal abstract simplicial complexes with simplicial group actions:
// spanning-tree fundamental group presentations, free contractible G-complexes,
// products, barycentric subdivision and quotients by free actions.

#pragma once

#include <gpd/fpgroup.hpp>
#include <gpd/group.hpp>

#include <map>
#include <vector>

namespace gpd {

class SimplicialComplex {
public:
  SimplicialComplex() = default;

  // Simplices are canonicalized (sorted, deduplicated). Throws
  // std::invalid_argument on degenerate simplices, out-of-range vertices or
  // a triangle whose edges are missing.
  static SimplicialComplex make(int n_vertices, std::vector<std::array<int, 2>> edges,
                                std::vector<std::array<int, 3>> triangles);

  int n_vertices() const { return n_vertices_; }
  std::vector<std::array<int, 2>> const &edges() const { return edges_; }
  std::vector<std::array<int, 3>> const &triangles() const { return triangles_; }

  bool has_edge(int a, int b) const;
  std::vector<std::vector<int>> const &neighbors() const { return adj_; }
  // star(v): v together with its edge-neighbors
  std::vector<int> star(int v) const;

  int euler_characteristic() const {
    return n_vertices_ - static_cast<int>(edges_.size()) + static_cast<int>(triangles_.size());
  }
  bool is_connected() const;

  bool operator==(SimplicialComplex const &) const = default;

private:
  int n_vertices_ = 0;
  std::vector<std::array<int, 2>> edges_;
  std::vector<std::array<int, 3>> triangles_;
  std::vector<std::vector<int>> adj_;
};

SimplicialComplex path_complex(int n_edges);   // vertices 0..n
SimplicialComplex cycle_complex(int n);        // boundary n-gon, n >= 3
SimplicialComplex grid_complex(int dim, int subdivisions);  // dim <= 2

// ---- group actions ------------------------------------------------------------

struct ComplexAction {
  FiniteGroup group;
  SimplicialComplex complex;
  std::vector<int> vertex_act;  // group.order() x n_vertices

  int act(int g, int v) const {
    return vertex_act[static_cast<size_t>(g) * complex.n_vertices() + v];
  }
  // simplicial automorphisms satisfying the action laws; throws otherwise
  void validate() const;
};

ComplexAction trivial_action(FiniteGroup group, SimplicialComplex complex);

// ---- fundamental group via spanning tree -----------------------------------------

struct Pi1Data {
  GroupPresentation presentation;  // generators = non-tree edges, oriented low -> high
  int basepoint = 0;
  std::vector<int> tree_parent;                 // -1 at the basepoint
  std::map<std::pair<int, int>, int> edge_gen;  // canonical edge -> generator, -1 for tree

  // Word of an edge path (consecutive vertices adjacent or equal); a loop at
  // the basepoint gives its class in the presentation.
  Word path_word(std::vector<int> const &vertices) const;
  // Tree path basepoint -> v.
  std::vector<int> tree_path(int v) const;
  // Class of the loop: tree path to u, edge (u, v), tree path back.
  Word edge_loop_word(int u, int v) const;
};

// Edge-path group presentation of a connected complex: tree edges die,
// triangles give length-3 relations. Throws std::invalid_argument when X is
// disconnected.
Pi1Data pi1_presentation(SimplicialComplex const &x, int basepoint);

// ---- constructions -----------------------------------------------------------------

// 2-skeleton of the three-fold join of G with itself: vertices are
// (level, element) with all cross-level simplices. Simply connected and the
// left multiplication action is free and level-preserving. Vertex ids are
// level * |G| + element.
ComplexAction eg_skeleton(FiniteGroup const &g);

// Staircase product triangulation truncated to dimension 2; realization is
// homotopy 2-equivalent to |x| x |y|. Vertex (a, b) has id a * y.n_vertices() + b.
SimplicialComplex product_2skeleton(SimplicialComplex const &x, SimplicialComplex const &y);

// Cells of a complex in a fixed order (vertices, then edges, then triangles).
struct CellList {
  std::vector<std::vector<int>> cells;
  std::map<std::vector<int>, int> index;
  int id(std::vector<int> key) const;
};
CellList cells_of(SimplicialComplex const &x);

struct Subdivision {
  SimplicialComplex complex;  // vertex i is cell i of the original
  CellList cells;
};
Subdivision barycentric_subdivision(SimplicialComplex const &x);
ComplexAction subdivide_action(ComplexAction const &a);

// Order complex of the product of face posets, truncated to dimension 2;
// triangulates |x| x |y| and is equivariant for cellwise actions.
struct PosetProduct {
  SimplicialComplex complex;
  CellList x_cells, y_cells;
  std::vector<std::pair<int, int>> vertex_cells;  // product vertex -> (x cell, y cell)
  std::map<std::pair<int, int>, int> vertex_index;
};
PosetProduct poset_product_2skeleton(SimplicialComplex const &x, SimplicialComplex const &y);

// Diagonal action g.(cx, cy) = (g.cx, g.cy) on the order-complex product;
// both actions must be by the same group (equal tables).
ComplexAction diagonal_action(PosetProduct const &prod, ComplexAction const &ax,
                              ComplexAction const &ay);

// ---- quotients ------------------------------------------------------------------

struct QuotientResult {
  SimplicialComplex quotient;
  ComplexAction action;             // the action actually used (after subdivisions)
  std::vector<int> vertex_class_of; // vertex of action.complex -> quotient vertex
  int subdivisions = 0;
};

// Quotient by a free simplicial action. Regularity (no simplex meets its own
// translate, orbit-injective labels) is enforced by barycentric subdivision,
// at most twice, then a hard error. Covering-space consistency is verified
// via Euler characteristic multiplicativity.
QuotientResult quotient_by_free_action(ComplexAction const &a);

}  // namespace gpd
