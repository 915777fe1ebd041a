#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gpd/simplicial.hpp>

#include <random>

using namespace gpd;

namespace {

ComplexAction rotation_action(int n, int step) {
  ComplexAction a;
  int order = n / std::gcd(n, step);
  a.group = cyclic_group(order);
  a.complex = cycle_complex(n);
  a.vertex_act.resize(static_cast<size_t>(order) * n);
  for (int g = 0; g < order; ++g)
    for (int v = 0; v < n; ++v)
      a.vertex_act[static_cast<size_t>(g) * n + v] = (v + g * step) % n;
  a.validate();
  return a;
}

SimplicialComplex filled_triangle() {
  return SimplicialComplex::make(3, {{0, 1}, {0, 2}, {1, 2}}, {{0, 1, 2}});
}

bool pi1_trivial_certificate(SimplicialComplex const &x, int base) {
  auto data = pi1_presentation(x, base);
  auto simp = simplify_presentation(data.presentation);
  Abelianization ab = abelianization(simp.presentation);
  if (ab.free_rank != 0 || !ab.torsion.empty()) return false;
  return hom_count(simp.presentation, symmetric_group(3)) == 1 &&
         hom_count(simp.presentation, symmetric_group(4)) == 1;
}

}  // namespace

TEST_CASE("complex construction and validation") {
  CHECK_THROWS_AS(SimplicialComplex::make(3, {{0, 0}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(SimplicialComplex::make(3, {{0, 1}}, {{0, 1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(SimplicialComplex::make(2, {{0, 3}}, {}), std::invalid_argument);
  SimplicialComplex t = filled_triangle();
  CHECK(t.euler_characteristic() == 1);
  CHECK(t.is_connected());
  CHECK(t.star(0) == std::vector<int>{0, 1, 2});
}

TEST_CASE("fundamental group presentations of pinned complexes") {
  SUBCASE("path graphs are simply connected") {
    auto data = pi1_presentation(path_complex(5), 0);
    CHECK(data.presentation.generators() == 0);
    CHECK(abelianization(data.presentation).free_rank == 0);
  }
  SUBCASE("the hexagon circle") {
    auto data = pi1_presentation(cycle_complex(6), 0);
    CHECK(data.presentation.generators() == 1);
    CHECK(data.presentation.relators().empty());
    Abelianization ab = abelianization(data.presentation);
    CHECK(ab.free_rank == 1);
    CHECK(ab.torsion.empty());
    CHECK(hom_count(data.presentation, cyclic_group(2)) == 2);
  }
  SUBCASE("a filled triangle is simply connected") {
    CHECK(pi1_trivial_certificate(filled_triangle(), 0));
  }
  SUBCASE("disconnected input is rejected") {
    SimplicialComplex two = SimplicialComplex::make(2, {}, {});
    CHECK_THROWS_AS(pi1_presentation(two, 0), std::invalid_argument);
  }
  SUBCASE("graph rank is 1 - Euler characteristic") {
    std::mt19937 rng(404);
    for (int trial = 0; trial < 30; ++trial) {
      // random connected graph on n vertices
      int n = 2 + static_cast<int>(rng() % 6);
      std::vector<std::array<int, 2>> edges;
      for (int v = 1; v < n; ++v) edges.push_back({static_cast<int>(rng() % v), v});
      for (int extra = static_cast<int>(rng() % 5); extra > 0; --extra) {
        int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
        if (a != b) edges.push_back({std::min(a, b), std::max(a, b)});
      }
      SimplicialComplex x = SimplicialComplex::make(n, edges, {});
      auto data = pi1_presentation(x, 0);
      CHECK(abelianization(data.presentation).free_rank == 1 - x.euler_characteristic());
    }
  }
}

TEST_CASE("path words multiply along loops") {
  auto data = pi1_presentation(cycle_complex(4), 0);
  Word loop = data.path_word({0, 1, 2, 3, 0});
  CHECK(loop.size() == 1);
  Word backwards = data.path_word({0, 3, 2, 1, 0});
  CHECK(backwards == inverse_word(loop));
  CHECK(data.edge_loop_word(0, 1).empty());  // tree edge loops are trivial
  // the loop through the unique non-tree edge generates
  auto non_tree = std::find_if(data.edge_gen.begin(), data.edge_gen.end(),
                               [](auto const &kv) { return kv.second >= 0; });
  REQUIRE(non_tree != data.edge_gen.end());
  Word gen_loop = data.edge_loop_word(non_tree->first.first, non_tree->first.second);
  CHECK(gen_loop.size() == 1);
}

TEST_CASE("grid complexes") {
  SUBCASE("dimension 1 is a path") {
    SimplicialComplex g = grid_complex(1, 4);
    CHECK(g.n_vertices() == 5);
    CHECK(pi1_trivial_certificate(g, 0));
  }
  SUBCASE("dimension 2 is simply connected") {
    SimplicialComplex g = grid_complex(2, 2);
    CHECK(g.euler_characteristic() == 1);
    CHECK(pi1_trivial_certificate(g, 0));
  }
  SUBCASE("dimension 3 rejected") { CHECK_THROWS_AS(grid_complex(3, 2), std::invalid_argument); }
}

TEST_CASE("free contractible complexes for small groups") {
  for (auto const &g : {trivial_group(), cyclic_group(2), cyclic_group(3), cyclic_group(4),
                        symmetric_group(3)}) {
    ComplexAction eg = eg_skeleton(g);
    eg.validate();
    CHECK(eg.complex.is_connected());
    CHECK(pi1_trivial_certificate(eg.complex, 0));
    // freeness, exhaustively
    for (int h = 0; h < g.order(); ++h) {
      if (h == g.identity()) continue;
      for (int v = 0; v < eg.complex.n_vertices(); ++v) CHECK(eg.act(h, v) != v);
    }
  }
}

TEST_CASE("staircase products") {
  SUBCASE("point x Y is Y") {
    SimplicialComplex y = cycle_complex(5);
    SimplicialComplex p = product_2skeleton(grid_complex(0, 1), y);
    CHECK(p == y);
  }
  SUBCASE("square is contractible") {
    SimplicialComplex p = product_2skeleton(path_complex(2), path_complex(2));
    CHECK(pi1_trivial_certificate(p, 0));
  }
  SUBCASE("torus abelianization is Z^2") {
    SimplicialComplex t = product_2skeleton(cycle_complex(4), cycle_complex(4));
    auto data = pi1_presentation(t, 0);
    Abelianization ab = abelianization(simplify_presentation(data.presentation).presentation);
    CHECK(ab.free_rank == 2);
    CHECK(ab.torsion.empty());
  }
  SUBCASE("graph products have multiplicative Euler characteristic") {
    SimplicialComplex a = cycle_complex(6), b = path_complex(3);
    CHECK(product_2skeleton(a, b).euler_characteristic() ==
          a.euler_characteristic() * b.euler_characteristic());
    CHECK(product_2skeleton(a, a).euler_characteristic() == 0);
  }
}

TEST_CASE("poset products triangulate the product") {
  SUBCASE("Euler characteristic on graph factors") {
    SimplicialComplex a = cycle_complex(4), b = path_complex(2);
    PosetProduct p = poset_product_2skeleton(a, b);
    CHECK(p.complex.euler_characteristic() ==
          a.euler_characteristic() * b.euler_characteristic());
    CHECK(p.complex.is_connected());
  }
  SUBCASE("torus fundamental group") {
    PosetProduct p = poset_product_2skeleton(cycle_complex(4), cycle_complex(4));
    auto data = pi1_presentation(p.complex, 0);
    Abelianization ab = abelianization(simplify_presentation(data.presentation).presentation);
    CHECK(ab.free_rank == 2);
    CHECK(ab.torsion.empty());
  }
  SUBCASE("diagonal actions are simplicial and free when one factor is free") {
    ComplexAction eg = eg_skeleton(cyclic_group(2));
    ComplexAction refl;  // reflection of the 6-cycle, with fixed vertices
    refl.group = cyclic_group(2);
    refl.complex = cycle_complex(6);
    refl.vertex_act = {0, 1, 2, 3, 4, 5, 0, 5, 4, 3, 2, 1};
    refl.validate();
    PosetProduct prod = poset_product_2skeleton(refl.complex, eg.complex);
    ComplexAction diag = diagonal_action(prod, refl, eg);
    diag.validate();
    for (int v = 0; v < diag.complex.n_vertices(); ++v) CHECK(diag.act(1, v) != v);
  }
}

TEST_CASE("barycentric subdivision") {
  SUBCASE("triangle boundary becomes a hexagon") {
    Subdivision sub = barycentric_subdivision(cycle_complex(3));
    CHECK(sub.complex.n_vertices() == 6);
    CHECK(sub.complex.edges().size() == 6);
    auto data = pi1_presentation(sub.complex, 0);
    Abelianization ab = abelianization(data.presentation);
    CHECK(ab.free_rank == 1);
  }
  SUBCASE("filled triangle stays contractible") {
    Subdivision sub = barycentric_subdivision(filled_triangle());
    CHECK(sub.complex.n_vertices() == 7);
    CHECK(sub.complex.triangles().size() == 6);
    CHECK(sub.complex.euler_characteristic() == 1);
    CHECK(pi1_trivial_certificate(sub.complex, 0));
  }
  SUBCASE("subdivided actions stay valid") {
    ComplexAction rot = rotation_action(6, 1);
    ComplexAction sub = subdivide_action(rot);
    CHECK_NOTHROW(sub.validate());
  }
}

TEST_CASE("quotients by free actions") {
  SUBCASE("trivial group returns the complex") {
    ComplexAction a = trivial_action(trivial_group(), cycle_complex(6));
    QuotientResult q = quotient_by_free_action(a);
    CHECK(q.quotient == a.complex);
    CHECK(q.subdivisions == 0);
  }
  SUBCASE("antipodal quotient of the hexagon is a 3-cycle") {
    ComplexAction a = rotation_action(6, 3);
    QuotientResult q = quotient_by_free_action(a);
    CHECK(q.subdivisions == 0);
    CHECK(q.quotient.n_vertices() == 3);
    CHECK(q.quotient.edges().size() == 3);
    Abelianization ab = abelianization(pi1_presentation(q.quotient, 0).presentation);
    CHECK(ab.free_rank == 1);
    CHECK(ab.torsion.empty());
  }
  SUBCASE("rotation by two needs a subdivision") {
    ComplexAction a = rotation_action(6, 2);
    QuotientResult q = quotient_by_free_action(a);
    CHECK(q.subdivisions >= 1);
    Abelianization ab = abelianization(pi1_presentation(q.quotient, 0).presentation);
    CHECK(ab.free_rank == 1);
    CHECK(ab.torsion.empty());
  }
  SUBCASE("non-free actions are rejected") {
    ComplexAction fix = trivial_action(cyclic_group(2), cycle_complex(4));
    CHECK_THROWS_AS(quotient_by_free_action(fix), std::invalid_argument);
  }
  SUBCASE("EG quotients have the right size") {
    for (auto const &g : {cyclic_group(2), cyclic_group(3)}) {
      ComplexAction eg = eg_skeleton(g);
      QuotientResult q = quotient_by_free_action(eg);
      CHECK(eg.complex.euler_characteristic() ==
            g.order() * q.quotient.euler_characteristic());
    }
  }
}
