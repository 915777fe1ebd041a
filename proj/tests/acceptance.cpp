// Acceptance suite: one pass/fail line per criterion, exact expectations
// throughout (the underlying results are exact sequences and isomorphisms,
// not numerics). Exit status is the number of failed criteria.

#include <gpd/bibundle.hpp>
#include <gpd/catalog.hpp>
#include <gpd/cocycle.hpp>
#include <gpd/homotopy.hpp>
#include <gpd/intmat.hpp>

#include "helpers.hpp"
#include "snf_oracle.hpp"

#include <cstdio>
#include <random>

using namespace gpd;
using gpd::testing::all_group_homs;
using gpd::testing::block_functor;
using gpd::testing::random_groupoid;
using gpd::testing::random_small_group;
using gpd::testing::snf_diagonal_oracle;

namespace {

int failures = 0;

void report(int number, bool pass, std::string const &what) {
  std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", number, what.c_str());
  if (!pass) ++failures;
}

ComplexAction cyclic_complex_action(SimplicialComplex complex, int group_order,
                                    std::vector<int> generator_image) {
  ComplexAction a;
  a.group = cyclic_group(group_order);
  a.complex = std::move(complex);
  int n = a.complex.n_vertices();
  a.vertex_act.resize(static_cast<size_t>(group_order) * n);
  for (int v = 0; v < n; ++v) a.vertex_act[v] = v;
  for (int g = 1; g < group_order; ++g)
    for (int v = 0; v < n; ++v)
      a.vertex_act[static_cast<size_t>(g) * n + v] =
          generator_image[a.vertex_act[static_cast<size_t>(g - 1) * n + v]];
  a.validate();
  return a;
}

std::vector<int> rotation_map(int n, int step) {
  std::vector<int> map(n);
  for (int v = 0; v < n; ++v) map[v] = (v + step) % n;
  return map;
}

std::vector<int> cycle_reflection_map(int n) {
  std::vector<int> map(n);
  for (int v = 0; v < n; ++v) map[v] = (n - v) % n;
  return map;
}

// ---- criterion 1: the Moebius reproduction ---------------------------------

void criterion_mobius() {
  CatalogEntry const *entry = find_catalog_entry("mobius");
  bool pass = entry != nullptr;
  if (pass) pass = entry->run().pass;
  // independent recomputation of the pinned values
  if (pass) {
    std::vector<int> refl(9);
    for (int v = 0; v < 9; ++v) refl[v] = 8 - v;
    ComplexAction a = cyclic_complex_action(path_complex(8), 2, refl);
    BorelModel borel = borel_pi1(a, 0);
    Abelianization ab = abelianization(borel.presentation);
    pass = ab.free_rank == 0 && ab.torsion == std::vector<Int>{2};
    pass = pass && hom_signature(borel.presentation) ==
                       hom_signature(presentation_of_group(cyclic_group(2)));
  }
  report(1, pass, "moebius model: pi1 = Z/2 with matching hom signature (exact)");
}

// ---- criterion 2: pair groupoid collapse ------------------------------------

void criterion_pair_collapse() {
  bool pass = true;
  GroupoidRef point = make_groupoid(unit_groupoid(1));
  for (int n = 1; n <= 6 && pass; ++n) {
    GroupoidRef pair_n = make_groupoid(pair_groupoid(n));
    MoritaDecision d = morita_equivalent(pair_n, point);
    pass = d.equivalent && d.witness && is_principal(*d.witness).principal() &&
           is_left_principal(*d.witness).principal();
    for (int x = 0; x < n && pass; ++x) pass = pi1_finite(*pair_n, x).group.order() == 1;
  }
  report(2, pass, "pair groupoids on 1..6 points collapse to the point with validated witnesses");
}

// ---- criterion 3: group delooping ---------------------------------------------

void criterion_delooping() {
  bool pass = true;
  std::vector<std::pair<std::string, FiniteGroup>> groups = {
      {"Z2", cyclic_group(2)},
      {"Z3", cyclic_group(3)},
      {"Z4", cyclic_group(4)},
      {"Z2xZ2", direct_product(cyclic_group(2), cyclic_group(2))},
      {"S3", symmetric_group(3)}};
  for (auto const &[name, g] : groups) {
    FiniteGroupoid one = group_as_groupoid(g);
    bool isotropy_route = group_isomorphism(pi1_finite(one, 0).group, g).has_value();
    bool nerve_route = probably_isomorphic(pi1_nerve(one, 0), presentation_of_group(g))
                           .verdict == IsoVerdict::YesCertified;
    if (!isotropy_route || !nerve_route) {
      pass = false;
      std::printf("       delooping failed for %s\n", name.c_str());
    }
  }
  report(3, pass, "pi1 of one-object groupoids certified isomorphic to the group, both routes");
}

// ---- criterion 4: example-4 exactness over ten actions -------------------------

void criterion_example4() {
  std::vector<std::pair<std::string, ComplexAction>> actions;
  actions.emplace_back("free Z2 antipodal on C6",
                       cyclic_complex_action(cycle_complex(6), 2, rotation_map(6, 3)));
  actions.emplace_back("free Z3 rotation on C6",
                       cyclic_complex_action(cycle_complex(6), 3, rotation_map(6, 2)));
  actions.emplace_back("free Z2 antipodal on C8",
                       cyclic_complex_action(cycle_complex(8), 2, rotation_map(8, 4)));
  actions.emplace_back("fixed-point Z2 reflection on C6",
                       cyclic_complex_action(cycle_complex(6), 2, cycle_reflection_map(6)));
  {
    std::vector<int> refl(9);
    for (int v = 0; v < 9; ++v) refl[v] = 8 - v;
    actions.emplace_back("fixed-point Z2 reflection on P8",
                         cyclic_complex_action(path_complex(8), 2, refl));
  }
  actions.emplace_back("trivial Z3 on C6", trivial_action(cyclic_group(3), cycle_complex(6)));
  actions.emplace_back("mixed Z2 reflection on C5",
                       cyclic_complex_action(cycle_complex(5), 2, cycle_reflection_map(5)));
  actions.emplace_back("Z6 on the point", trivial_action(cyclic_group(6), grid_complex(0, 1)));
  actions.emplace_back("Z4 on C6 through the antipode",
                       cyclic_complex_action(cycle_complex(6), 4, rotation_map(6, 3)));
  {
    // S3 acting on a 2-edge path through its sign character
    ComplexAction a;
    a.group = symmetric_group(3);
    a.complex = path_complex(2);
    a.vertex_act.resize(6 * 3);
    for (int g = 0; g < 6; ++g) {
      bool odd = false;
      {
        // parity of the permutation g in the lex table of S3
        FiniteGroup s3 = symmetric_group(3);
        odd = s3.element_order(g) == 2;  // transpositions are the odd elements of S3
      }
      for (int v = 0; v < 3; ++v) a.vertex_act[static_cast<size_t>(g) * 3 + v] = odd ? 2 - v : v;
    }
    a.validate();
    actions.emplace_back("S3 on P2 through the sign character", std::move(a));
  }

  bool pass = actions.size() == 10;
  for (auto const &[name, action] : actions) {
    SequenceCheck check = check_example4_sequence(action, 0);
    if (!check.passed()) {
      pass = false;
      std::printf("       obstruction for: %s (%s)\n", name.c_str(), check.summary.c_str());
    }
  }
  report(4, pass,
         "example-4 sequences exact at the abelianized level with no hom-signature "
         "obstruction on 10 actions");
}

// ---- criterion 5: eff sequences ---------------------------------------------------

void criterion_eff() {
  CatalogEntry const *entry = find_catalog_entry("eff-z4-c6");
  bool pass = entry && entry->run().pass;
  {
    SequenceCheck check =
        check_eff_sequence(cyclic_complex_action(cycle_complex(6), 4, rotation_map(6, 3)), 0);
    pass = pass && check.overall == Verdict::ExactAbelianOnly;
  }
  // effective actions: certified isomorphism pi1 = pi1(eff)
  {
    SequenceCheck antipodal =
        check_eff_sequence(cyclic_complex_action(cycle_complex(6), 2, rotation_map(6, 3)), 0);
    std::vector<int> refl(9);
    for (int v = 0; v < 9; ++v) refl[v] = 8 - v;
    SequenceCheck mirrored =
        check_eff_sequence(cyclic_complex_action(path_complex(8), 2, refl), 0);
    pass = pass && antipodal.overall == Verdict::Exact && mirrored.overall == Verdict::Exact;
  }
  report(5, pass,
         "eff sequence 0 -> Z2 -> pi1(Z4xC6) -> pi1(Z2xC6) -> 0 at abelian + hom level; "
         "effective actions certified");
}

// ---- criterion 6: cocycle lift round trips -----------------------------------------

void criterion_cocycle_lifts() {
  std::mt19937 rng(20250808);
  bool pass = true;
  int performed = 0;
  while (performed < 200 && pass) {
    // qualifying functor: product projection blocks are epimorphisms on
    // objects and lift arrows at every source
    FiniteGroup k2 = random_small_group(rng);
    FiniteGroup extra = rng() % 2 ? random_small_group(rng) : trivial_group();
    FiniteGroup k = direct_product(k2, extra);
    int m2 = 1 + static_cast<int>(rng() % 2);
    int m = m2 + static_cast<int>(rng() % 2);
    GroupoidRef src = make_groupoid(product_groupoid(group_as_groupoid(k), pair_groupoid(m)));
    GroupoidRef dst = make_groupoid(product_groupoid(group_as_groupoid(k2), pair_groupoid(m2)));
    std::vector<int> theta(k.order());
    for (int e = 0; e < k.order(); ++e) theta[e] = e / extra.order();
    std::vector<int> obj(m);
    for (int i = 0; i < m; ++i) obj[i] = i % m2;
    GroupoidFunctor phi = block_functor(src, dst, k, k2, theta, m, m2, obj);
    if (!check_lift_hypotheses(phi).ok()) {
      pass = false;
      break;
    }

    GridCover cover = rng() % 2 ? GridCover{2, 1 + static_cast<int>(rng() % 4)}
                                : GridCover{1, 1 + static_cast<int>(rng() % 4)};
    int base_obj = static_cast<int>(rng() % dst->n_objects());
    Cocycle c = constant_cocycle(cover, dst, base_obj);
    std::vector<int> lambda(cover.cell_count());
    auto const &out = dst->arrows_from(base_obj);
    for (int &l : lambda) l = out[rng() % out.size()];
    c = coboundary_twist(c, lambda);

    try {
      Cocycle lifted = lift_cocycle(phi, c);
      Cocycle back = pushforward(phi, lifted);
      pass = back.f == c.f && back.g == c.g && validate_cocycle(lifted).empty();
    } catch (std::exception const &e) {
      std::printf("       lift failed at instance %d: %s\n", performed, e.what());
      pass = false;
    }
    ++performed;
  }
  report(6, pass, "200 cocycle lifts on grids up to 4x4 exist and push forward exactly");
}

// ---- criterion 7: tensor laws ------------------------------------------------------

void criterion_tensor_laws() {
  std::mt19937 rng(909);
  bool pass = true;
  int instances = 0;

  struct Block {
    FiniteGroup k;
    int m;
    GroupoidRef ref;
  };
  auto make_block = [&](FiniteGroup k, int m) {
    GroupoidRef ref = make_groupoid(product_groupoid(group_as_groupoid(k), pair_groupoid(m)));
    return Block{std::move(k), m, std::move(ref)};
  };
  auto random_block = [&]() {
    return make_block(random_small_group(rng), 1 + static_cast<int>(rng() % 3));
  };
  auto random_functor = [&](Block const &dom, Block const &cod) {
    auto homs = all_group_homs(dom.k, cod.k);
    std::vector<int> theta = homs[rng() % homs.size()];
    std::vector<int> o(dom.m);
    for (int &x : o) x = static_cast<int>(rng() % cod.m);
    return block_functor(dom.ref, cod.ref, dom.k, cod.k, theta, dom.m, cod.m, o);
  };

  // unit laws: 15 instances
  for (int i = 0; i < 15 && pass; ++i, ++instances) {
    Block dom = random_block(), cod = random_block();
    Bibundle p = bundle_from_functor(random_functor(dom, cod));
    pass = bibundle_iso_search(tensor(p, unit_bundle(cod.ref)), p).has_value() &&
           bibundle_iso_search(tensor(unit_bundle(dom.ref), p), p).has_value();
  }
  // contravariant composition: 15 instances
  for (int i = 0; i < 15 && pass; ++i, ++instances) {
    Block b0 = random_block(), b1 = random_block(), b2 = random_block();
    GroupoidFunctor phi = random_functor(b0, b1);
    GroupoidFunctor psi = random_functor(b1, b2);
    pass = bibundle_iso_search(bundle_from_functor(compose(psi, phi)),
                               tensor(bundle_from_functor(phi), bundle_from_functor(psi)))
               .has_value();
  }
  // associativity: 10 instances
  for (int i = 0; i < 10 && pass; ++i, ++instances) {
    Block b0 = random_block(), b1 = random_block(), b2 = random_block(), b3 = random_block();
    Bibundle r = bundle_from_functor(random_functor(b0, b1));
    Bibundle q = bundle_from_functor(random_functor(b1, b2));
    Bibundle p = bundle_from_functor(random_functor(b2, b3));
    pass = bibundle_iso_search(tensor(tensor(r, q), p), tensor(r, tensor(q, p))).has_value();
  }
  // inverse cancellation: 10 instances
  for (int i = 0; i < 10 && pass;) {
    Block dom = random_block(), cod = random_block();
    GroupoidFunctor phi = random_functor(dom, cod);
    if (!is_weak_equivalence(phi).ok()) continue;
    Bibundle p = bundle_from_functor(phi);
    Bibundle inverse = inverse_bibundle(p);
    pass = bibundle_iso_search(tensor(p, inverse), unit_bundle(dom.ref)).has_value() &&
           bibundle_iso_search(tensor(inverse, p), unit_bundle(cod.ref)).has_value();
    ++i;
    ++instances;
  }
  report(7, pass,
         "tensor unit/associativity/composition/inverse laws verified by isomorphism "
         "search on " +
             std::to_string(instances) + " instances");
}

// ---- criterion 8: SNF against the minors oracle ------------------------------------

void criterion_snf() {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> dim(1, 4), entry(-5, 5);
  bool pass = true;
  for (int trial = 0; trial < 1000 && pass; ++trial) {
    IntMatrix a(dim(rng), dim(rng));
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) a.at(i, j) = entry(rng);
    SNFResult snf = smith_normal_form(a);
    Int du = snf.U.determinant(), dv = snf.V.determinant();
    pass = snf.U * snf.D * snf.V == a && (du == 1 || du == -1) && (dv == 1 || dv == -1);
    auto diag = snf.diagonal();
    for (size_t i = 0; i + 1 < diag.size() && pass; ++i)
      pass = diag[i] == 0 ? diag[i + 1] == 0 : diag[i + 1] % diag[i] == 0;
    pass = pass && diag == snf_diagonal_oracle(a);
  }
  report(8, pass, "1000 random matrices: U*D*V = A, unimodularity, divisibility, oracle match");
}

// ---- criterion 9: Morita invariance of pi0/pi1 --------------------------------------

void criterion_morita_invariance() {
  std::mt19937 rng(31337);
  bool pass = true;
  for (int trial = 0; trial < 20 && pass; ++trial) {
    GroupoidRef g = make_groupoid(random_groupoid(rng, 2, 2));
    GroupoidRef h = rng() % 2
                        ? make_groupoid(product_groupoid(*g, pair_groupoid(2)))
                        : make_groupoid(product_groupoid(pair_groupoid(2), *g));
    MoritaDecision d = morita_equivalent(g, h);
    pass = d.equivalent && d.witness.has_value();
    if (!pass) break;
    pass = pi0(*g, 0).partition.classes.size() == pi0(*h, 0).partition.classes.size();
    Bibundle const &w = *d.witness;
    for (int p = 0; p < w.total() && pass; ++p)
      pass = group_isomorphism(pi1_finite(*g, w.pi(p)).group,
                               pi1_finite(*h, w.eps(p)).group)
                 .has_value();
  }
  report(9, pass, "20 certified-equivalent pairs have matching pi0 and pi1 at matched points");
}

}  // namespace

int main() {
  std::printf("acceptance suite (all expectations exact)\n");
  criterion_mobius();
  criterion_pair_collapse();
  criterion_delooping();
  criterion_example4();
  criterion_eff();
  criterion_cocycle_lifts();
  criterion_tensor_laws();
  criterion_snf();
  criterion_morita_invariance();
  if (failures == 0)
    std::printf("all 9 criteria passed\n");
  else
    std::printf("%d criterion(s) FAILED\n", failures);
  return failures;
}
