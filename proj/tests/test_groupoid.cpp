#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gpd/groupoid.hpp>

#include "helpers.hpp"

#include <numeric>
#include <random>

using namespace gpd;
using gpd::testing::random_groupoid;

namespace {

SetAction swap_action_on_two() {
  SetAction a;
  a.group = cyclic_group(2);
  a.carrier = 2;
  a.table = {0, 1, 1, 0};
  return a;
}

// Z4 acting on {0,1} through its quotient Z2.
SetAction z4_on_two_through_z2() {
  SetAction a;
  a.group = cyclic_group(4);
  a.carrier = 2;
  a.table = {0, 1, 1, 0, 0, 1, 1, 0};
  return a;
}

// Brute-force reachability closure over objects, independent of the
// union-find in orbits().
std::vector<std::vector<bool>> reachability_oracle(FiniteGroupoid const &g) {
  int n = g.n_objects();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) reach[x][x] = true;
  for (int a = 0; a < g.n_arrows(); ++a) {
    reach[g.src(a)][g.tgt(a)] = true;
    reach[g.tgt(a)][g.src(a)] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  return reach;
}

}  // namespace

TEST_CASE("pair groupoids") {
  SUBCASE("a single point gives the unit groupoid") {
    FiniteGroupoid g = pair_groupoid(1);
    CHECK(g.n_objects() == 1);
    CHECK(g.n_arrows() == 1);
    CHECK(validate_groupoid(g).empty());
  }
  SUBCASE("three points") {
    FiniteGroupoid g = pair_groupoid(3);
    CHECK(g.n_arrows() == 9);
    CHECK(validate_groupoid(g).empty());
    CHECK(orbits(g).classes.size() == 1);
    for (int x = 0; x < 3; ++x) CHECK(isotropy(g, x).group.order() == 1);
  }
  SUBCASE("two points, trivial isotropy") {
    CHECK(isotropy(pair_groupoid(2), 0).group.order() == 1);
  }
  SUBCASE("empty set rejected") { CHECK_THROWS_AS(pair_groupoid(0), std::invalid_argument); }
}

TEST_CASE("groups as one-object groupoids") {
  SUBCASE("Z2") {
    FiniteGroupoid g = group_as_groupoid(cyclic_group(2));
    CHECK(g.n_objects() == 1);
    CHECK(g.n_arrows() == 2);
    CHECK(validate_groupoid(g).empty());
  }
  SUBCASE("trivial group is the point") {
    FiniteGroupoid g = group_as_groupoid(trivial_group());
    CHECK(g.n_objects() == 1);
    CHECK(g.n_arrows() == 1);
  }
  SUBCASE("S3 recovers its own isotropy") {
    FiniteGroupoid g = group_as_groupoid(symmetric_group(3));
    CHECK(g.n_arrows() == 6);
    CHECK(validate_groupoid(g).empty());
    CHECK(group_isomorphism(isotropy(g, 0).group, symmetric_group(3)).has_value());
  }
}

TEST_CASE("translation groupoids") {
  SUBCASE("trivial action of Z2 on a point") {
    SetAction a{cyclic_group(2), 1, {0, 0}};
    FiniteGroupoid g = translation_groupoid(a);
    CHECK(g.n_objects() == 1);
    CHECK(g.n_arrows() == 2);
    CHECK(validate_groupoid(g).empty());
    CHECK(group_isomorphism(isotropy(g, 0).group, cyclic_group(2)).has_value());
  }
  SUBCASE("Z2 swapping two points: one orbit, trivial isotropy") {
    FiniteGroupoid g = translation_groupoid(swap_action_on_two());
    CHECK(validate_groupoid(g).empty());
    CHECK(orbits(g).classes.size() == 1);
    CHECK(isotropy(g, 0).group.order() == 1);
    CHECK(isotropy(g, 1).group.order() == 1);
  }
  SUBCASE("Z4 through Z2: isotropy is the stabilizer") {
    SetAction a = z4_on_two_through_z2();
    // independent stabilizer enumeration
    int stabilizer_size = 0;
    for (int g = 0; g < 4; ++g)
      if (a.act(g, 0) == 0) ++stabilizer_size;
    CHECK(stabilizer_size == 2);
    FiniteGroupoid t = translation_groupoid(a);
    CHECK(validate_groupoid(t).empty());
    CHECK(isotropy(t, 0).group.order() == stabilizer_size);
  }
  SUBCASE("invalid action is rejected") {
    SetAction bad{cyclic_group(2), 2, {1, 0, 0, 1}};  // identity swaps the points
    CHECK_THROWS_AS(translation_groupoid(bad), std::invalid_argument);
  }
}

TEST_CASE("orbit partitions") {
  CHECK(orbits(pair_groupoid(3)).classes.size() == 1);
  CHECK(orbits(disjoint_union(unit_groupoid(1), unit_groupoid(1))).classes.size() == 2);

  // Z2 swapping {0,1} and fixing {2}
  SetAction a{cyclic_group(2), 3, {0, 1, 2, 1, 0, 2}};
  OrbitPartition p = orbits(translation_groupoid(a));
  REQUIRE(p.classes.size() == 2);
  CHECK(p.classes[0] == std::vector<int>{0, 1});
  CHECK(p.classes[1] == std::vector<int>{2});
}

TEST_CASE("orbits agree with a reachability oracle on random groupoids") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    FiniteGroupoid g = random_groupoid(rng);
    auto reach = reachability_oracle(g);
    OrbitPartition p = orbits(g);
    for (int x = 0; x < g.n_objects(); ++x)
      for (int y = 0; y < g.n_objects(); ++y)
        CHECK((p.class_of[x] == p.class_of[y]) == reach[x][y]);
  }
}

TEST_CASE("validation accepts constructor outputs and flags corruption") {
  std::mt19937 rng(55);
  for (int trial = 0; trial < 40; ++trial) {
    FiniteGroupoid g = random_groupoid(rng);
    CHECK(validate_groupoid(g).empty());
  }
  SUBCASE("comp defined on a non-composable pair") {
    // two-object unit groupoid with a bogus composite
    std::vector<int> comp{0, -1, -1, 1};
    comp[1] = 0;  // comp(arrow 0, arrow 1) defined though src(0) != tgt(1)
    FiniteGroupoid bad = FiniteGroupoid::from_tables(2, {0, 1}, {0, 1}, comp, {0, 1}, {0, 1});
    auto report = validate_groupoid(bad);
    REQUIRE_FALSE(report.empty());
    CHECK(report[0].kind == GroupoidViolation::Kind::BadCompDomain);
  }
  SUBCASE("unit law violation is reported") {
    std::vector<int> comp{0, 1, 1, 1};
    FiniteGroupoid bad = FiniteGroupoid::from_tables(1, {0, 0}, {0, 0}, comp, {0, 1}, {0});
    CHECK_FALSE(validate_groupoid(bad).empty());
  }
}

TEST_CASE("isotropy rejects unknown objects") {
  CHECK_THROWS_AS(isotropy(pair_groupoid(2), 5), std::invalid_argument);
}

TEST_CASE("base change isomorphisms") {
  SUBCASE("unit arrow gives the identity") {
    FiniteGroupoid g = group_as_groupoid(symmetric_group(3));
    BaseChangeIso iso = base_change_iso(g, g.unit(0));
    for (size_t i = 0; i < iso.map.size(); ++i) CHECK(iso.map[i] == static_cast<int>(i));
  }
  SUBCASE("abelian isotropy: independent of the connecting arrow") {
    FiniteGroupoid g = product_groupoid(group_as_groupoid(cyclic_group(3)), pair_groupoid(2));
    std::vector<int> arrows_01;
    for (int a = 0; a < g.n_arrows(); ++a)
      if (g.src(a) == 0 && g.tgt(a) == 1) arrows_01.push_back(a);
    REQUIRE(arrows_01.size() == 3);
    BaseChangeIso first = base_change_iso(g, arrows_01[0]);
    for (int a : arrows_01) CHECK(base_change_iso(g, a).map == first.map);
  }
  SUBCASE("functoriality under composition") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 10; ++trial) {
      FiniteGroupoid g = random_groupoid(rng, 1, 2);
      for (int h = 0; h < g.n_arrows(); ++h)
        for (int k : g.arrows_into(g.src(h))) {
          int hk = g.comp_raw(h, k);
          REQUIRE(hk >= 0);
          BaseChangeIso bh = base_change_iso(g, h);
          BaseChangeIso bk = base_change_iso(g, k);
          BaseChangeIso bhk = base_change_iso(g, hk);
          // x -> (hk)^-1 x (hk) factors as h-conjugation then k-conjugation
          for (size_t i = 0; i < bhk.map.size(); ++i)
            CHECK(bhk.map[i] == bk.map[bh.map[i]]);
        }
    }
  }
  SUBCASE("bijective homomorphism on all arrows of random groupoids") {
    std::mt19937 rng(78);
    for (int trial = 0; trial < 100; ++trial) {
      FiniteGroupoid g = random_groupoid(rng, 2, 2);
      for (int a = 0; a < g.n_arrows(); ++a)
        CHECK_NOTHROW(base_change_iso(g, a));  // ctor verifies both properties
    }
  }
}

TEST_CASE("weak equivalences") {
  SUBCASE("identity functor") {
    std::mt19937 rng(5);
    GroupoidRef g = make_groupoid(random_groupoid(rng));
    CHECK(is_weak_equivalence(identity_functor(g)).ok());
  }
  SUBCASE("isotropy inclusion into a transitive groupoid") {
    GroupoidRef g = make_groupoid(
        product_groupoid(group_as_groupoid(symmetric_group(3)), pair_groupoid(3)));
    Isotropy iso = isotropy(*g, 0);
    GroupoidRef one = make_groupoid(group_as_groupoid(iso.group));
    GroupoidFunctor incl(one, g, {0}, iso.arrows);
    CHECK(is_weak_equivalence(incl).ok());
  }
  SUBCASE("missing an orbit fails essential surjectivity") {
    GroupoidRef two = make_groupoid(unit_groupoid(2));
    GroupoidRef one = make_groupoid(unit_groupoid(1));
    GroupoidFunctor phi(one, two, {0}, {0});
    auto report = is_weak_equivalence(phi);
    CHECK_FALSE(report.ok());
    CHECK_FALSE(report.essentially_surjective);
    CHECK(report.missed_object == 1);
  }
  SUBCASE("collapsing isotropy fails full faithfulness") {
    GroupoidRef z2 = make_groupoid(group_as_groupoid(cyclic_group(2)));
    GroupoidRef pt = make_groupoid(unit_groupoid(1));
    GroupoidFunctor phi(z2, pt, {0}, {0, 0});
    auto report = is_weak_equivalence(phi);
    CHECK(report.essentially_surjective);
    CHECK_FALSE(report.fully_faithful);
  }
  SUBCASE("weak equivalence implies matching orbits and isotropy") {
    std::mt19937 rng(91);
    for (int trial = 0; trial < 20; ++trial) {
      GroupoidRef g = make_groupoid(random_groupoid(rng));
      // inclusion of one representative object per orbit with full isotropy
      OrbitPartition p = orbits(*g);
      std::vector<int> obj_map, arr_map;
      FiniteGroupoid skel;
      bool first = true;
      std::vector<Isotropy> isos;
      for (auto const &cls : p.classes) {
        Isotropy iso = isotropy(*g, cls.front());
        FiniteGroupoid one = group_as_groupoid(iso.group);
        skel = first ? std::move(one) : disjoint_union(skel, one);
        first = false;
        obj_map.push_back(iso.object);
        for (int a : iso.arrows) arr_map.push_back(a);
        isos.push_back(std::move(iso));
      }
      GroupoidFunctor incl(make_groupoid(std::move(skel)), g, obj_map, arr_map);
      REQUIRE(is_weak_equivalence(incl).ok());
      CHECK(orbits(*incl.source()).classes.size() == p.classes.size());
      for (size_t i = 0; i < isos.size(); ++i)
        CHECK(group_isomorphism(isotropy(*incl.source(), static_cast<int>(i)).group,
                                isos[i].group)
                  .has_value());
    }
  }
}

TEST_CASE("functor construction rejects non-functors") {
  GroupoidRef z2 = make_groupoid(group_as_groupoid(cyclic_group(2)));
  GroupoidRef z3 = make_groupoid(group_as_groupoid(cyclic_group(3)));
  // Z2 -> Z3 sending the involution to a 3-cycle cannot preserve comp
  CHECK_THROWS_AS(GroupoidFunctor(z2, z3, {0}, {0, 1}), std::invalid_argument);
}

TEST_CASE("relabeling preserves structure") {
  std::mt19937 rng(13);
  FiniteGroupoid g = random_groupoid(rng);
  OrbitPartition p = orbits(g);
  std::vector<int> obj_perm(g.n_objects()), arr_perm(g.n_arrows());
  std::iota(obj_perm.begin(), obj_perm.end(), 0);
  std::iota(arr_perm.begin(), arr_perm.end(), 0);
  std::shuffle(obj_perm.begin(), obj_perm.end(), rng);
  std::shuffle(arr_perm.begin(), arr_perm.end(), rng);
  FiniteGroupoid h = relabel(g, obj_perm, arr_perm);
  CHECK(validate_groupoid(h).empty());
  CHECK(orbits(h).classes.size() == p.classes.size());
  for (int x = 0; x < g.n_objects(); ++x)
    CHECK(group_isomorphism(isotropy(g, x).group, isotropy(h, obj_perm[x]).group).has_value());
}
