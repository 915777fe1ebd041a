#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gpd/cocycle.hpp>

#include "helpers.hpp"

#include <random>

using namespace gpd;
using gpd::testing::all_group_homs;
using gpd::testing::block_functor;
using gpd::testing::random_small_group;

namespace {

Cocycle random_cocycle(std::mt19937 &rng, GridCover cover, GroupoidRef groupoid) {
  // coboundary twist of a constant cocycle: the generic valid cocycle on a
  // contractible cover
  FiniteGroupoid const &g = *groupoid;
  int base = static_cast<int>(rng() % g.n_objects());
  Cocycle c = constant_cocycle(cover, groupoid, base);
  std::vector<int> lambda(cover.cell_count());
  auto const &out = g.arrows_from(base);
  for (int &l : lambda) l = out[rng() % out.size()];
  return coboundary_twist(c, lambda);
}

// surjective-on-objects functor with arrow lifts at every source: a block
// epimorphism (theta surjective, object map surjective)
struct QualifyingFunctor {
  GroupoidRef source, target;
  GroupoidFunctor phi;
};

QualifyingFunctor random_qualifying_functor(std::mt19937 &rng) {
  FiniteGroup k2 = random_small_group(rng);
  bool extend = rng() % 2;
  FiniteGroup extra = extend ? random_small_group(rng) : trivial_group();
  FiniteGroup k = direct_product(k2, extra);
  int m2 = 1 + static_cast<int>(rng() % 2);
  int m = m2 + static_cast<int>(rng() % 2);
  GroupoidRef src = make_groupoid(product_groupoid(group_as_groupoid(k), pair_groupoid(m)));
  GroupoidRef dst = make_groupoid(product_groupoid(group_as_groupoid(k2), pair_groupoid(m2)));
  // the product projection is surjective, so every arrow lifts at every source
  std::vector<int> theta(k.order());
  for (int e = 0; e < k.order(); ++e) theta[e] = e / extra.order();
  std::vector<int> o(m);
  for (int i = 0; i < m; ++i) o[i] = i % m2;
  GroupoidFunctor phi = block_functor(src, dst, k, k2, theta, m, m2, o);
  return {src, dst, phi};
}

}  // namespace

TEST_CASE("grid covers") {
  GridCover cover{2, 3};
  CHECK(cover.cell_count() == 9);
  CHECK(cover.adjacent(0, 4));   // (1,1) and (2,2) touch at a corner
  CHECK(cover.adjacent(0, 1));
  CHECK_FALSE(cover.adjacent(0, 2));  // (1,1) and (1,3)
  CHECK(cover.coords(5) == std::vector<int>{2, 3});
  CHECK(cover.cell_id({2, 3}) == 5);
  CHECK_THROWS_AS((GridCover{3, 2}.validate()), std::invalid_argument);
}

TEST_CASE("cocycle validation") {
  GroupoidRef z4 = make_groupoid(group_as_groupoid(cyclic_group(4)));
  GridCover cover{1, 3};
  SUBCASE("constant cocycles are valid") {
    CHECK(validate_cocycle(constant_cocycle(cover, z4, 0)).empty());
  }
  SUBCASE("a mismatched source is reported") {
    Cocycle c = constant_cocycle(cover, z4, 0);
    c.set_transition(0, 1, 1);  // arrow 1 of Z4 has the right endpoints but
    // breaks the triple condition with the unit on (0,1,2)... adjust to a
    // genuinely broken anchor instead: single-object groupoid has matching
    // anchors always, so break the diagonal unit law:
    c.set_transition(0, 0, 2);
    CHECK_FALSE(validate_cocycle(c).empty());
  }
  SUBCASE("triple condition violations are reported") {
    // all four cells of a 2x2 cover are pairwise adjacent
    Cocycle c = constant_cocycle(GridCover{2, 2}, z4, 0);
    c.set_transition(0, 1, 1);
    c.set_transition(1, 0, 3);
    auto report = validate_cocycle(c);
    CHECK_FALSE(report.empty());
    CHECK(report[0].message.find("triple") != std::string::npos);
  }
  SUBCASE("twisted cocycles stay valid") {
    std::mt19937 rng(501);
    GroupoidRef g = make_groupoid(
        product_groupoid(group_as_groupoid(symmetric_group(3)), pair_groupoid(2)));
    for (int trial = 0; trial < 20; ++trial) {
      Cocycle c = random_cocycle(rng, GridCover{2, 2}, g);
      CHECK(validate_cocycle(c).empty());
    }
  }
}

TEST_CASE("pushforward") {
  GroupoidRef z4 = make_groupoid(group_as_groupoid(cyclic_group(4)));
  GroupoidRef z2 = make_groupoid(group_as_groupoid(cyclic_group(2)));
  GroupoidFunctor epi(z4, z2, {0}, {0, 1, 0, 1});
  GridCover cover{2, 2};
  SUBCASE("identity functor fixes cocycles") {
    std::mt19937 rng(502);
    Cocycle c = random_cocycle(rng, cover, z4);
    Cocycle p = pushforward(identity_functor(z4), c);
    CHECK(p.f == c.f);
    CHECK(p.g == c.g);
  }
  SUBCASE("constant maps to constant") {
    Cocycle c = constant_cocycle(cover, z4, 0);
    Cocycle p = pushforward(epi, c);
    CHECK(p.f == std::vector<int>(4, 0));
    CHECK(validate_cocycle(p).empty());
  }
  SUBCASE("images of valid cocycles are valid") {
    std::mt19937 rng(503);
    for (int trial = 0; trial < 10; ++trial) {
      Cocycle c = random_cocycle(rng, cover, z4);
      CHECK(validate_cocycle(pushforward(epi, c)).empty());
    }
  }
}

TEST_CASE("lifting hypotheses") {
  GroupoidRef z4 = make_groupoid(group_as_groupoid(cyclic_group(4)));
  GroupoidRef z2 = make_groupoid(group_as_groupoid(cyclic_group(2)));
  SUBCASE("quotient epimorphisms qualify") {
    GroupoidFunctor epi(z4, z2, {0}, {0, 1, 0, 1});
    CHECK(check_lift_hypotheses(epi).ok());
  }
  SUBCASE("strict inclusions do not") {
    GroupoidFunctor incl(z2, z4, {0}, {0, 2});
    auto report = check_lift_hypotheses(incl);
    CHECK_FALSE(report.ok());
    CHECK_FALSE(report.arrows_lift_with_source);
  }
  SUBCASE("missing objects are reported") {
    GroupoidRef two = make_groupoid(unit_groupoid(2));
    GroupoidRef one = make_groupoid(unit_groupoid(1));
    GroupoidFunctor incl(one, two, {0}, {0});
    auto report = check_lift_hypotheses(incl);
    CHECK_FALSE(report.objects_surjective);
    CHECK(report.missed_object == 1);
  }
}

TEST_CASE("cocycle lifting") {
  GroupoidRef z4 = make_groupoid(group_as_groupoid(cyclic_group(4)));
  GroupoidRef z2 = make_groupoid(group_as_groupoid(cyclic_group(2)));
  GroupoidFunctor epi(z4, z2, {0}, {0, 1, 0, 1});

  SUBCASE("identity lift returns the cocycle") {
    std::mt19937 rng(504);
    Cocycle c = random_cocycle(rng, GridCover{2, 2}, z4);
    Cocycle l = lift_cocycle(identity_functor(z4), c);
    CHECK(l.f == c.f);
    CHECK(l.g == c.g);
  }
  SUBCASE("one nontrivial transition on a 2x2 grid") {
    GridCover cover{2, 2};
    Cocycle c = constant_cocycle(cover, z2, 0);
    // twist by lambda = (0,0,0,1): transitions into cell 3 become nontrivial
    Cocycle twisted = coboundary_twist(c, {0, 0, 0, 1});
    REQUIRE(validate_cocycle(twisted).empty());
    Cocycle lifted = lift_cocycle(epi, twisted);
    CHECK(validate_cocycle(lifted).empty());
    // the lift of the odd transition sits in the odd Z4 coset {1, 3}
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        if (twisted.transition(mu, nu) < 0) continue;
        int down = twisted.transition(mu, nu);
        int up = lifted.transition(mu, nu);
        if (down == 1) CHECK((up == 1 || up == 3));
        if (down == 0) CHECK((up == 0 || up == 2));
      }
    Cocycle back = pushforward(epi, lifted);
    CHECK(back.f == twisted.f);
    CHECK(back.g == twisted.g);
  }
  SUBCASE("constant cocycles lift to the seed") {
    GridCover cover{1, 4};
    Cocycle c = constant_cocycle(cover, z2, 0);
    Cocycle l = lift_cocycle(epi, c);
    CHECK(l.f == std::vector<int>(4, 0));
    // seeding is respected
    Cocycle l2 = lift_cocycle(epi, c, 0);
    CHECK(l2.f == l.f);
  }
  SUBCASE("non-qualifying functors are rejected with the obstruction") {
    GroupoidFunctor incl(z2, z4, {0}, {0, 2});
    Cocycle c = constant_cocycle(GridCover{1, 2}, z4, 0);
    CHECK_THROWS_WITH_AS(lift_cocycle(incl, c), doctest::Contains("no lift"),
                         std::invalid_argument);
  }
  SUBCASE("round trips on random qualifying data") {
    std::mt19937 rng(505);
    for (int trial = 0; trial < 40; ++trial) {
      QualifyingFunctor q = random_qualifying_functor(rng);
      REQUIRE(check_lift_hypotheses(q.phi).ok());
      GridCover cover = trial % 2 ? GridCover{2, 1 + static_cast<int>(rng() % 3)}
                                  : GridCover{1, 1 + static_cast<int>(rng() % 4)};
      Cocycle c = random_cocycle(rng, cover, q.target);
      Cocycle lifted = lift_cocycle(q.phi, c);  // throws on any failure
      CHECK(validate_cocycle(lifted).empty());
      Cocycle back = pushforward(q.phi, lifted);
      CHECK(back.f == c.f);
      CHECK(back.g == c.g);
    }
  }
}

TEST_CASE("cocycles and bundles") {
  GroupoidRef s3pair = make_groupoid(
      product_groupoid(group_as_groupoid(symmetric_group(3)), pair_groupoid(2)));
  std::mt19937 rng(506);
  SUBCASE("constant cocycles give trivial principal bundles") {
    Cocycle c = constant_cocycle(GridCover{2, 2}, s3pair, 0);
    CechBundle cb = cocycle_to_bundle(c);
    CHECK(is_principal(cb.bundle).principal());
    CHECK(validate_bibundle(cb.bundle).empty());
  }
  SUBCASE("bundles of valid cocycles are principal") {
    for (int trial = 0; trial < 10; ++trial) {
      Cocycle c = random_cocycle(rng, GridCover{2, 2}, s3pair);
      CechBundle cb = cocycle_to_bundle(c);
      CHECK(is_principal(cb.bundle).principal());
      CHECK(validate_bibundle(cb.bundle).empty());
    }
  }
  SUBCASE("sections recover an equivalent cocycle") {
    for (int trial = 0; trial < 10; ++trial) {
      Cocycle c = random_cocycle(rng, GridCover{1, 3}, s3pair);
      CechBundle cb = cocycle_to_bundle(c);
      Cocycle back = cocycle_from_cech_bundle(cb.bundle, c.cover);
      CHECK(validate_cocycle(back).empty());
      CHECK(cocycles_equivalent(c, back));
    }
  }
  SUBCASE("coboundary-related cocycles give isomorphic bundles") {
    for (int trial = 0; trial < 5; ++trial) {
      Cocycle c = random_cocycle(rng, GridCover{2, 2}, s3pair);
      std::vector<int> lambda(c.cover.cell_count());
      for (int mu = 0; mu < c.cover.cell_count(); ++mu) {
        auto const &out = s3pair->arrows_from(c.f[mu]);
        lambda[mu] = out[rng() % out.size()];
      }
      Cocycle twisted = coboundary_twist(c, lambda);
      CHECK(cocycles_equivalent(c, twisted));
      auto iso =
          bibundle_iso_search(cocycle_to_bundle(c).bundle, cocycle_to_bundle(twisted).bundle);
      CHECK(iso.has_value());
    }
  }
  SUBCASE("pushforward commutes with bundle extension up to isomorphism") {
    GroupoidRef z4 = make_groupoid(group_as_groupoid(cyclic_group(4)));
    GroupoidRef z2 = make_groupoid(group_as_groupoid(cyclic_group(2)));
    GroupoidFunctor epi(z4, z2, {0}, {0, 1, 0, 1});
    for (int trial = 0; trial < 5; ++trial) {
      Cocycle c = random_cocycle(rng, GridCover{2, 2}, z4);
      Bibundle via_pushforward = cocycle_to_bundle(pushforward(epi, c)).bundle;
      Bibundle via_extension = tensor(cocycle_to_bundle(c).bundle, bundle_from_functor(epi));
      CHECK(bibundle_iso_search(via_pushforward, via_extension).has_value());
    }
  }
  SUBCASE("inequivalent cocycles are recognized") {
    GroupoidRef two = make_groupoid(unit_groupoid(2));
    Cocycle at0 = constant_cocycle(GridCover{1, 2}, two, 0);
    Cocycle at1 = constant_cocycle(GridCover{1, 2}, two, 1);
    CHECK_FALSE(cocycles_equivalent(at0, at1));
  }
}
