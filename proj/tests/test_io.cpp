#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gpd/catalog.hpp>
#include <gpd/io.hpp>

#include "helpers.hpp"

#include <random>

using namespace gpd;

namespace {

io::FileResolver no_refs() {
  return [](std::string const &) -> std::string {
    throw io::ParseError("no file references in this test");
  };
}

}  // namespace

TEST_CASE("groupoid round trips preserve structure") {
  std::mt19937 rng(701);
  for (int trial = 0; trial < 15; ++trial) {
    FiniteGroupoid g = testing::random_groupoid(rng);
    io::LoadedGroupoid back = io::read_groupoid(io::write_groupoid(g));
    CHECK(back.groupoid == g);
  }
}

TEST_CASE("groupoid reader diagnostics") {
  SUBCASE("malformed JSON carries a line anchor") {
    try {
      io::read_groupoid("{\n  \"objects\": [1, 2,\n");
      FAIL("expected a parse error");
    } catch (io::ParseError const &e) {
      CHECK(e.line() >= 2);
      CHECK(std::string(e.what()).find("line") != std::string::npos);
    }
  }
  SUBCASE("missing members are named") {
    CHECK_THROWS_WITH_AS(io::read_groupoid(R"({"objects": [0]})"),
                         doctest::Contains("arrows"), io::ParseError);
  }
  SUBCASE("unknown ids are reported") {
    std::string text = R"({
      "objects": [0], "arrows": [{"id": 0, "src": 0, "tgt": 7}],
      "comp": [], "inv": [[0,0]], "unit": [[0,0]]
    })";
    CHECK_THROWS_WITH_AS(io::read_groupoid(text), doctest::Contains("unknown"),
                         io::ParseError);
  }
  SUBCASE("file ids may be arbitrary integers") {
    std::string text = R"({
      "objects": [10, 20],
      "arrows": [{"id": 100, "src": 10, "tgt": 10}, {"id": 200, "src": 20, "tgt": 20}],
      "comp": [[100, 100, 100], [200, 200, 200]],
      "inv": [[100, 100], [200, 200]],
      "unit": [[10, 100], [20, 200]]
    })";
    io::LoadedGroupoid loaded = io::read_groupoid(text);
    CHECK(loaded.groupoid == unit_groupoid(2));
    CHECK(loaded.object_index(20) == 1);
    CHECK(loaded.arrow_index(200) == 1);
    CHECK_THROWS_AS(loaded.object_index(15), io::ParseError);
  }
}

TEST_CASE("complex and presentation round trips") {
  SimplicialComplex x = grid_complex(2, 2);
  CHECK(io::read_complex(io::write_complex(x)).complex == x);

  GroupPresentation p(2, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2}});
  CHECK(io::read_presentation(io::write_presentation(p)) == p);

  SUBCASE("triangle with a missing edge is rejected") {
    std::string text = R"({
      "vertices": [0, 1, 2], "edges": [[0, 1]], "triangles": [[0, 1, 2]]
    })";
    CHECK_THROWS_AS(io::read_complex(text), io::ParseError);
  }
}

TEST_CASE("bibundle and cocycle round trips") {
  GroupoidRef z4 = make_groupoid(group_as_groupoid(cyclic_group(4)));
  GroupoidRef z2 = make_groupoid(group_as_groupoid(cyclic_group(2)));
  GroupoidFunctor epi(z4, z2, {0}, {0, 1, 0, 1});
  Bibundle b = bundle_from_functor(epi);
  io::LoadedBibundle back = io::read_bibundle(io::write_bibundle(b), no_refs());
  CHECK(back.bundle.total() == b.total());
  CHECK(validate_bibundle(back.bundle).empty());
  CHECK(bibundle_iso_search(back.bundle, b).has_value());

  Cocycle c = coboundary_twist(constant_cocycle(GridCover{2, 2}, z2, 0), {0, 1, 0, 1});
  io::LoadedCocycle cocycle_back = io::read_cocycle(io::write_cocycle(c), no_refs());
  CHECK(cocycle_back.cocycle.f == c.f);
  CHECK(cocycle_back.cocycle.g == c.g);
  CHECK(validate_cocycle(cocycle_back.cocycle).empty());
}

TEST_CASE("action files need a complex from somewhere") {
  std::string group_json = io::write_groupoid(group_as_groupoid(cyclic_group(2)));
  std::string action = R"({
    "schema": "action.v1",
    "group": )" + group_json + R"(,
    "vertexAction": [[0,0,0],[0,1,1],[1,0,1],[1,1,0]]
  })";
  CHECK_THROWS_WITH_AS(io::read_action(action, no_refs()), doctest::Contains("complex"),
                       io::ParseError);
  std::string complex = io::write_complex(SimplicialComplex::make(2, {{0, 1}}, {}));
  io::LoadedAction loaded = io::read_action(action, no_refs(), complex);
  CHECK(loaded.action.group.order() == 2);
  CHECK(loaded.action.act(1, 0) == 1);
}

TEST_CASE("functor files validate functoriality") {
  std::string z2_json = io::write_groupoid(group_as_groupoid(cyclic_group(2)));
  std::string z3_json = io::write_groupoid(group_as_groupoid(cyclic_group(3)));
  std::string bad = R"({
    "schema": "functor.v1",
    "source": )" + z2_json + R"(,
    "target": )" + z3_json + R"(,
    "objMap": [[0, 0]],
    "arrMap": [[0, 0], [1, 1]]
  })";
  CHECK_THROWS_AS(io::read_functor(bad, no_refs()), io::ParseError);
}

TEST_CASE("report serialization is stable json") {
  SequenceCheck check;
  check.items.push_back({"demo", true, "fine"});
  check.overall = Verdict::ExactAbelianOnly;
  check.summary = "demo summary";
  std::string json = io::sequence_check_json(check);
  CHECK(json.find("\"verdict\": \"exact-abelian-only\"") != std::string::npos);
  CHECK(json.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("catalog entries run deterministically") {
  for (auto const &entry : catalog_entries()) {
    CatalogResult first = entry.run();
    CatalogResult second = entry.run();
    CHECK(first.pass);
    CHECK(first.lines == second.lines);
    CHECK(first.json == second.json);
  }
}
