#include <gpd/io.hpp>

#include <json.hpp>

#include <algorithm>
#include <map>

namespace gpd::io {

using nlohmann::json;

namespace {

std::pair<int, int> position_of(std::string const &text, size_t byte) {
  int line = 1, column = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

json parse(std::string const &text) {
  try {
    return json::parse(text);
  } catch (json::parse_error const &e) {
    auto [line, column] = position_of(text, e.byte);
    throw ParseError(std::string("malformed JSON: ") + e.what(), line, column);
  }
}

[[noreturn]] void fail(std::string const &path, std::string const &msg) {
  throw ParseError(path + ": " + msg);
}

json const &member(json const &j, std::string const &path, std::string const &key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing member '" + key + "'");
  return *it;
}

long require_int(json const &j, std::string const &path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

void check_schema(json const &j, std::string const &expected, std::string const &path) {
  if (j.contains("schema") && j["schema"] != expected)
    fail(path, "schema is " + j["schema"].dump() + ", expected \"" + expected + "\"");
}

template <typename T>
int lookup(std::map<long, int> const &index, long id, std::string const &path, T what) {
  auto it = index.find(id);
  if (it == index.end()) fail(path, std::string(what) + " id " + std::to_string(id) + " unknown");
  return it->second;
}

LoadedGroupoid groupoid_from_json(json const &j, std::string const &path);

// groupoid-ref: inline object or path string
LoadedGroupoid resolve_groupoid(json const &j, std::string const &path,
                                FileResolver const &resolver) {
  if (j.is_string()) {
    if (!resolver) fail(path, "path references are not available here");
    std::string text = resolver(j.get<std::string>());
    return read_groupoid(text);
  }
  return groupoid_from_json(j, path);
}

LoadedGroupoid groupoid_from_json(json const &j, std::string const &path) {
  check_schema(j, "groupoid.v1", path);
  LoadedGroupoid out;
  std::map<long, int> obj_index, arr_index;
  for (auto const &v : member(j, path, "objects")) {
    long id = require_int(v, path + ".objects");
    if (!obj_index.try_emplace(id, static_cast<int>(out.object_ids.size())).second)
      fail(path + ".objects", "duplicate id " + std::to_string(id));
    out.object_ids.push_back(id);
  }
  std::vector<int> src, tgt;
  for (auto const &a : member(j, path, "arrows")) {
    long id = require_int(member(a, path + ".arrows[]", "id"), path + ".arrows[].id");
    if (!arr_index.try_emplace(id, static_cast<int>(out.arrow_ids.size())).second)
      fail(path + ".arrows", "duplicate id " + std::to_string(id));
    out.arrow_ids.push_back(id);
    src.push_back(lookup(obj_index, require_int(member(a, path, "src"), path + ".arrows[].src"),
                         path + ".arrows[].src", "object"));
    tgt.push_back(lookup(obj_index, require_int(member(a, path, "tgt"), path + ".arrows[].tgt"),
                         path + ".arrows[].tgt", "object"));
  }
  int na = static_cast<int>(src.size());
  std::vector<int> comp(static_cast<size_t>(na) * na, -1);
  for (auto const &triple : member(j, path, "comp")) {
    if (!triple.is_array() || triple.size() != 3) fail(path + ".comp", "expected [g, h, gh]");
    int g = lookup(arr_index, require_int(triple[0], path + ".comp"), path + ".comp", "arrow");
    int h = lookup(arr_index, require_int(triple[1], path + ".comp"), path + ".comp", "arrow");
    int gh = lookup(arr_index, require_int(triple[2], path + ".comp"), path + ".comp", "arrow");
    comp[static_cast<size_t>(g) * na + h] = gh;
  }
  std::vector<int> inv(na, -1), unit(out.object_ids.size(), -1);
  for (auto const &pair : member(j, path, "inv")) {
    if (!pair.is_array() || pair.size() != 2) fail(path + ".inv", "expected [g, gi]");
    inv[lookup(arr_index, require_int(pair[0], path + ".inv"), path + ".inv", "arrow")] =
        lookup(arr_index, require_int(pair[1], path + ".inv"), path + ".inv", "arrow");
  }
  for (auto const &pair : member(j, path, "unit")) {
    if (!pair.is_array() || pair.size() != 2) fail(path + ".unit", "expected [x, ux]");
    unit[lookup(obj_index, require_int(pair[0], path + ".unit"), path + ".unit", "object")] =
        lookup(arr_index, require_int(pair[1], path + ".unit"), path + ".unit", "arrow");
  }
  for (size_t i = 0; i < inv.size(); ++i)
    if (inv[i] < 0) fail(path + ".inv", "arrow " + std::to_string(out.arrow_ids[i]) + " missing");
  for (size_t i = 0; i < unit.size(); ++i)
    if (unit[i] < 0)
      fail(path + ".unit", "object " + std::to_string(out.object_ids[i]) + " missing");
  out.groupoid = FiniteGroupoid::from_tables(static_cast<int>(out.object_ids.size()),
                                             std::move(src), std::move(tgt), std::move(comp),
                                             std::move(inv), std::move(unit));
  return out;
}

json groupoid_to_json(FiniteGroupoid const &g) {
  json j;
  j["schema"] = "groupoid.v1";
  j["objects"] = json::array();
  for (int x = 0; x < g.n_objects(); ++x) j["objects"].push_back(x);
  j["arrows"] = json::array();
  for (int a = 0; a < g.n_arrows(); ++a)
    j["arrows"].push_back({{"id", a}, {"src", g.src(a)}, {"tgt", g.tgt(a)}});
  j["comp"] = json::array();
  for (int a = 0; a < g.n_arrows(); ++a)
    for (int b = 0; b < g.n_arrows(); ++b)
      if (g.comp_defined(a, b)) j["comp"].push_back({a, b, g.comp_raw(a, b)});
  j["inv"] = json::array();
  for (int a = 0; a < g.n_arrows(); ++a) j["inv"].push_back({a, g.inv(a)});
  j["unit"] = json::array();
  for (int x = 0; x < g.n_objects(); ++x) j["unit"].push_back({x, g.unit(x)});
  return j;
}

LoadedComplex complex_from_json(json const &j, std::string const &path) {
  check_schema(j, "complex.v1", path);
  LoadedComplex out;
  std::map<long, int> v_index;
  for (auto const &v : member(j, path, "vertices")) {
    long id = require_int(v, path + ".vertices");
    if (!v_index.try_emplace(id, static_cast<int>(out.vertex_ids.size())).second)
      fail(path + ".vertices", "duplicate id " + std::to_string(id));
    out.vertex_ids.push_back(id);
  }
  std::vector<std::array<int, 2>> edges;
  for (auto const &e : member(j, path, "edges")) {
    if (!e.is_array() || e.size() != 2) fail(path + ".edges", "expected [a, b]");
    edges.push_back({lookup(v_index, require_int(e[0], path), path + ".edges", "vertex"),
                     lookup(v_index, require_int(e[1], path), path + ".edges", "vertex")});
  }
  std::vector<std::array<int, 3>> triangles;
  for (auto const &t : member(j, path, "triangles")) {
    if (!t.is_array() || t.size() != 3) fail(path + ".triangles", "expected [a, b, c]");
    triangles.push_back({lookup(v_index, require_int(t[0], path), path + ".triangles", "vertex"),
                         lookup(v_index, require_int(t[1], path), path + ".triangles", "vertex"),
                         lookup(v_index, require_int(t[2], path), path + ".triangles", "vertex")});
  }
  try {
    out.complex = SimplicialComplex::make(static_cast<int>(out.vertex_ids.size()),
                                          std::move(edges), std::move(triangles));
  } catch (std::invalid_argument const &e) {
    fail(path, e.what());
  }
  return out;
}

}  // namespace

int LoadedGroupoid::object_index(long file_id) const {
  auto it = std::find(object_ids.begin(), object_ids.end(), file_id);
  if (it == object_ids.end())
    throw ParseError("object id " + std::to_string(file_id) + " unknown");
  return static_cast<int>(it - object_ids.begin());
}

int LoadedGroupoid::arrow_index(long file_id) const {
  auto it = std::find(arrow_ids.begin(), arrow_ids.end(), file_id);
  if (it == arrow_ids.end())
    throw ParseError("arrow id " + std::to_string(file_id) + " unknown");
  return static_cast<int>(it - arrow_ids.begin());
}

int LoadedComplex::vertex_index(long file_id) const {
  auto it = std::find(vertex_ids.begin(), vertex_ids.end(), file_id);
  if (it == vertex_ids.end())
    throw ParseError("vertex id " + std::to_string(file_id) + " unknown");
  return static_cast<int>(it - vertex_ids.begin());
}

LoadedGroupoid read_groupoid(std::string const &text) {
  return groupoid_from_json(parse(text), "$");
}

std::string write_groupoid(FiniteGroupoid const &g) { return groupoid_to_json(g).dump(2); }

LoadedComplex read_complex(std::string const &text) {
  return complex_from_json(parse(text), "$");
}

std::string write_complex(SimplicialComplex const &x) {
  json j;
  j["schema"] = "complex.v1";
  j["vertices"] = json::array();
  for (int v = 0; v < x.n_vertices(); ++v) j["vertices"].push_back(v);
  j["edges"] = json::array();
  for (auto const &e : x.edges()) j["edges"].push_back({e[0], e[1]});
  j["triangles"] = json::array();
  for (auto const &t : x.triangles()) j["triangles"].push_back({t[0], t[1], t[2]});
  return j.dump(2);
}

LoadedFunctor read_functor(std::string const &text, FileResolver const &resolver) {
  json j = parse(text);
  check_schema(j, "functor.v1", "$");
  LoadedGroupoid source = resolve_groupoid(member(j, "$", "source"), "$.source", resolver);
  LoadedGroupoid target = resolve_groupoid(member(j, "$", "target"), "$.target", resolver);
  std::vector<int> obj_map(source.groupoid.n_objects(), -1);
  std::vector<int> arr_map(source.groupoid.n_arrows(), -1);
  for (auto const &pair : member(j, "$", "objMap")) {
    if (!pair.is_array() || pair.size() != 2) fail("$.objMap", "expected [x, y]");
    obj_map[source.object_index(require_int(pair[0], "$.objMap"))] =
        target.object_index(require_int(pair[1], "$.objMap"));
  }
  for (auto const &pair : member(j, "$", "arrMap")) {
    if (!pair.is_array() || pair.size() != 2) fail("$.arrMap", "expected [g, h]");
    arr_map[source.arrow_index(require_int(pair[0], "$.arrMap"))] =
        target.arrow_index(require_int(pair[1], "$.arrMap"));
  }
  for (int v : obj_map)
    if (v < 0) fail("$.objMap", "not defined on every object");
  for (int v : arr_map)
    if (v < 0) fail("$.arrMap", "not defined on every arrow");
  GroupoidRef src_ref = make_groupoid(source.groupoid);
  GroupoidRef dst_ref = make_groupoid(target.groupoid);
  try {
    GroupoidFunctor f(src_ref, dst_ref, std::move(obj_map), std::move(arr_map));
    return LoadedFunctor(std::move(source), std::move(target), std::move(f));
  } catch (std::invalid_argument const &e) {
    fail("$", e.what());
  }
}

LoadedAction read_action(std::string const &text, FileResolver const &resolver,
                         std::optional<std::string> complex_text) {
  json j = parse(text);
  check_schema(j, "action.v1", "$");
  LoadedGroupoid group = resolve_groupoid(member(j, "$", "group"), "$.group", resolver);
  if (group.groupoid.n_objects() != 1)
    fail("$.group", "the group must be a one-object groupoid");
  LoadedComplex complex;
  if (complex_text) {
    complex = read_complex(*complex_text);
  } else if (j.contains("complex")) {
    if (j["complex"].is_string()) {
      if (!resolver) fail("$.complex", "path references are not available here");
      complex = read_complex(resolver(j["complex"].get<std::string>()));
    } else {
      complex = complex_from_json(j["complex"], "$.complex");
    }
  } else {
    fail("$", "no complex: embed one under 'complex' or pass a complex file");
  }

  // one-object groupoid -> multiplication table
  int m = group.groupoid.n_arrows();
  std::vector<std::vector<int>> mul(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) mul[a][b] = group.groupoid.comp_raw(a, b);
  LoadedAction out{ComplexAction{}, std::move(complex), std::move(group)};
  try {
    out.action.group = FiniteGroup::from_table(mul);
  } catch (std::invalid_argument const &e) {
    fail("$.group", e.what());
  }
  out.action.complex = out.complex.complex;
  int n = out.action.complex.n_vertices();
  out.action.vertex_act.assign(static_cast<size_t>(m) * n, -1);
  for (auto const &triple : member(j, "$", "vertexAction")) {
    if (!triple.is_array() || triple.size() != 3) fail("$.vertexAction", "expected [g, v, w]");
    int g = out.group.arrow_index(require_int(triple[0], "$.vertexAction"));
    int v = out.complex.vertex_index(require_int(triple[1], "$.vertexAction"));
    int w = out.complex.vertex_index(require_int(triple[2], "$.vertexAction"));
    out.action.vertex_act[static_cast<size_t>(g) * n + v] = w;
  }
  for (int g = 0; g < m; ++g)
    for (int v = 0; v < n; ++v)
      if (out.action.vertex_act[static_cast<size_t>(g) * n + v] < 0)
        fail("$.vertexAction", "no image for element " +
                                   std::to_string(out.group.arrow_ids[g]) + " at vertex " +
                                   std::to_string(out.complex.vertex_ids[v]));
  try {
    out.action.validate();
  } catch (std::invalid_argument const &e) {
    fail("$.vertexAction", e.what());
  }
  return out;
}

LoadedBibundle read_bibundle(std::string const &text, FileResolver const &resolver) {
  json j = parse(text);
  check_schema(j, "bibundle.v1", "$");
  LoadedGroupoid left = resolve_groupoid(member(j, "$", "left"), "$.left", resolver);
  LoadedGroupoid right = resolve_groupoid(member(j, "$", "right"), "$.right", resolver);

  std::map<long, int> p_index;
  std::vector<long> point_ids;
  for (auto const &v : member(j, "$", "total")) {
    long id = require_int(v, "$.total");
    if (!p_index.try_emplace(id, static_cast<int>(point_ids.size())).second)
      fail("$.total", "duplicate id " + std::to_string(id));
    point_ids.push_back(id);
  }
  int total = static_cast<int>(point_ids.size());
  std::vector<int> pi(total, -1), eps(total, -1);
  for (auto const &pair : member(j, "$", "pi")) {
    if (!pair.is_array() || pair.size() != 2) fail("$.pi", "expected [p, x]");
    pi[lookup(p_index, require_int(pair[0], "$.pi"), "$.pi", "point")] =
        left.object_index(require_int(pair[1], "$.pi"));
  }
  for (auto const &pair : member(j, "$", "eps")) {
    if (!pair.is_array() || pair.size() != 2) fail("$.eps", "expected [p, a]");
    eps[lookup(p_index, require_int(pair[0], "$.eps"), "$.eps", "point")] =
        right.object_index(require_int(pair[1], "$.eps"));
  }
  for (int v : pi)
    if (v < 0) fail("$.pi", "not defined on every point");
  for (int v : eps)
    if (v < 0) fail("$.eps", "not defined on every point");

  std::vector<int> left_act(static_cast<size_t>(left.groupoid.n_arrows()) * total, -1);
  std::vector<int> right_act(static_cast<size_t>(total) * right.groupoid.n_arrows(), -1);
  for (auto const &triple : member(j, "$", "leftAct")) {
    if (!triple.is_array() || triple.size() != 3) fail("$.leftAct", "expected [h, p, q]");
    int h = left.arrow_index(require_int(triple[0], "$.leftAct"));
    int p = lookup(p_index, require_int(triple[1], "$.leftAct"), "$.leftAct", "point");
    int q = lookup(p_index, require_int(triple[2], "$.leftAct"), "$.leftAct", "point");
    left_act[static_cast<size_t>(h) * total + p] = q;
  }
  for (auto const &triple : member(j, "$", "rightAct")) {
    if (!triple.is_array() || triple.size() != 3) fail("$.rightAct", "expected [p, g, q]");
    int p = lookup(p_index, require_int(triple[0], "$.rightAct"), "$.rightAct", "point");
    int g = right.arrow_index(require_int(triple[1], "$.rightAct"));
    int q = lookup(p_index, require_int(triple[2], "$.rightAct"), "$.rightAct", "point");
    right_act[static_cast<size_t>(p) * right.groupoid.n_arrows() + g] = q;
  }
  LoadedBibundle out{Bibundle{}, std::move(left), std::move(right), std::move(point_ids)};
  try {
    out.bundle = Bibundle::from_tables(make_groupoid(out.left.groupoid),
                                       make_groupoid(out.right.groupoid), total, std::move(pi),
                                       std::move(eps), std::move(left_act),
                                       std::move(right_act));
  } catch (std::invalid_argument const &e) {
    fail("$", e.what());
  }
  return out;
}

std::string write_bibundle(Bibundle const &b) {
  json j;
  j["schema"] = "bibundle.v1";
  j["left"] = groupoid_to_json(*b.left());
  j["right"] = groupoid_to_json(*b.right());
  j["total"] = json::array();
  for (int p = 0; p < b.total(); ++p) j["total"].push_back(p);
  j["pi"] = json::array();
  j["eps"] = json::array();
  for (int p = 0; p < b.total(); ++p) {
    j["pi"].push_back({p, b.pi(p)});
    j["eps"].push_back({p, b.eps(p)});
  }
  j["leftAct"] = json::array();
  for (int h = 0; h < b.left()->n_arrows(); ++h)
    for (int p = 0; p < b.total(); ++p)
      if (b.left_act_raw(h, p) >= 0) j["leftAct"].push_back({h, p, b.left_act_raw(h, p)});
  j["rightAct"] = json::array();
  for (int p = 0; p < b.total(); ++p)
    for (int g = 0; g < b.right()->n_arrows(); ++g)
      if (b.right_act_raw(p, g) >= 0) j["rightAct"].push_back({p, g, b.right_act_raw(p, g)});
  return j.dump(2);
}

GroupPresentation read_presentation(std::string const &text) {
  json j = parse(text);
  check_schema(j, "presentation.v1", "$");
  long n = require_int(member(j, "$", "generators"), "$.generators");
  std::vector<Word> relators;
  for (auto const &r : member(j, "$", "relators")) {
    Word w;
    for (auto const &letter : r) w.push_back(static_cast<int>(require_int(letter, "$.relators")));
    relators.push_back(std::move(w));
  }
  try {
    return GroupPresentation(static_cast<int>(n), std::move(relators));
  } catch (std::invalid_argument const &e) {
    fail("$", e.what());
  }
}

std::string write_presentation(GroupPresentation const &p) {
  json j;
  j["schema"] = "presentation.v1";
  j["generators"] = p.generators();
  j["relators"] = json::array();
  for (Word const &r : p.relators()) j["relators"].push_back(r);
  return j.dump(2);
}

LoadedCocycle read_cocycle(std::string const &text, FileResolver const &resolver) {
  json j = parse(text);
  check_schema(j, "cocycle.v1", "$");
  LoadedCocycle out{Cocycle{}, resolve_groupoid(member(j, "$", "groupoid"), "$.groupoid", resolver)};
  out.cocycle.cover.dim = static_cast<int>(require_int(member(j, "$", "n"), "$.n"));
  out.cocycle.cover.N = static_cast<int>(require_int(member(j, "$", "N"), "$.N"));
  try {
    out.cocycle.cover.validate();
  } catch (std::invalid_argument const &e) {
    fail("$", e.what());
  }
  out.cocycle.groupoid = make_groupoid(out.groupoid.groupoid);
  int cells = out.cocycle.cover.cell_count();
  out.cocycle.f.assign(cells, -1);
  out.cocycle.g.assign(static_cast<size_t>(cells) * cells, -1);
  for (auto const &pair : member(j, "$", "f")) {
    if (!pair.is_array() || pair.size() != 2) fail("$.f", "expected [mu, obj]");
    long mu = require_int(pair[0], "$.f");
    if (mu < 0 || mu >= cells) fail("$.f", "cell index out of range");
    out.cocycle.f[mu] = out.groupoid.object_index(require_int(pair[1], "$.f"));
  }
  for (int mu = 0; mu < cells; ++mu)
    if (out.cocycle.f[mu] < 0) fail("$.f", "cell " + std::to_string(mu) + " unlabeled");
  for (auto const &triple : member(j, "$", "g")) {
    if (!triple.is_array() || triple.size() != 3) fail("$.g", "expected [mu, nu, arrow]");
    long mu = require_int(triple[0], "$.g"), nu = require_int(triple[1], "$.g");
    if (mu < 0 || mu >= cells || nu < 0 || nu >= cells) fail("$.g", "cell index out of range");
    out.cocycle.set_transition(static_cast<int>(mu), static_cast<int>(nu),
                               out.groupoid.arrow_index(require_int(triple[2], "$.g")));
  }
  return out;
}

std::string write_cocycle(Cocycle const &c) {
  json j;
  j["schema"] = "cocycle.v1";
  j["n"] = c.cover.dim;
  j["N"] = c.cover.N;
  j["groupoid"] = groupoid_to_json(*c.groupoid);
  j["f"] = json::array();
  for (int mu = 0; mu < c.cover.cell_count(); ++mu) j["f"].push_back({mu, c.f[mu]});
  j["g"] = json::array();
  for (int mu = 0; mu < c.cover.cell_count(); ++mu)
    for (int nu = 0; nu < c.cover.cell_count(); ++nu)
      if (c.transition(mu, nu) >= 0) j["g"].push_back({mu, nu, c.transition(mu, nu)});
  return j.dump(2);
}

// ---- reports -----------------------------------------------------------------

namespace {

template <typename V, typename F>
std::string violations_json(std::vector<V> const &violations, F message) {
  json j;
  j["schema"] = "report.v1";
  j["verdict"] = violations.empty() ? "exact" : "obstruction-found";
  j["pass"] = violations.empty();
  j["violations"] = json::array();
  for (auto const &v : violations) j["violations"].push_back(message(v));
  return j.dump(2);
}

}  // namespace

std::string groupoid_report_json(std::vector<GroupoidViolation> const &violations) {
  return violations_json(violations, [](GroupoidViolation const &v) { return v.message; });
}

std::string bibundle_report_json(std::vector<BibundleViolation> const &violations) {
  return violations_json(violations, [](BibundleViolation const &v) { return v.message; });
}

std::string cocycle_report_json(std::vector<CocycleViolation> const &violations) {
  return violations_json(violations, [](CocycleViolation const &v) { return v.message; });
}

std::string sequence_check_json(SequenceCheck const &check) {
  json j;
  j["schema"] = "report.v1";
  j["verdict"] = verdict_name(check.overall);
  j["pass"] = check.passed();
  j["summary"] = check.summary;
  j["checks"] = json::array();
  for (auto const &item : check.items)
    j["checks"].push_back({{"name", item.name}, {"pass", item.pass}, {"detail", item.detail}});
  return j.dump(2);
}

std::string morita_json(MoritaDecision const &decision) {
  json j;
  j["schema"] = "report.v1";
  j["equivalent"] = decision.equivalent;
  j["pass"] = decision.equivalent;
  j["reason"] = decision.reason;
  if (decision.witness) j["witness"] = json::parse(write_bibundle(*decision.witness));
  return j.dump(2);
}

std::string principality_json(PrincipalityReport const &report) {
  json j;
  j["schema"] = "report.v1";
  j["pass"] = report.principal();
  j["surjectivePi"] = report.surjective_pi;
  j["rightActionFree"] = report.right_action_free;
  j["rightActionFiberTransitive"] = report.right_action_fiber_transitive;
  if (report.empty_fiber_object >= 0) j["emptyFiberObject"] = report.empty_fiber_object;
  if (report.stabilizer_witness[0] >= 0)
    j["stabilizerWitness"] = {report.stabilizer_witness[0], report.stabilizer_witness[1]};
  if (report.untransitive_pair[0] >= 0)
    j["untransitivePair"] = {report.untransitive_pair[0], report.untransitive_pair[1]};
  return j.dump(2);
}

}  // namespace gpd::io
