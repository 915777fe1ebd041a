#include <gpd/groupoid.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gpd {

namespace {

std::string tuple_str(std::initializer_list<int> ids) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (int x : ids) {
    if (!first) os << ", ";
    os << x;
    first = false;
  }
  os << ")";
  return os.str();
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
};

}  // namespace

FiniteGroupoid FiniteGroupoid::from_tables(int n_objects, std::vector<int> src,
                                           std::vector<int> tgt, std::vector<int> comp,
                                           std::vector<int> inv, std::vector<int> unit) {
  int n_arrows = static_cast<int>(src.size());
  if (n_objects < 0) throw std::invalid_argument("groupoid: negative object count");
  if (n_arrows > kMaxGroupoidArrows)
    throw std::invalid_argument("groupoid: arrow count exceeds dense-table limit");
  if (tgt.size() != src.size() || inv.size() != src.size())
    throw std::invalid_argument("groupoid: table sizes disagree");
  if (static_cast<int>(unit.size()) != n_objects)
    throw std::invalid_argument("groupoid: unit table size");
  if (comp.size() != static_cast<size_t>(n_arrows) * n_arrows)
    throw std::invalid_argument("groupoid: comp table size");
  auto in_obj = [&](int x) { return x >= 0 && x < n_objects; };
  auto in_arr = [&](int g) { return g >= 0 && g < n_arrows; };
  for (int g = 0; g < n_arrows; ++g)
    if (!in_obj(src[g]) || !in_obj(tgt[g]) || !in_arr(inv[g]))
      throw std::invalid_argument("groupoid: id out of range");
  for (int x = 0; x < n_objects; ++x)
    if (!in_arr(unit[x])) throw std::invalid_argument("groupoid: unit id out of range");
  for (int v : comp)
    if (v < -1 || v >= n_arrows) throw std::invalid_argument("groupoid: comp id out of range");

  FiniteGroupoid g;
  g.n_objects_ = n_objects;
  g.src_ = std::move(src);
  g.tgt_ = std::move(tgt);
  g.comp_ = std::move(comp);
  g.inv_ = std::move(inv);
  g.unit_ = std::move(unit);
  g.by_src_.assign(n_objects, {});
  g.by_tgt_.assign(n_objects, {});
  for (int a = 0; a < n_arrows; ++a) {
    g.by_src_[g.src_[a]].push_back(a);
    g.by_tgt_[g.tgt_[a]].push_back(a);
  }
  return g;
}

int FiniteGroupoid::comp(int g, int h) const {
  int r = comp_raw(g, h);
  if (r < 0) throw std::logic_error("groupoid: composing non-composable arrows");
  return r;
}

std::vector<int> FiniteGroupoid::arrows_between(int x, int y) const {
  std::vector<int> out;
  for (int a : by_src_[x])
    if (tgt_[a] == y) out.push_back(a);
  return out;
}

GroupoidRef make_groupoid(FiniteGroupoid g) {
  return std::make_shared<const FiniteGroupoid>(std::move(g));
}

std::vector<GroupoidViolation> validate_groupoid(FiniteGroupoid const &g,
                                                 size_t max_reports) {
  std::vector<GroupoidViolation> out;
  auto add = [&](GroupoidViolation::Kind kind, std::array<int, 3> ids, std::string msg) {
    if (out.size() < max_reports)
      out.push_back({kind, ids, std::move(msg)});
  };
  using K = GroupoidViolation::Kind;
  int const na = g.n_arrows();

  for (int a = 0; a < na && out.size() < max_reports; ++a)
    for (int b = 0; b < na; ++b) {
      bool composable = g.src(a) == g.tgt(b);
      int c = g.comp_raw(a, b);
      if (composable && c < 0) {
        add(K::BadCompDomain, {a, b, -1}, "comp undefined on composable pair " + tuple_str({a, b}));
      } else if (!composable && c >= 0) {
        add(K::BadCompDomain, {a, b, c}, "comp defined on non-composable pair " + tuple_str({a, b}));
      } else if (c >= 0 && (g.src(c) != g.src(b) || g.tgt(c) != g.tgt(a))) {
        add(K::BadCompEndpoints, {a, b, c},
            "composite " + tuple_str({a, b}) + " has wrong endpoints");
      }
      if (out.size() >= max_reports) break;
    }

  for (int x = 0; x < g.n_objects() && out.size() < max_reports; ++x) {
    int u = g.unit(x);
    if (g.src(u) != x || g.tgt(u) != x)
      add(K::BadUnit, {x, u, -1}, "unit of object " + std::to_string(x) + " is not a loop there");
  }
  for (int a = 0; a < na && out.size() < max_reports; ++a) {
    int ls = g.unit(g.tgt(a)), rs = g.unit(g.src(a));
    if (g.comp_raw(ls, a) != a || g.comp_raw(a, rs) != a)
      add(K::BadUnit, {a, -1, -1}, "unit does not act as identity at arrow " + std::to_string(a));
    int i = g.inv(a);
    if (g.src(i) != g.tgt(a) || g.tgt(i) != g.src(a) ||
        g.comp_raw(a, i) != g.unit(g.tgt(a)) || g.comp_raw(i, a) != g.unit(g.src(a)))
      add(K::BadInverse, {a, i, -1}, "inverse fails at arrow " + std::to_string(a));
  }

  // associativity over composable triples
  for (int a = 0; a < na && out.size() < max_reports; ++a)
    for (int b : g.arrows_into(g.src(a))) {
      for (int c : g.arrows_into(g.src(b))) {
        int ab = g.comp_raw(a, b), bc = g.comp_raw(b, c);
        if (ab < 0 || bc < 0) continue;  // reported above
        if (g.comp_raw(ab, c) != g.comp_raw(a, bc)) {
          add(K::NotAssociative, {a, b, c}, "associativity fails on " + tuple_str({a, b, c}));
          if (out.size() >= max_reports) break;
        }
      }
      if (out.size() >= max_reports) break;
    }
  return out;
}

FiniteGroupoid pair_groupoid(int n_points) {
  if (n_points < 1) throw std::invalid_argument("pair_groupoid: empty set");
  int n = n_points;
  int na = n * n;
  auto id = [n](int a, int b) { return a * n + b; };  // arrow b -> a
  std::vector<int> src(na), tgt(na), inv(na), unit(n);
  std::vector<int> comp(static_cast<size_t>(na) * na, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      src[id(a, b)] = b;
      tgt[id(a, b)] = a;
      inv[id(a, b)] = id(b, a);
    }
  for (int x = 0; x < n; ++x) unit[x] = id(x, x);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        comp[static_cast<size_t>(id(a, b)) * na + id(b, c)] = id(a, c);
  return FiniteGroupoid::from_tables(n, std::move(src), std::move(tgt), std::move(comp),
                                     std::move(inv), std::move(unit));
}

FiniteGroupoid unit_groupoid(int n_points) {
  if (n_points < 1) throw std::invalid_argument("unit_groupoid: empty set");
  int n = n_points;
  std::vector<int> src(n), tgt(n), inv(n), unit(n);
  std::vector<int> comp(static_cast<size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x) {
    src[x] = tgt[x] = x;
    inv[x] = x;
    unit[x] = x;
    comp[static_cast<size_t>(x) * n + x] = x;
  }
  return FiniteGroupoid::from_tables(n, std::move(src), std::move(tgt), std::move(comp),
                                     std::move(inv), std::move(unit));
}

FiniteGroupoid group_as_groupoid(FiniteGroup const &g) {
  int n = g.order();
  std::vector<int> src(n, 0), tgt(n, 0), inv(n), unit{g.identity()};
  std::vector<int> comp(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    inv[a] = g.inv(a);
    for (int b = 0; b < n; ++b) comp[static_cast<size_t>(a) * n + b] = g.mul(a, b);
  }
  return FiniteGroupoid::from_tables(1, std::move(src), std::move(tgt), std::move(comp),
                                     std::move(inv), std::move(unit));
}

void SetAction::validate() const {
  if (carrier < 0 || table.size() != static_cast<size_t>(group.order()) * carrier)
    throw std::invalid_argument("action: table size");
  for (int v : table)
    if (v < 0 || v >= carrier) throw std::invalid_argument("action: point out of range");
  for (int x = 0; x < carrier; ++x)
    if (act(group.identity(), x) != x)
      throw std::invalid_argument("action: identity moves a point");
  for (int g = 0; g < group.order(); ++g)
    for (int h = 0; h < group.order(); ++h)
      for (int x = 0; x < carrier; ++x)
        if (act(g, act(h, x)) != act(group.mul(g, h), x))
          throw std::invalid_argument("action: composition law fails");
}

int translation_arrow_id(SetAction const &a, int g, int x) { return g * a.carrier + x; }

FiniteGroupoid translation_groupoid(SetAction const &a) {
  a.validate();
  int const m = a.group.order(), n = a.carrier;
  int const na = m * n;
  std::vector<int> src(na), tgt(na), inv(na), unit(n);
  std::vector<int> comp(static_cast<size_t>(na) * na, -1);
  for (int g = 0; g < m; ++g)
    for (int x = 0; x < n; ++x) {
      int id = translation_arrow_id(a, g, x);
      src[id] = x;
      tgt[id] = a.act(g, x);
      inv[id] = translation_arrow_id(a, a.group.inv(g), a.act(g, x));
    }
  for (int x = 0; x < n; ++x) unit[x] = translation_arrow_id(a, a.group.identity(), x);
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h)
      for (int x = 0; x < n; ++x) {
        // (g, h.x) after (h, x) = (gh, x)
        int lhs = translation_arrow_id(a, g, a.act(h, x));
        int rhs = translation_arrow_id(a, h, x);
        comp[static_cast<size_t>(lhs) * na + rhs] = translation_arrow_id(a, a.group.mul(g, h), x);
      }
  return FiniteGroupoid::from_tables(n, std::move(src), std::move(tgt), std::move(comp),
                                     std::move(inv), std::move(unit));
}

FiniteGroupoid product_groupoid(FiniteGroupoid const &a, FiniteGroupoid const &b) {
  int no = a.n_objects() * b.n_objects();
  long na_long = static_cast<long>(a.n_arrows()) * b.n_arrows();
  if (na_long > kMaxGroupoidArrows)
    throw std::invalid_argument("product_groupoid: too many arrows");
  int na = static_cast<int>(na_long);
  auto obj = [&](int x, int y) { return x * b.n_objects() + y; };
  auto arr = [&](int g, int h) { return g * b.n_arrows() + h; };
  std::vector<int> src(na), tgt(na), inv(na), unit(no);
  std::vector<int> comp(static_cast<size_t>(na) * na, -1);
  for (int g = 0; g < a.n_arrows(); ++g)
    for (int h = 0; h < b.n_arrows(); ++h) {
      src[arr(g, h)] = obj(a.src(g), b.src(h));
      tgt[arr(g, h)] = obj(a.tgt(g), b.tgt(h));
      inv[arr(g, h)] = arr(a.inv(g), b.inv(h));
    }
  for (int x = 0; x < a.n_objects(); ++x)
    for (int y = 0; y < b.n_objects(); ++y) unit[obj(x, y)] = arr(a.unit(x), b.unit(y));
  for (int g = 0; g < a.n_arrows(); ++g)
    for (int h = 0; h < b.n_arrows(); ++h)
      for (int g2 = 0; g2 < a.n_arrows(); ++g2) {
        int gg = a.comp_raw(g, g2);
        if (gg < 0) continue;
        for (int h2 = 0; h2 < b.n_arrows(); ++h2) {
          int hh = b.comp_raw(h, h2);
          if (hh < 0) continue;
          comp[static_cast<size_t>(arr(g, h)) * na + arr(g2, h2)] = arr(gg, hh);
        }
      }
  return FiniteGroupoid::from_tables(no, std::move(src), std::move(tgt), std::move(comp),
                                     std::move(inv), std::move(unit));
}

FiniteGroupoid disjoint_union(FiniteGroupoid const &a, FiniteGroupoid const &b) {
  int no = a.n_objects() + b.n_objects();
  int na = a.n_arrows() + b.n_arrows();
  if (na > kMaxGroupoidArrows) throw std::invalid_argument("disjoint_union: too many arrows");
  int const oa = a.n_objects(), ga = a.n_arrows();
  std::vector<int> src(na), tgt(na), inv(na), unit(no);
  std::vector<int> comp(static_cast<size_t>(na) * na, -1);
  for (int g = 0; g < ga; ++g) {
    src[g] = a.src(g);
    tgt[g] = a.tgt(g);
    inv[g] = a.inv(g);
  }
  for (int g = 0; g < b.n_arrows(); ++g) {
    src[ga + g] = oa + b.src(g);
    tgt[ga + g] = oa + b.tgt(g);
    inv[ga + g] = ga + b.inv(g);
  }
  for (int x = 0; x < oa; ++x) unit[x] = a.unit(x);
  for (int x = 0; x < b.n_objects(); ++x) unit[oa + x] = ga + b.unit(x);
  for (int g = 0; g < ga; ++g)
    for (int h = 0; h < ga; ++h) {
      int c = a.comp_raw(g, h);
      if (c >= 0) comp[static_cast<size_t>(g) * na + h] = c;
    }
  for (int g = 0; g < b.n_arrows(); ++g)
    for (int h = 0; h < b.n_arrows(); ++h) {
      int c = b.comp_raw(g, h);
      if (c >= 0) comp[static_cast<size_t>(ga + g) * na + (ga + h)] = ga + c;
    }
  return FiniteGroupoid::from_tables(no, std::move(src), std::move(tgt), std::move(comp),
                                     std::move(inv), std::move(unit));
}

FiniteGroupoid relabel(FiniteGroupoid const &g, std::vector<int> const &obj_perm,
                       std::vector<int> const &arr_perm) {
  int no = g.n_objects(), na = g.n_arrows();
  std::vector<int> src(na), tgt(na), inv(na), unit(no);
  std::vector<int> comp(static_cast<size_t>(na) * na, -1);
  for (int a = 0; a < na; ++a) {
    src[arr_perm[a]] = obj_perm[g.src(a)];
    tgt[arr_perm[a]] = obj_perm[g.tgt(a)];
    inv[arr_perm[a]] = arr_perm[g.inv(a)];
  }
  for (int x = 0; x < no; ++x) unit[obj_perm[x]] = arr_perm[g.unit(x)];
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < na; ++b) {
      int c = g.comp_raw(a, b);
      if (c >= 0) comp[static_cast<size_t>(arr_perm[a]) * na + arr_perm[b]] = arr_perm[c];
    }
  return FiniteGroupoid::from_tables(no, std::move(src), std::move(tgt), std::move(comp),
                                     std::move(inv), std::move(unit));
}

OrbitPartition orbits(FiniteGroupoid const &g) {
  UnionFind uf(g.n_objects());
  for (int a = 0; a < g.n_arrows(); ++a) uf.unite(g.src(a), g.tgt(a));
  OrbitPartition p;
  p.class_of.assign(g.n_objects(), -1);
  for (int x = 0; x < g.n_objects(); ++x) {
    int root = uf.find(x);
    if (p.class_of[root] < 0) {
      p.class_of[root] = static_cast<int>(p.classes.size());
      p.classes.push_back({});
    }
    p.class_of[x] = p.class_of[root];
    p.classes[p.class_of[x]].push_back(x);
  }
  return p;
}

Isotropy isotropy(FiniteGroupoid const &g, int object) {
  if (object < 0 || object >= g.n_objects())
    throw std::invalid_argument("isotropy: unknown object id");
  Isotropy iso;
  iso.object = object;
  for (int a : g.arrows_from(object))
    if (g.tgt(a) == object) iso.arrows.push_back(a);
  std::vector<int> index(g.n_arrows(), -1);
  for (size_t i = 0; i < iso.arrows.size(); ++i) index[iso.arrows[i]] = static_cast<int>(i);
  int m = static_cast<int>(iso.arrows.size());
  std::vector<std::vector<int>> mul(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int c = g.comp_raw(iso.arrows[i], iso.arrows[j]);
      if (c < 0 || index[c] < 0) throw std::logic_error("isotropy: arrows not closed");
      mul[i][j] = index[c];
    }
  iso.group = FiniteGroup::from_table(mul);
  return iso;
}

BaseChangeIso base_change_iso(FiniteGroupoid const &g, int arrow) {
  if (arrow < 0 || arrow >= g.n_arrows())
    throw std::invalid_argument("base_change_iso: unknown arrow id");
  int a1 = g.src(arrow), a0 = g.tgt(arrow);
  BaseChangeIso out{isotropy(g, a0), isotropy(g, a1), {}};
  std::vector<int> index(g.n_arrows(), -1);
  for (size_t i = 0; i < out.to.arrows.size(); ++i)
    index[out.to.arrows[i]] = static_cast<int>(i);
  int gi = g.inv(arrow);
  out.map.reserve(out.from.arrows.size());
  for (int x : out.from.arrows) {
    int y = g.comp(g.comp(gi, x), arrow);
    if (index[y] < 0) throw std::logic_error("base_change_iso: conjugate escaped isotropy");
    out.map.push_back(index[y]);
  }
  // verified isomorphism: bijective homomorphism between the two tables
  std::vector<bool> hit(out.to.arrows.size(), false);
  for (int v : out.map) {
    if (hit[v]) throw std::logic_error("base_change_iso: not injective");
    hit[v] = true;
  }
  for (size_t i = 0; i < out.map.size(); ++i)
    for (size_t j = 0; j < out.map.size(); ++j)
      if (out.map[out.from.group.mul(static_cast<int>(i), static_cast<int>(j))] !=
          out.to.group.mul(out.map[i], out.map[j]))
        throw std::logic_error("base_change_iso: not a homomorphism");
  return out;
}

GroupoidFunctor::GroupoidFunctor(GroupoidRef source, GroupoidRef target,
                                 std::vector<int> obj_map, std::vector<int> arr_map)
    : source_(std::move(source)), target_(std::move(target)),
      obj_map_(std::move(obj_map)), arr_map_(std::move(arr_map)) {
  if (!source_ || !target_) throw std::invalid_argument("functor: null groupoid");
  FiniteGroupoid const &s = *source_;
  FiniteGroupoid const &t = *target_;
  if (static_cast<int>(obj_map_.size()) != s.n_objects() ||
      static_cast<int>(arr_map_.size()) != s.n_arrows())
    throw std::invalid_argument("functor: map sizes");
  for (int x : obj_map_)
    if (x < 0 || x >= t.n_objects()) throw std::invalid_argument("functor: object image range");
  for (int a : arr_map_)
    if (a < 0 || a >= t.n_arrows()) throw std::invalid_argument("functor: arrow image range");
  for (int a = 0; a < s.n_arrows(); ++a) {
    if (t.src(arr_map_[a]) != obj_map_[s.src(a)] || t.tgt(arr_map_[a]) != obj_map_[s.tgt(a)])
      throw std::invalid_argument("functor: does not commute with src/tgt");
    if (arr_map_[s.inv(a)] != t.inv(arr_map_[a]))
      throw std::invalid_argument("functor: does not commute with inv");
  }
  for (int x = 0; x < s.n_objects(); ++x)
    if (arr_map_[s.unit(x)] != t.unit(obj_map_[x]))
      throw std::invalid_argument("functor: does not preserve units");
  for (int a = 0; a < s.n_arrows(); ++a)
    for (int b = 0; b < s.n_arrows(); ++b) {
      int c = s.comp_raw(a, b);
      if (c < 0) continue;
      if (t.comp_raw(arr_map_[a], arr_map_[b]) != arr_map_[c])
        throw std::invalid_argument("functor: does not preserve composition");
    }
}

GroupoidFunctor identity_functor(GroupoidRef g) {
  std::vector<int> obj(g->n_objects()), arr(g->n_arrows());
  std::iota(obj.begin(), obj.end(), 0);
  std::iota(arr.begin(), arr.end(), 0);
  return GroupoidFunctor(g, g, std::move(obj), std::move(arr));
}

GroupoidFunctor compose(GroupoidFunctor const &psi, GroupoidFunctor const &phi) {
  if (phi.target() != psi.source())
    throw std::invalid_argument("compose: functors are not composable");
  std::vector<int> obj(phi.source()->n_objects()), arr(phi.source()->n_arrows());
  for (size_t x = 0; x < obj.size(); ++x) obj[x] = psi.on_object(phi.on_object(static_cast<int>(x)));
  for (size_t a = 0; a < arr.size(); ++a) arr[a] = psi.on_arrow(phi.on_arrow(static_cast<int>(a)));
  return GroupoidFunctor(phi.source(), psi.target(), std::move(obj), std::move(arr));
}

WeakEquivalenceReport is_weak_equivalence(GroupoidFunctor const &phi) {
  FiniteGroupoid const &h = *phi.source();
  FiniteGroupoid const &g = *phi.target();
  WeakEquivalenceReport report;

  // essential surjectivity: every target object sees an arrow from the image
  std::vector<bool> in_image(g.n_objects(), false);
  for (int x = 0; x < h.n_objects(); ++x) in_image[phi.on_object(x)] = true;
  OrbitPartition target_orbits = orbits(g);
  report.essentially_surjective = true;
  std::vector<bool> orbit_hit(target_orbits.classes.size(), false);
  for (int y = 0; y < g.n_objects(); ++y)
    if (in_image[y]) orbit_hit[target_orbits.class_of[y]] = true;
  for (int y = 0; y < g.n_objects(); ++y)
    if (!orbit_hit[target_orbits.class_of[y]]) {
      report.essentially_surjective = false;
      report.missed_object = y;
      report.detail = "object " + std::to_string(y) + " is not reached from the image";
      break;
    }

  // fully faithful: bijection on hom-sets for every object pair
  report.fully_faithful = true;
  for (int x = 0; x < h.n_objects() && report.fully_faithful; ++x)
    for (int y = 0; y < h.n_objects(); ++y) {
      std::vector<int> hom_h = h.arrows_between(x, y);
      std::vector<int> hom_g = g.arrows_between(phi.on_object(x), phi.on_object(y));
      std::vector<bool> hit(g.n_arrows(), false);
      bool injective = true;
      for (int a : hom_h) {
        int im = phi.on_arrow(a);
        if (hit[im]) injective = false;
        hit[im] = true;
      }
      if (!injective || hom_h.size() != hom_g.size()) {
        report.fully_faithful = false;
        report.not_faithful_at = {x, y};
        report.detail = "hom-set " + tuple_str({x, y}) + " is not mapped bijectively";
        break;
      }
    }
  return report;
}

}  // namespace gpd
