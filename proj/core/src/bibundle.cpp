#include <gpd/bibundle.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace gpd {

namespace {

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

bool same_groupoid(GroupoidRef const &a, GroupoidRef const &b) {
  return a == b || *a == *b;
}

}  // namespace

Bibundle Bibundle::from_tables(GroupoidRef left, GroupoidRef right, int total,
                               std::vector<int> pi, std::vector<int> eps,
                               std::vector<int> left_act, std::vector<int> right_act) {
  if (!left || !right) throw std::invalid_argument("bibundle: null groupoid");
  if (total < 0) throw std::invalid_argument("bibundle: negative total");
  if (static_cast<int>(pi.size()) != total || static_cast<int>(eps.size()) != total)
    throw std::invalid_argument("bibundle: anchor table size");
  if (left_act.size() != static_cast<size_t>(left->n_arrows()) * total ||
      right_act.size() != static_cast<size_t>(total) * right->n_arrows())
    throw std::invalid_argument("bibundle: action table size");
  for (int x : pi)
    if (x < 0 || x >= left->n_objects()) throw std::invalid_argument("bibundle: pi range");
  for (int a : eps)
    if (a < 0 || a >= right->n_objects()) throw std::invalid_argument("bibundle: eps range");
  for (int v : left_act)
    if (v < -1 || v >= total) throw std::invalid_argument("bibundle: left action range");
  for (int v : right_act)
    if (v < -1 || v >= total) throw std::invalid_argument("bibundle: right action range");
  Bibundle b;
  b.left_ = std::move(left);
  b.right_ = std::move(right);
  b.total_ = total;
  b.pi_ = std::move(pi);
  b.eps_ = std::move(eps);
  b.left_act_ = std::move(left_act);
  b.right_act_ = std::move(right_act);
  return b;
}

int Bibundle::left_act(int h, int p) const {
  int q = left_act_raw(h, p);
  if (q < 0) throw std::logic_error("bibundle: left action undefined");
  return q;
}

int Bibundle::right_act(int p, int g) const {
  int q = right_act_raw(p, g);
  if (q < 0) throw std::logic_error("bibundle: right action undefined");
  return q;
}

std::vector<BibundleViolation> validate_bibundle(Bibundle const &b, size_t max_reports) {
  std::vector<BibundleViolation> out;
  auto add = [&](std::string msg) {
    if (out.size() < max_reports) out.push_back({std::move(msg)});
  };
  FiniteGroupoid const &h = *b.left();
  FiniteGroupoid const &g = *b.right();

  for (int a = 0; a < h.n_arrows(); ++a)
    for (int p = 0; p < b.total(); ++p) {
      bool should = h.src(a) == b.pi(p);
      int q = b.left_act_raw(a, p);
      if (should && q < 0)
        add("left action undefined at arrow " + std::to_string(a) + ", point " + std::to_string(p));
      if (!should && q >= 0)
        add("left action defined off-domain at arrow " + std::to_string(a) + ", point " +
            std::to_string(p));
      if (q >= 0 && should) {
        if (b.pi(q) != h.tgt(a)) add("pi(h.p) != tgt(h) at arrow " + std::to_string(a));
        if (b.eps(q) != b.eps(p)) add("eps(h.p) != eps(p) at arrow " + std::to_string(a));
      }
    }
  for (int p = 0; p < b.total(); ++p)
    for (int a = 0; a < g.n_arrows(); ++a) {
      bool should = b.eps(p) == g.tgt(a);
      int q = b.right_act_raw(p, a);
      if (should && q < 0)
        add("right action undefined at point " + std::to_string(p) + ", arrow " + std::to_string(a));
      if (!should && q >= 0)
        add("right action defined off-domain at point " + std::to_string(p) + ", arrow " +
            std::to_string(a));
      if (q >= 0 && should) {
        if (b.eps(q) != g.src(a)) add("eps(p.g) != src(g) at arrow " + std::to_string(a));
        if (b.pi(q) != b.pi(p)) add("pi(p.g) != pi(p) at arrow " + std::to_string(a));
      }
    }
  if (!out.empty()) return out;  // law checks below assume clean domains

  for (int p = 0; p < b.total(); ++p) {
    if (b.left_act_raw(h.unit(b.pi(p)), p) != p)
      add("left unit does not fix point " + std::to_string(p));
    if (b.right_act_raw(p, g.unit(b.eps(p))) != p)
      add("right unit does not fix point " + std::to_string(p));
  }
  for (int a = 0; a < h.n_arrows(); ++a)
    for (int a2 : h.arrows_into(h.src(a)))
      for (int p = 0; p < b.total(); ++p) {
        if (h.src(a2) != b.pi(p)) continue;
        int lhs = b.left_act_raw(a, b.left_act_raw(a2, p));
        int rhs = b.left_act_raw(h.comp_raw(a, a2), p);
        if (lhs != rhs)
          add("left action not associative at arrows " + std::to_string(a) + "," +
              std::to_string(a2));
      }
  for (int p = 0; p < b.total(); ++p)
    for (int a = 0; a < g.n_arrows(); ++a) {
      if (b.eps(p) != g.tgt(a)) continue;
      for (int a2 : g.arrows_into(g.src(a))) {
        int lhs = b.right_act_raw(b.right_act_raw(p, a), a2);
        int rhs = b.right_act_raw(p, g.comp_raw(a, a2));
        if (lhs != rhs) add("right action not associative at point " + std::to_string(p));
      }
    }
  for (int a = 0; a < h.n_arrows(); ++a)
    for (int p = 0; p < b.total(); ++p) {
      if (h.src(a) != b.pi(p)) continue;
      for (int c = 0; c < g.n_arrows(); ++c) {
        if (b.eps(p) != g.tgt(c)) continue;
        if (b.left_act_raw(a, b.right_act_raw(p, c)) !=
            b.right_act_raw(b.left_act_raw(a, p), c))
          add("actions do not commute at arrow " + std::to_string(a) + ", point " +
              std::to_string(p));
      }
    }
  return out;
}

PrincipalityReport is_principal(Bibundle const &b) {
  FiniteGroupoid const &g = *b.right();
  PrincipalityReport report;

  report.surjective_pi = true;
  std::vector<bool> hit(b.left()->n_objects(), false);
  for (int p = 0; p < b.total(); ++p) hit[b.pi(p)] = true;
  for (int x = 0; x < b.left()->n_objects(); ++x)
    if (!hit[x]) {
      report.surjective_pi = false;
      report.empty_fiber_object = x;
      break;
    }

  report.right_action_free = true;
  for (int p = 0; p < b.total() && report.right_action_free; ++p)
    for (int a = 0; a < g.n_arrows(); ++a) {
      if (b.eps(p) != g.tgt(a)) continue;
      if (b.right_act_raw(p, a) == p && a != g.unit(b.eps(p))) {
        report.right_action_free = false;
        report.stabilizer_witness = {p, a};
        break;
      }
    }

  report.right_action_fiber_transitive = true;
  for (int p = 0; p < b.total() && report.right_action_fiber_transitive; ++p)
    for (int p2 = 0; p2 < b.total(); ++p2) {
      if (b.pi(p) != b.pi(p2)) continue;
      if (translation_arrow(b, p, p2) < 0) {
        report.right_action_fiber_transitive = false;
        report.untransitive_pair = {p, p2};
        break;
      }
    }
  return report;
}

PrincipalityReport is_left_principal(Bibundle const &b) {
  FiniteGroupoid const &h = *b.left();
  PrincipalityReport report;

  report.surjective_pi = true;
  std::vector<bool> hit(b.right()->n_objects(), false);
  for (int p = 0; p < b.total(); ++p) hit[b.eps(p)] = true;
  for (int x = 0; x < b.right()->n_objects(); ++x)
    if (!hit[x]) {
      report.surjective_pi = false;
      report.empty_fiber_object = x;
      break;
    }

  report.right_action_free = true;
  for (int p = 0; p < b.total() && report.right_action_free; ++p)
    for (int a = 0; a < h.n_arrows(); ++a) {
      if (h.src(a) != b.pi(p)) continue;
      if (b.left_act_raw(a, p) == p && a != h.unit(b.pi(p))) {
        report.right_action_free = false;
        report.stabilizer_witness = {p, a};
        break;
      }
    }

  report.right_action_fiber_transitive = true;
  for (int p = 0; p < b.total() && report.right_action_fiber_transitive; ++p)
    for (int p2 = 0; p2 < b.total(); ++p2) {
      if (b.eps(p) != b.eps(p2)) continue;
      bool found = false;
      for (int a = 0; a < h.n_arrows() && !found; ++a)
        if (h.src(a) == b.pi(p) && b.left_act_raw(a, p) == p2) found = true;
      if (!found) {
        report.right_action_fiber_transitive = false;
        report.untransitive_pair = {p, p2};
        break;
      }
    }
  return report;
}

int translation_arrow(Bibundle const &b, int p, int p2) {
  FiniteGroupoid const &g = *b.right();
  for (int a : g.arrows_into(b.eps(p)))
    if (b.right_act_raw(p, a) == p2) return a;
  return -1;
}

Bibundle bundle_from_functor(GroupoidFunctor const &phi) {
  FiniteGroupoid const &h = *phi.source();
  FiniteGroupoid const &g = *phi.target();
  // points (y, a) with phi(y) = tgt(a), in (y, a) lexicographic order
  std::vector<std::pair<int, int>> points;
  std::vector<std::vector<int>> index(h.n_objects(), std::vector<int>(g.n_arrows(), -1));
  for (int y = 0; y < h.n_objects(); ++y)
    for (int a = 0; a < g.n_arrows(); ++a)
      if (phi.on_object(y) == g.tgt(a)) {
        index[y][a] = static_cast<int>(points.size());
        points.emplace_back(y, a);
      }
  int total = static_cast<int>(points.size());
  std::vector<int> pi(total), eps(total);
  for (int p = 0; p < total; ++p) {
    pi[p] = points[p].first;
    eps[p] = g.src(points[p].second);
  }
  std::vector<int> left_act(static_cast<size_t>(h.n_arrows()) * total, -1);
  std::vector<int> right_act(static_cast<size_t>(total) * g.n_arrows(), -1);
  for (int p = 0; p < total; ++p) {
    auto [y, a] = points[p];
    for (int hh : h.arrows_from(y))
      left_act[static_cast<size_t>(hh) * total + p] =
          index[h.tgt(hh)][g.comp(phi.on_arrow(hh), a)];
    for (int c : g.arrows_into(g.src(a)))
      right_act[static_cast<size_t>(p) * g.n_arrows() + c] = index[y][g.comp(a, c)];
  }
  return Bibundle::from_tables(phi.source(), phi.target(), total, std::move(pi),
                               std::move(eps), std::move(left_act), std::move(right_act));
}

Bibundle unit_bundle(GroupoidRef g) {
  return bundle_from_functor(identity_functor(std::move(g)));
}

Bibundle tensor(Bibundle const &q, Bibundle const &p) {
  if (!same_groupoid(q.right(), p.left()))
    throw std::invalid_argument("tensor: middle groupoids disagree");
  FiniteGroupoid const &mid = *q.right();

  // fibered product pairs (a, c) with eps_Q(a) = pi_P(c)
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> pair_index(q.total(), std::vector<int>(p.total(), -1));
  for (int a = 0; a < q.total(); ++a)
    for (int c = 0; c < p.total(); ++c)
      if (q.eps(a) == p.pi(c)) {
        pair_index[a][c] = static_cast<int>(pairs.size());
        pairs.emplace_back(a, c);
      }

  // diagonal middle action: (a, c) ~ (a.m, m^-1.c)
  UnionFind uf(static_cast<int>(pairs.size()));
  for (size_t i = 0; i < pairs.size(); ++i) {
    auto [a, c] = pairs[i];
    for (int m : mid.arrows_into(q.eps(a))) {
      int a2 = q.right_act_raw(a, m);
      int c2 = p.left_act_raw(mid.inv(m), c);
      uf.unite(static_cast<int>(i), pair_index[a2][c2]);
    }
  }

  std::vector<int> class_of(pairs.size(), -1);
  std::vector<int> rep;  // least pair per class, ascending
  for (size_t i = 0; i < pairs.size(); ++i) {
    int root = uf.find(static_cast<int>(i));
    if (class_of[root] < 0) {
      class_of[root] = static_cast<int>(rep.size());
      rep.push_back(static_cast<int>(i));
    }
    class_of[i] = class_of[root];
  }

  int total = static_cast<int>(rep.size());
  FiniteGroupoid const &k = *q.left();
  FiniteGroupoid const &g = *p.right();
  std::vector<int> pi(total), eps(total);
  for (int t = 0; t < total; ++t) {
    auto [a, c] = pairs[rep[t]];
    pi[t] = q.pi(a);
    eps[t] = p.eps(c);
  }
  std::vector<int> left_act(static_cast<size_t>(k.n_arrows()) * total, -1);
  std::vector<int> right_act(static_cast<size_t>(total) * g.n_arrows(), -1);
  for (int t = 0; t < total; ++t) {
    auto [a, c] = pairs[rep[t]];
    for (int hh : k.arrows_from(pi[t]))
      left_act[static_cast<size_t>(hh) * total + t] =
          class_of[pair_index[q.left_act(hh, a)][c]];
    for (int gg : g.arrows_into(eps[t]))
      right_act[static_cast<size_t>(t) * g.n_arrows() + gg] =
          class_of[pair_index[a][p.right_act(c, gg)]];
  }
  Bibundle out = Bibundle::from_tables(q.left(), p.right(), total, std::move(pi),
                                       std::move(eps), std::move(left_act),
                                       std::move(right_act));
  if (is_principal(q).principal() && is_principal(p).principal() &&
      !is_principal(out).principal())
    throw std::logic_error("tensor: principality was not preserved");
  return out;
}

Bibundle inverse_bibundle(Bibundle const &b) {
  if (!is_principal(b).principal() || !is_left_principal(b).principal())
    throw std::invalid_argument("inverse_bibundle: bundle is not biprincipal");
  FiniteGroupoid const &h = *b.left();
  FiniteGroupoid const &g = *b.right();
  int total = b.total();
  std::vector<int> pi(total), eps(total);
  for (int p = 0; p < total; ++p) {
    pi[p] = b.eps(p);
    eps[p] = b.pi(p);
  }
  // left action of G: a.p := p.a^-1; right action of H: p.a := a^-1.p
  std::vector<int> left_act(static_cast<size_t>(g.n_arrows()) * total, -1);
  std::vector<int> right_act(static_cast<size_t>(total) * h.n_arrows(), -1);
  for (int p = 0; p < total; ++p) {
    for (int a : g.arrows_from(b.eps(p)))
      left_act[static_cast<size_t>(a) * total + p] = b.right_act_raw(p, g.inv(a));
    for (int a = 0; a < h.n_arrows(); ++a)
      if (h.tgt(a) == b.pi(p))
        right_act[static_cast<size_t>(p) * h.n_arrows() + a] = b.left_act_raw(h.inv(a), p);
  }
  return Bibundle::from_tables(b.right(), b.left(), total, std::move(pi), std::move(eps),
                               std::move(left_act), std::move(right_act));
}

std::optional<std::vector<int>> bibundle_iso_search(Bibundle const &a, Bibundle const &b) {
  if (!same_groupoid(a.left(), b.left()) || !same_groupoid(a.right(), b.right()))
    throw std::invalid_argument("iso search: bundles live over different groupoids");
  if (!is_principal(a).principal() || !is_principal(b).principal())
    throw std::invalid_argument("iso search: bundles must be principal");
  if (a.total() != b.total()) return std::nullopt;

  FiniteGroupoid const &h = *a.left();
  FiniteGroupoid const &g = *a.right();
  int n = a.total();

  UnionFind comp(n);
  for (int p = 0; p < n; ++p) {
    for (int hh : h.arrows_from(a.pi(p))) comp.unite(p, a.left_act_raw(hh, p));
    for (int gg : g.arrows_into(a.eps(p))) comp.unite(p, a.right_act_raw(p, gg));
  }
  std::vector<std::vector<int>> components;
  {
    std::map<int, int> root_index;
    for (int p = 0; p < n; ++p) {
      int r = comp.find(p);
      auto [it, inserted] = root_index.try_emplace(r, static_cast<int>(components.size()));
      if (inserted) components.push_back({});
      components[it->second].push_back(p);
    }
  }

  // An equivariant map is determined on a component by the image of its
  // base point, so trying every anchor-compatible seed is exhaustive.
  std::vector<int> iso(n, -1);
  for (auto const &component : components) {
    int base = component.front();
    bool placed = false;
    for (int seed = 0; seed < n && !placed; ++seed) {
      if (b.pi(seed) != a.pi(base) || b.eps(seed) != a.eps(base)) continue;
      std::vector<int> trial(n, -1);
      trial[base] = seed;
      std::vector<int> queue{base};
      bool ok = true;
      for (size_t qi = 0; qi < queue.size() && ok; ++qi) {
        int p = queue[qi];
        auto push = [&](int from, int to) {
          if (from < 0 || to < 0) {
            ok = false;
            return;
          }
          if (trial[from] < 0) {
            trial[from] = to;
            queue.push_back(from);
          } else if (trial[from] != to) {
            ok = false;
          }
        };
        for (int hh : h.arrows_from(a.pi(p)))
          push(a.left_act_raw(hh, p), b.left_act_raw(hh, trial[p]));
        for (int gg : g.arrows_into(a.eps(p)))
          push(a.right_act_raw(p, gg), b.right_act_raw(trial[p], gg));
      }
      if (!ok) continue;
      for (int p : component) {
        if (trial[p] < 0 || b.pi(trial[p]) != a.pi(p) || b.eps(trial[p]) != a.eps(p)) {
          ok = false;
          break;
        }
        for (int hh : h.arrows_from(a.pi(p)))
          if (trial[a.left_act_raw(hh, p)] != b.left_act_raw(hh, trial[p])) ok = false;
        for (int gg : g.arrows_into(a.eps(p)))
          if (trial[a.right_act_raw(p, gg)] != b.right_act_raw(trial[p], gg)) ok = false;
        if (!ok) break;
      }
      if (!ok) continue;
      for (int p : component) iso[p] = trial[p];
      placed = true;
    }
    if (!placed) return std::nullopt;
  }

  // morphisms of principal bundles are bijections; verify
  std::vector<bool> used(n, false);
  for (int p = 0; p < n; ++p) {
    if (iso[p] < 0 || used[iso[p]]) throw std::logic_error("iso search: map is not a bijection");
    used[iso[p]] = true;
  }
  return iso;
}

namespace {

struct Skeleton {
  GroupoidRef groupoid;        // disjoint union of one-object isotropy groupoids
  std::vector<Isotropy> isos;  // one per orbit, at the least object
  std::vector<int> obj_map;    // skeleton object -> ambient object
  std::vector<int> arr_map;    // skeleton arrow -> ambient arrow
};

Skeleton skeleton_of(GroupoidRef const &g) {
  Skeleton s;
  OrbitPartition p = orbits(*g);
  FiniteGroupoid skel;
  bool first = true;
  for (auto const &cls : p.classes) {
    Isotropy iso = isotropy(*g, cls.front());
    FiniteGroupoid one = group_as_groupoid(iso.group);
    skel = first ? std::move(one) : disjoint_union(skel, one);
    first = false;
    s.obj_map.push_back(iso.object);
    for (int a : iso.arrows) s.arr_map.push_back(a);
    s.isos.push_back(std::move(iso));
  }
  s.groupoid = make_groupoid(std::move(skel));
  return s;
}

}  // namespace

MoritaDecision morita_equivalent(GroupoidRef a, GroupoidRef b) {
  Skeleton sa = skeleton_of(a);
  Skeleton sb = skeleton_of(b);
  if (sa.isos.size() != sb.isos.size())
    return {false,
            "orbit counts differ (" + std::to_string(sa.isos.size()) + " vs " +
                std::to_string(sb.isos.size()) + ")",
            std::nullopt};

  // Greedy matching by isotropy isomorphism is complete: isomorphism
  // partitions the orbit groups into classes, so any greedy failure
  // certifies a multiset mismatch.
  size_t n = sa.isos.size();
  std::vector<int> match(n, -1);           // a-orbit -> b-orbit
  std::vector<std::vector<int>> theta(n);  // isomorphism per matched pair
  std::vector<bool> taken(n, false);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (taken[j]) continue;
      auto iso = group_isomorphism(sa.isos[i].group, sb.isos[j].group);
      if (iso) {
        match[i] = static_cast<int>(j);
        theta[i] = std::move(*iso);
        taken[j] = true;
        break;
      }
    }
    if (match[i] < 0)
      return {false,
              "no orbit of the second groupoid matches isotropy " +
                  group_description(sa.isos[i].group) + " of orbit " + std::to_string(i),
              std::nullopt};
  }

  GroupoidFunctor incl_a(sa.groupoid, a, sa.obj_map, sa.arr_map);
  std::vector<int> psi_obj(sa.groupoid->n_objects());
  std::vector<int> psi_arr(sa.groupoid->n_arrows());
  {
    int arrow_base = 0;
    for (size_t i = 0; i < n; ++i) {
      Isotropy const &ia = sa.isos[i];
      Isotropy const &ib = sb.isos[match[i]];
      psi_obj[i] = ib.object;
      for (int e = 0; e < ia.group.order(); ++e)
        psi_arr[arrow_base + e] = ib.arrows[theta[i][e]];
      arrow_base += ia.group.order();
    }
  }
  GroupoidFunctor psi(sa.groupoid, b, psi_obj, psi_arr);

  Bibundle witness =
      tensor(inverse_bibundle(bundle_from_functor(incl_a)), bundle_from_functor(psi));
  if (!is_principal(witness).principal() || !is_left_principal(witness).principal())
    throw std::logic_error("morita_equivalent: witness failed principality validation");
  return {true, "orbits and isotropy groups match", std::move(witness)};
}

FiberGroupoid fiber_groupoid(Bibundle const &b, int a0) {
  if (a0 < 0 || a0 >= b.right()->n_objects())
    throw std::invalid_argument("fiber_groupoid: unknown object");
  FiniteGroupoid const &h = *b.left();
  FiberGroupoid out;
  std::vector<int> point_index(b.total(), -1);
  for (int p = 0; p < b.total(); ++p)
    if (b.eps(p) == a0) {
      point_index[p] = static_cast<int>(out.points.size());
      out.points.push_back(p);
    }
  int n_obj = static_cast<int>(out.points.size());

  // arrows (h, p) with src(h) = pi(p), running p -> h.p
  std::vector<std::pair<int, int>> arrows;
  std::map<std::pair<int, int>, int> arrow_index;
  for (int i = 0; i < n_obj; ++i) {
    int p = out.points[i];
    for (int hh : h.arrows_from(b.pi(p))) {
      arrow_index[{hh, p}] = static_cast<int>(arrows.size());
      arrows.emplace_back(hh, p);
    }
  }
  int na = static_cast<int>(arrows.size());
  if (na > kMaxGroupoidArrows) throw std::invalid_argument("fiber_groupoid: too many arrows");
  std::vector<int> src(na), tgt(na), inv(na), unit(n_obj);
  std::vector<int> comp(static_cast<size_t>(na) * na, -1);
  for (int i = 0; i < na; ++i) {
    auto [hh, p] = arrows[i];
    src[i] = point_index[p];
    tgt[i] = point_index[b.left_act(hh, p)];
    inv[i] = arrow_index.at({h.inv(hh), b.left_act(hh, p)});
  }
  for (int x = 0; x < n_obj; ++x)
    unit[x] = arrow_index.at({h.unit(b.pi(out.points[x])), out.points[x]});
  for (int i = 0; i < na; ++i) {
    auto [h2, p2] = arrows[i];
    for (int j = 0; j < na; ++j) {
      auto [h1, p1] = arrows[j];
      // (h2, p2) after (h1, p1) needs p2 = h1.p1
      if (p2 != b.left_act_raw(h1, p1)) continue;
      comp[static_cast<size_t>(i) * na + j] = arrow_index.at({h.comp(h2, h1), p1});
    }
  }
  out.groupoid = FiniteGroupoid::from_tables(n_obj, std::move(src), std::move(tgt),
                                             std::move(comp), std::move(inv),
                                             std::move(unit));
  return out;
}

}  // namespace gpd
