#include <gpd/cocycle.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gpd {

int GridCover::cell_count() const {
  int count = 1;
  for (int i = 0; i < dim; ++i) count *= N;
  return count;
}

std::vector<int> GridCover::coords(int cell) const {
  std::vector<int> c(dim);
  for (int i = dim - 1; i >= 0; --i) {
    c[i] = cell % N + 1;
    cell /= N;
  }
  return c;
}

int GridCover::cell_id(std::vector<int> const &c) const {
  int id = 0;
  for (int i = 0; i < dim; ++i) id = id * N + (c[i] - 1);
  return id;
}

bool GridCover::adjacent(int a, int b) const {
  std::vector<int> ca = coords(a), cb = coords(b);
  for (int i = 0; i < dim; ++i)
    if (std::abs(ca[i] - cb[i]) > 1) return false;
  return true;
}

std::vector<int> GridCover::neighbors(int cell) const {
  std::vector<int> out;
  for (int other = 0; other < cell_count(); ++other)
    if (other != cell && adjacent(cell, other)) out.push_back(other);
  return out;
}

void GridCover::validate() const {
  if (dim < 0 || dim > 2)
    throw std::invalid_argument("grid cover: dimension must be at most 2");
  if (N < 1) throw std::invalid_argument("grid cover: need at least one subdivision");
}

std::vector<CocycleViolation> validate_cocycle(Cocycle const &c, size_t max_reports) {
  std::vector<CocycleViolation> out;
  auto add = [&](std::string msg) {
    if (out.size() < max_reports) out.push_back({std::move(msg)});
  };
  c.cover.validate();
  int n = c.cover.cell_count();
  FiniteGroupoid const &g = *c.groupoid;
  if (static_cast<int>(c.f.size()) != n || c.g.size() != static_cast<size_t>(n) * n) {
    add("table sizes do not match the cover");
    return out;
  }
  for (int x : c.f)
    if (x < 0 || x >= g.n_objects()) {
      add("object label out of range");
      return out;
    }

  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) {
      int a = c.transition(mu, nu);
      bool should = c.cover.adjacent(mu, nu);
      if (should && a < 0)
        add("transition missing on adjacent cells (" + std::to_string(mu) + "," +
            std::to_string(nu) + ")");
      if (!should && a >= 0)
        add("transition defined on non-adjacent cells (" + std::to_string(mu) + "," +
            std::to_string(nu) + ")");
      if (a >= 0 && should) {
        if (a >= g.n_arrows()) {
          add("transition arrow out of range");
          continue;
        }
        if (g.src(a) != c.f[nu])
          add("src(g_{" + std::to_string(mu) + "," + std::to_string(nu) + "}) != f_nu");
        if (g.tgt(a) != c.f[mu])
          add("tgt(g_{" + std::to_string(mu) + "," + std::to_string(nu) + "}) != f_mu");
      }
    }
  if (!out.empty()) return out;

  for (int mu = 0; mu < n; ++mu)
    if (c.transition(mu, mu) != g.unit(c.f[mu]))
      add("diagonal transition at cell " + std::to_string(mu) + " is not the unit");

  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) {
      if (mu == nu || !c.cover.adjacent(mu, nu)) continue;
      for (int ka = 0; ka < n; ++ka) {
        if (!c.cover.adjacent(nu, ka) || !c.cover.adjacent(mu, ka)) continue;
        if (g.comp_raw(c.transition(mu, nu), c.transition(nu, ka)) != c.transition(mu, ka)) {
          add("triple condition fails on (" + std::to_string(mu) + "," + std::to_string(nu) +
              "," + std::to_string(ka) + ")");
          if (out.size() >= max_reports) return out;
        }
      }
    }
  return out;
}

Cocycle constant_cocycle(GridCover cover, GroupoidRef groupoid, int object) {
  cover.validate();
  if (object < 0 || object >= groupoid->n_objects())
    throw std::invalid_argument("constant_cocycle: object out of range");
  Cocycle c;
  int n = cover.cell_count();
  c.cover = cover;
  c.groupoid = std::move(groupoid);
  c.f.assign(n, object);
  c.g.assign(static_cast<size_t>(n) * n, -1);
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu)
      if (cover.adjacent(mu, nu)) c.set_transition(mu, nu, c.groupoid->unit(object));
  return c;
}

Cocycle coboundary_twist(Cocycle const &c, std::vector<int> const &lambda) {
  int n = c.cover.cell_count();
  if (static_cast<int>(lambda.size()) != n)
    throw std::invalid_argument("coboundary_twist: one arrow per cell");
  FiniteGroupoid const &g = *c.groupoid;
  for (int mu = 0; mu < n; ++mu)
    if (g.src(lambda[mu]) != c.f[mu])
      throw std::invalid_argument("coboundary_twist: lambda source mismatch at cell " +
                                  std::to_string(mu));
  Cocycle out = c;
  for (int mu = 0; mu < n; ++mu) out.f[mu] = g.tgt(lambda[mu]);
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu)
      if (c.transition(mu, nu) >= 0)
        out.set_transition(
            mu, nu, g.comp(g.comp(lambda[mu], c.transition(mu, nu)), g.inv(lambda[nu])));
  return out;
}

Cocycle pushforward(GroupoidFunctor const &phi, Cocycle const &c) {
  if (!(phi.source() == c.groupoid || *phi.source() == *c.groupoid))
    throw std::invalid_argument("pushforward: functor source differs from the cocycle groupoid");
  Cocycle out;
  out.cover = c.cover;
  out.groupoid = phi.target();
  int n = c.cover.cell_count();
  out.f.resize(n);
  for (int mu = 0; mu < n; ++mu) out.f[mu] = phi.on_object(c.f[mu]);
  out.g.assign(static_cast<size_t>(n) * n, -1);
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu)
      if (c.transition(mu, nu) >= 0)
        out.set_transition(mu, nu, phi.on_arrow(c.transition(mu, nu)));
  return out;
}

LiftHypothesesReport check_lift_hypotheses(GroupoidFunctor const &phi) {
  FiniteGroupoid const &h = *phi.source();
  FiniteGroupoid const &g = *phi.target();
  LiftHypothesesReport report;

  report.objects_surjective = true;
  std::vector<bool> hit(g.n_objects(), false);
  for (int y = 0; y < h.n_objects(); ++y) hit[phi.on_object(y)] = true;
  for (int x = 0; x < g.n_objects(); ++x)
    if (!hit[x]) {
      report.objects_surjective = false;
      report.missed_object = x;
      break;
    }

  report.arrows_lift_with_source = true;
  for (int a = 0; a < g.n_arrows() && report.arrows_lift_with_source; ++a)
    for (int y = 0; y < h.n_objects(); ++y) {
      if (phi.on_object(y) != g.src(a)) continue;
      bool found = false;
      for (int b : h.arrows_from(y))
        if (phi.on_arrow(b) == a) {
          found = true;
          break;
        }
      if (!found) {
        report.arrows_lift_with_source = false;
        report.unliftable = {a, y};
        break;
      }
    }
  return report;
}

Cocycle lift_cocycle(GroupoidFunctor const &phi, Cocycle const &c, std::optional<int> seed) {
  if (!(phi.target() == c.groupoid || *phi.target() == *c.groupoid))
    throw std::invalid_argument("lift_cocycle: functor target differs from the cocycle groupoid");
  if (!validate_cocycle(c).empty())
    throw std::invalid_argument("lift_cocycle: input cocycle is invalid");
  LiftHypothesesReport hyp = check_lift_hypotheses(phi);
  if (!hyp.objects_surjective)
    throw std::invalid_argument("lift_cocycle: object " + std::to_string(hyp.missed_object) +
                                " has no preimage");
  if (!hyp.arrows_lift_with_source)
    throw std::invalid_argument(
        "lift_cocycle: arrow " + std::to_string(hyp.unliftable[0]) +
        " has no lift with source " + std::to_string(hyp.unliftable[1]));

  FiniteGroupoid const &h = *phi.source();
  int n = c.cover.cell_count();
  Cocycle lift;
  lift.cover = c.cover;
  lift.groupoid = phi.source();
  lift.f.assign(n, -1);
  lift.g.assign(static_cast<size_t>(n) * n, -1);

  // least lift of a target arrow with prescribed source, or -1
  auto lift_arrow = [&](int target_arrow, int source_obj) {
    for (int b : h.arrows_from(source_obj))
      if (phi.on_arrow(b) == target_arrow) return b;
    return -1;
  };

  for (int mu = 0; mu < n; ++mu) {
    if (mu == 0) {
      int y0;
      if (seed) {
        y0 = *seed;
        if (y0 < 0 || y0 >= h.n_objects() || phi.on_object(y0) != c.f[0])
          throw std::invalid_argument("lift_cocycle: seed is not a lift of the first cell");
      } else {
        y0 = -1;
        for (int y = 0; y < h.n_objects(); ++y)
          if (phi.on_object(y) == c.f[0]) {
            y0 = y;
            break;
          }
      }
      lift.f[0] = y0;
      lift.set_transition(0, 0, h.unit(y0));
      continue;
    }

    std::vector<int> processed;
    for (int nu = 0; nu < mu; ++nu)
      if (c.cover.adjacent(mu, nu)) processed.push_back(nu);
    int nu0 = processed.front();

    int free_lift = lift_arrow(c.transition(mu, nu0), lift.f[nu0]);
    if (free_lift < 0)
      throw std::invalid_argument("lift_cocycle: transition (" + std::to_string(mu) + "," +
                                  std::to_string(nu0) + ") is unliftable");
    lift.set_transition(mu, nu0, free_lift);
    lift.set_transition(nu0, mu, h.inv(free_lift));
    lift.f[mu] = h.tgt(free_lift);
    lift.set_transition(mu, mu, h.unit(lift.f[mu]));

    // remaining processed neighbours are forced through an intermediary that
    // is pairwise adjacent with both ends and already carries a lift
    for (size_t k = 1; k < processed.size(); ++k) {
      int nu = processed[k];
      int via = -1;
      for (int ka : processed) {
        if (ka == nu) continue;
        if (lift.transition(mu, ka) < 0) continue;
        if (c.cover.adjacent(ka, nu)) {
          via = ka;
          break;
        }
      }
      if (via < 0)
        throw std::logic_error("lift_cocycle: no forcing intermediary; unsupported cover");
      int forced = h.comp(lift.transition(mu, via), lift.transition(via, nu));
      lift.set_transition(mu, nu, forced);
      lift.set_transition(nu, mu, h.inv(forced));
    }
  }

  // The lift must be a valid cocycle and push forward to the input exactly;
  // both are guaranteed by the hypotheses.
  if (!validate_cocycle(lift).empty())
    throw std::logic_error("lift_cocycle: lifted family violates the cocycle conditions");
  Cocycle back = pushforward(phi, lift);
  if (back.f != c.f || back.g != c.g)
    throw std::logic_error("lift_cocycle: pushforward does not reproduce the input");
  return lift;
}

CechBundle cocycle_to_bundle(Cocycle const &c) {
  if (!validate_cocycle(c).empty())
    throw std::invalid_argument("cocycle_to_bundle: invalid cocycle");
  FiniteGroupoid const &g = *c.groupoid;
  int n = c.cover.cell_count();

  // tree transport from cell 0: A_mu : f_0 -> f_mu
  std::vector<int> transport(n, -1);
  transport[0] = g.unit(c.f[0]);
  std::vector<int> queue{0};
  for (size_t i = 0; i < queue.size(); ++i)
    for (int nu : c.cover.neighbors(queue[i]))
      if (transport[nu] < 0) {
        transport[nu] = g.comp(c.transition(nu, queue[i]), transport[queue[i]]);
        queue.push_back(nu);
      }
  // chain-independence: single-step transport must match the tree transport
  for (int mu = 0; mu < n; ++mu)
    for (int nu : c.cover.neighbors(mu))
      if (g.comp(c.transition(nu, mu), transport[mu]) != transport[nu])
        throw std::logic_error("cocycle_to_bundle: transport around a loop is nontrivial");

  GroupoidRef cech = make_groupoid(pair_groupoid(n));
  // points (mu, a) with tgt(a) = f_mu
  std::vector<std::pair<int, int>> points;
  std::vector<std::vector<int>> index(n, std::vector<int>(g.n_arrows(), -1));
  for (int mu = 0; mu < n; ++mu)
    for (int a : g.arrows_into(c.f[mu])) {
      index[mu][a] = static_cast<int>(points.size());
      points.emplace_back(mu, a);
    }
  int total = static_cast<int>(points.size());
  std::vector<int> pi(total), eps(total);
  for (int p = 0; p < total; ++p) {
    pi[p] = points[p].first;
    eps[p] = g.src(points[p].second);
  }
  // pair arrow (kappa, mu): src mu, tgt kappa; transport A_kappa A_mu^-1
  std::vector<int> left_act(static_cast<size_t>(cech->n_arrows()) * total, -1);
  std::vector<int> right_act(static_cast<size_t>(total) * g.n_arrows(), -1);
  for (int p = 0; p < total; ++p) {
    auto [mu, a] = points[p];
    for (int kappa = 0; kappa < n; ++kappa) {
      int chain = g.comp(transport[kappa], g.inv(transport[mu]));
      int arrow = kappa * n + mu;  // pair-groupoid id of (kappa, mu)
      left_act[static_cast<size_t>(arrow) * total + p] = index[kappa][g.comp(chain, a)];
    }
    for (int b : g.arrows_into(g.src(a)))
      right_act[static_cast<size_t>(p) * g.n_arrows() + b] = index[mu][g.comp(a, b)];
  }
  Bibundle bundle = Bibundle::from_tables(cech, c.groupoid, total, std::move(pi),
                                          std::move(eps), std::move(left_act),
                                          std::move(right_act));
  if (!is_principal(bundle).principal())
    throw std::logic_error("cocycle_to_bundle: bundle is not principal");
  return {std::move(cech), std::move(bundle)};
}

Cocycle cocycle_from_cech_bundle(Bibundle const &b, GridCover const &cover) {
  cover.validate();
  int n = cover.cell_count();
  if (!(*b.left() == pair_groupoid(n)))
    throw std::invalid_argument(
        "cocycle_from_cech_bundle: left groupoid is not the pair groupoid of the cover");
  FiniteGroupoid const &g = *b.right();

  // least-point local sections
  std::vector<int> section(n, -1);
  for (int p = 0; p < b.total(); ++p)
    if (section[b.pi(p)] < 0) section[b.pi(p)] = p;
  for (int mu = 0; mu < n; ++mu)
    if (section[mu] < 0)
      throw std::invalid_argument("cocycle_from_cech_bundle: empty fiber at cell " +
                                  std::to_string(mu));

  Cocycle c;
  c.cover = cover;
  c.groupoid = b.right();
  c.f.resize(n);
  for (int mu = 0; mu < n; ++mu) c.f[mu] = b.eps(section[mu]);
  c.g.assign(static_cast<size_t>(n) * n, -1);
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) {
      if (!cover.adjacent(mu, nu)) continue;
      // bring the nu-section into the mu-fiber and translate
      int arrow = mu * n + nu;  // (mu, nu) : nu -> mu in the pair groupoid
      int moved = b.left_act(arrow, section[nu]);
      int t = translation_arrow(b, section[mu], moved);
      if (t < 0)
        throw std::invalid_argument("cocycle_from_cech_bundle: fiber is not transitive");
      c.set_transition(mu, nu, t);
    }
  return c;
}

bool cocycles_equivalent(Cocycle const &a, Cocycle const &b) {
  if (!(a.cover == b.cover)) throw std::invalid_argument("cocycles_equivalent: covers differ");
  if (!(a.groupoid == b.groupoid || *a.groupoid == *b.groupoid))
    throw std::invalid_argument("cocycles_equivalent: groupoids differ");
  FiniteGroupoid const &g = *a.groupoid;
  int n = a.cover.cell_count();

  // lambda at cell 0 determines lambda everywhere along tree transport
  for (int root_arrow : g.arrows_from(a.f[0])) {
    if (g.tgt(root_arrow) != b.f[0]) continue;
    std::vector<int> lambda(n, -1);
    lambda[0] = root_arrow;
    std::vector<int> queue{0};
    bool ok = true;
    for (size_t i = 0; i < queue.size() && ok; ++i) {
      int mu = queue[i];
      for (int nu : a.cover.neighbors(mu)) {
        // lambda_nu = g'_{nu mu} lambda_mu g_{mu nu}
        int candidate =
            g.comp(g.comp(b.transition(nu, mu), lambda[mu]), a.transition(mu, nu));
        if (lambda[nu] < 0) {
          lambda[nu] = candidate;
          queue.push_back(nu);
        } else if (lambda[nu] != candidate) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    for (int mu = 0; mu < n && ok; ++mu) {
      if (lambda[mu] < 0 || g.src(lambda[mu]) != a.f[mu] || g.tgt(lambda[mu]) != b.f[mu])
        ok = false;
    }
    for (int mu = 0; mu < n && ok; ++mu)
      for (int nu : a.cover.neighbors(mu))
        if (b.transition(mu, nu) !=
            g.comp(g.comp(lambda[mu], a.transition(mu, nu)), g.inv(lambda[nu]))) {
          ok = false;
          break;
        }
    if (ok) return true;
  }
  return false;
}

}  // namespace gpd
