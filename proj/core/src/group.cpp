#include <gpd/group.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gpd {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> const &mul) {
  int n = static_cast<int>(mul.size());
  if (n == 0) throw std::invalid_argument("group: empty table");
  FiniteGroup g;
  g.n_ = n;
  g.mul_.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(mul[a].size()) != n)
      throw std::invalid_argument("group: table is not square");
    for (int b = 0; b < n; ++b) {
      int c = mul[a][b];
      if (c < 0 || c >= n) throw std::invalid_argument("group: entry out of range");
      g.mul_[static_cast<size_t>(a) * n + b] = c;
    }
  }

  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) throw std::invalid_argument("group: no identity element");
  g.id_ = id;

  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == id && g.mul(b, a) == id) {
        g.inv_[a] = b;
        break;
      }
    if (g.inv_[a] < 0) throw std::invalid_argument("group: missing inverse");
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw std::invalid_argument("group: associativity fails");
  return g;
}

int FiniteGroup::element_order(int a) const {
  int x = a, k = 1;
  while (x != id_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<int> FiniteGroup::generated_subgroup(std::vector<int> const &gens) const {
  std::vector<bool> in(n_, false);
  std::vector<int> queue{id_};
  in[id_] = true;
  for (size_t i = 0; i < queue.size(); ++i)
    for (int s : gens) {
      int x = mul(queue[i], s);
      if (!in[x]) {
        in[x] = true;
        queue.push_back(x);
      }
    }
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

FiniteGroup trivial_group() { return FiniteGroup::from_table({{0}}); }

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_group: n < 1");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup::from_table(t);
}

FiniteGroup dihedral_group(int n) {
  if (n < 1) throw std::invalid_argument("dihedral_group: n < 1");
  // element 2i + j encodes r^i s^j;  s r = r^-1 s
  int m = 2 * n;
  auto enc = [n](int r, int s) { return 2 * ((r % n + n) % n) + s; };
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < 2; ++l) {
          int r = j == 0 ? i + k : i - k;
          t[enc(i, j)][enc(k, l)] = enc(r, (j + l) % 2);
        }
  return FiniteGroup::from_table(t);
}

namespace {

std::vector<std::vector<int>> permutations_lex(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return all;
}

FiniteGroup perm_group(std::vector<std::vector<int>> const &perms) {
  int n = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[perms[i]] = i;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // (a * b)(x) = a(b(x))
      std::vector<int> c(perms[a].size());
      for (size_t x = 0; x < c.size(); ++x) c[x] = perms[a][perms[b][x]];
      auto it = index.find(c);
      if (it == index.end()) throw std::invalid_argument("perm set not closed");
      t[a][b] = it->second;
    }
  return FiniteGroup::from_table(t);
}

int permutation_sign(std::vector<int> const &p) {
  int sign = 1;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

}  // namespace

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("symmetric_group: need 1 <= n <= 5");
  return perm_group(permutations_lex(n));
}

FiniteGroup alternating_group(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("alternating_group: need 1 <= n <= 5");
  std::vector<std::vector<int>> even;
  for (auto &p : permutations_lex(n))
    if (permutation_sign(p) == 1) even.push_back(p);
  return perm_group(even);
}

FiniteGroup direct_product(FiniteGroup const &a, FiniteGroup const &b) {
  int n = a.order() * b.order();
  auto enc = [&](int x, int y) { return x * b.order() + y; };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < b.order(); ++y)
      for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v)
          t[enc(x, y)][enc(u, v)] = enc(a.mul(x, u), b.mul(y, v));
  return FiniteGroup::from_table(t);
}

FiniteGroup subgroup_from_elements(FiniteGroup const &g, std::vector<int> const &elements) {
  std::map<int, int> index;
  for (size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<int>(i);
  int m = static_cast<int>(elements.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto it = index.find(g.mul(elements[i], elements[j]));
      if (it == index.end())
        throw std::invalid_argument("subgroup_from_elements: subset not closed");
      t[i][j] = it->second;
    }
  return FiniteGroup::from_table(t);
}

QuotientGroup quotient_group(FiniteGroup const &g, std::vector<int> const &normal_subgroup) {
  std::vector<bool> in_k(g.order(), false);
  for (int x : normal_subgroup) in_k[x] = true;
  if (!in_k[g.identity()])
    throw std::invalid_argument("quotient_group: subgroup misses identity");
  for (int x : normal_subgroup)
    for (int a = 0; a < g.order(); ++a)
      if (!in_k[g.mul(g.mul(a, x), g.inv(a))])
        throw std::invalid_argument("quotient_group: subgroup not normal");

  std::vector<int> coset_of(g.order(), -1);
  int classes = 0;
  for (int a = 0; a < g.order(); ++a) {
    if (coset_of[a] >= 0) continue;
    for (int x : normal_subgroup) coset_of[g.mul(a, x)] = classes;
    ++classes;
  }
  std::vector<int> rep(classes, -1);
  for (int a = g.order() - 1; a >= 0; --a) rep[coset_of[a]] = a;
  std::vector<std::vector<int>> t(classes, std::vector<int>(classes));
  for (int i = 0; i < classes; ++i)
    for (int j = 0; j < classes; ++j) t[i][j] = coset_of[g.mul(rep[i], rep[j])];
  return {FiniteGroup::from_table(t), coset_of};
}

namespace {

std::vector<int> small_generating_set(FiniteGroup const &g) {
  std::vector<int> gens;
  std::vector<int> covered = g.generated_subgroup(gens);
  while (static_cast<int>(covered.size()) < g.order()) {
    std::vector<bool> in(g.order(), false);
    for (int x : covered) in[x] = true;
    for (int x = 0; x < g.order(); ++x)
      if (!in[x]) {
        gens.push_back(x);
        break;
      }
    covered = g.generated_subgroup(gens);
  }
  return gens;
}

bool extend_iso(FiniteGroup const &a, FiniteGroup const &b,
                std::vector<int> const &gens, size_t k, std::vector<int> &map_ab,
                std::vector<int> const &order_a, std::vector<int> const &order_b) {
  if (k == gens.size()) return true;
  int gen = gens[k];
  for (int img = 0; img < b.order(); ++img) {
    if (order_b[img] != order_a[gen]) continue;
    // close the partial map; fail on conflict with injectivity or product law
    std::vector<int> trial = map_ab;
    trial[gen] = img;
    std::vector<int> used(b.order(), 0);
    bool ok = true;
    // iterate closure: elements known so far are those with trial >= 0
    bool grew = true;
    while (grew && ok) {
      grew = false;
      for (int x = 0; x < a.order() && ok; ++x) {
        if (trial[x] < 0) continue;
        for (int y = 0; y < a.order() && ok; ++y) {
          if (trial[y] < 0) continue;
          int xy = a.mul(x, y);
          int im = b.mul(trial[x], trial[y]);
          if (trial[xy] < 0) {
            trial[xy] = im;
            grew = true;
          } else if (trial[xy] != im) {
            ok = false;
          }
        }
      }
    }
    if (ok) {
      std::fill(used.begin(), used.end(), 0);
      for (int x = 0; x < a.order() && ok; ++x)
        if (trial[x] >= 0 && used[trial[x]]++) ok = false;
    }
    if (ok && extend_iso(a, b, gens, k + 1, trial, order_a, order_b)) {
      map_ab = trial;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> group_isomorphism(FiniteGroup const &a, FiniteGroup const &b) {
  if (a.order() != b.order()) return std::nullopt;
  std::vector<int> order_a(a.order()), order_b(b.order());
  for (int x = 0; x < a.order(); ++x) order_a[x] = a.element_order(x);
  for (int x = 0; x < b.order(); ++x) order_b[x] = b.element_order(x);
  {
    auto pa = order_a, pb = order_b;
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    if (pa != pb) return std::nullopt;
  }
  std::vector<int> gens = small_generating_set(a);
  std::vector<int> map_ab(a.order(), -1);
  map_ab[a.identity()] = b.identity();
  if (!extend_iso(a, b, gens, 0, map_ab, order_a, order_b)) return std::nullopt;
  return map_ab;
}

std::string group_description(FiniteGroup const &g) {
  if (g.order() == 1) return "1";
  if (g.is_abelian()) {
    // Invariant factors from N(k) = #{x : x^k = e}: for Z_{d1} x ... x Z_{dm}
    // one has N(k) = prod gcd(k, d_i), and the largest factor is the maximal
    // element order. Split it off and repeat on the divided counts.
    int n = g.order();
    std::vector<long> count_div(n + 1, 0);
    for (int x = 0; x < n; ++x)
      for (int k = g.element_order(x); k <= n; k += g.element_order(x)) ++count_div[k];
    std::vector<int> factors;
    long rest = n;
    while (rest > 1) {
      // exponent of what remains = least k with count_div[k] == rest
      int d = 1;
      for (int k = 1; k <= n; ++k)
        if (count_div[k] == rest) {
          d = k;
          break;
        }
      factors.push_back(d);
      rest /= d;
      for (int k = 1; k <= n; ++k) count_div[k] /= std::gcd(k, d);
    }
    std::ostringstream os;
    for (size_t i = 0; i < factors.size(); ++i) {
      os << "Z" << factors[i];
      if (i + 1 != factors.size()) os << " x ";
    }
    return os.str();
  }
  struct Named {
    char const *name;
    FiniteGroup group;
  };
  static std::vector<Named> const named = {
      {"S3", symmetric_group(3)},    {"D4", dihedral_group(4)},
      {"A4", alternating_group(4)},  {"D5", dihedral_group(5)},
      {"D6", dihedral_group(6)},     {"S4", symmetric_group(4)},
  };
  for (auto const &candidate : named)
    if (candidate.group.order() == g.order() && group_isomorphism(g, candidate.group))
      return candidate.name;
  std::ostringstream os;
  os << "group of order " << g.order();
  return os.str();
}

}  // namespace gpd
