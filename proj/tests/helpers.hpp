// Shared deterministic generators for randomized tests.

#pragma once

#include <gpd/groupoid.hpp>

#include <numeric>
#include <random>
#include <vector>

namespace gpd::testing {

inline FiniteGroup random_small_group(std::mt19937 &rng) {
  switch (rng() % 6) {
    case 0: return trivial_group();
    case 1: return cyclic_group(2);
    case 2: return cyclic_group(3);
    case 3: return cyclic_group(4);
    case 4: return direct_product(cyclic_group(2), cyclic_group(2));
    default: return symmetric_group(3);
  }
}

// Disjoint union of transitive blocks (isotropy group x pair groupoid),
// randomly relabeled. Every finite groupoid is equivalent to one of these.
inline FiniteGroupoid random_groupoid(std::mt19937 &rng, int max_orbits = 2,
                                      int max_points_per_orbit = 3) {
  int orbits = 1 + static_cast<int>(rng() % max_orbits);
  FiniteGroupoid g = unit_groupoid(1);
  bool first = true;
  for (int i = 0; i < orbits; ++i) {
    FiniteGroup k = random_small_group(rng);
    int m = 1 + static_cast<int>(rng() % max_points_per_orbit);
    FiniteGroupoid block = product_groupoid(group_as_groupoid(k), pair_groupoid(m));
    g = first ? std::move(block) : disjoint_union(g, block);
    first = false;
  }
  std::vector<int> obj_perm(g.n_objects()), arr_perm(g.n_arrows());
  std::iota(obj_perm.begin(), obj_perm.end(), 0);
  std::iota(arr_perm.begin(), arr_perm.end(), 0);
  std::shuffle(obj_perm.begin(), obj_perm.end(), rng);
  std::shuffle(arr_perm.begin(), arr_perm.end(), rng);
  return relabel(g, obj_perm, arr_perm);
}

// Functor between product-form groupoids induced by a group homomorphism
// and an object map: (k, (i,j)) -> (theta(k), (o(i), o(j))).
inline GroupoidFunctor block_functor(GroupoidRef source, GroupoidRef target,
                                     FiniteGroup const &k, FiniteGroup const &k2,
                                     std::vector<int> const &theta, int m, int m2,
                                     std::vector<int> const &o) {
  // source must be group_as_groupoid(k) x pair_groupoid(m), unrelabeled
  std::vector<int> obj_map(m);
  for (int i = 0; i < m; ++i) obj_map[i] = o[i];
  std::vector<int> arr_map(k.order() * m * m);
  for (int e = 0; e < k.order(); ++e)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        int src_arrow = e * m * m + (a * m + b);
        int dst_arrow = theta[e] * m2 * m2 + (o[a] * m2 + o[b]);
        arr_map[src_arrow] = dst_arrow;
      }
  (void)k2;
  return GroupoidFunctor(std::move(source), std::move(target), std::move(obj_map),
                         std::move(arr_map));
}

// All homomorphisms k -> k2 as image tables, deterministic order.
inline std::vector<std::vector<int>> all_group_homs(FiniteGroup const &k,
                                                    FiniteGroup const &k2) {
  std::vector<std::vector<int>> out;
  std::vector<int> images(k.order(), 0);
  while (true) {
    bool ok = images[k.identity()] == k2.identity();
    for (int a = 0; a < k.order() && ok; ++a)
      for (int b = 0; b < k.order() && ok; ++b)
        if (images[k.mul(a, b)] != k2.mul(images[a], images[b])) ok = false;
    if (ok) out.push_back(images);
    int i = k.order() - 1;
    while (i >= 0 && images[i] == k2.order() - 1) images[i--] = 0;
    if (i < 0) break;
    ++images[i];
  }
  return out;
}

}  // namespace gpd::testing
