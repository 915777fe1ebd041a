// Finite groups as dense multiplication tables, plus the small-group zoo
// used as homomorphism-count targets and isotropy witnesses.

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gpd {

class FiniteGroup {
public:
  FiniteGroup() = default;  // empty placeholder; every factory validates

  // Builds from a full multiplication table (row a, column b holds a*b).
  // Throws std::invalid_argument unless the table satisfies the group axioms.
  static FiniteGroup from_table(std::vector<std::vector<int>> const &mul);

  int order() const { return n_; }
  int mul(int a, int b) const { return mul_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return id_; }

  int element_order(int a) const;
  bool is_abelian() const;

  // Elements of the subgroup generated by `gens`, ascending.
  std::vector<int> generated_subgroup(std::vector<int> const &gens) const;

  bool operator==(FiniteGroup const &other) const = default;

private:
  int n_ = 0;
  int id_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
};

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);     // order 2n, n >= 1
FiniteGroup symmetric_group(int n);    // n <= 5
FiniteGroup alternating_group(int n);  // n <= 5
FiniteGroup direct_product(FiniteGroup const &a, FiniteGroup const &b);

// Subgroup on an element subset (must be closed; throws otherwise).
// Element i of the result is elements[i] of the parent.
FiniteGroup subgroup_from_elements(FiniteGroup const &g,
                                   std::vector<int> const &elements);

struct QuotientGroup {
  FiniteGroup group;
  std::vector<int> coset_of;  // parent element -> quotient element
};

// Quotient by a normal subgroup given as an element list (validated).
QuotientGroup quotient_group(FiniteGroup const &g,
                             std::vector<int> const &normal_subgroup);

// Isomorphism search by generator-image backtracking with order-profile
// pruning; returns the lexicographically least isomorphism as a map
// a -> b of element indices, or nullopt.
std::optional<std::vector<int>> group_isomorphism(FiniteGroup const &a,
                                                  FiniteGroup const &b);

// Human-readable structure tag, e.g. "Z2 x Z4", via abelian invariant
// factors when abelian and order/profile otherwise. Used in reports.
std::string group_description(FiniteGroup const &g);

}  // namespace gpd
