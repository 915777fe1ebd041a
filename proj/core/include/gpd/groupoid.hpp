// Finite groupoids as dense structure tables: constructions, validation,
// orbits, isotropy, functors and weak-equivalence testing.
//
// Convention: comp(g, h) is "g after h", defined exactly when src(g) = tgt(h),
// with src(comp) = src(h) and tgt(comp) = tgt(g).

#pragma once

#include <gpd/group.hpp>

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gpd {

class FiniteGroupoid;
using GroupoidRef = std::shared_ptr<const FiniteGroupoid>;

// Dense composition tables are quadratic in the arrow count; this caps the
// footprint at ~64 MB. Desk-scale instances stay far below it.
inline constexpr int kMaxGroupoidArrows = 4096;

class FiniteGroupoid {
public:
  FiniteGroupoid() = default;  // empty placeholder

  // Builds from raw tables without checking the groupoid axioms; run
  // validate_groupoid to obtain a violation report. comp entries of -1 mean
  // undefined. Throws only on shape errors (table sizes, id ranges).
  static FiniteGroupoid from_tables(int n_objects, std::vector<int> src,
                                    std::vector<int> tgt, std::vector<int> comp,
                                    std::vector<int> inv, std::vector<int> unit);

  int n_objects() const { return n_objects_; }
  int n_arrows() const { return static_cast<int>(src_.size()); }

  int src(int g) const { return src_[g]; }
  int tgt(int g) const { return tgt_[g]; }
  int inv(int g) const { return inv_[g]; }
  int unit(int x) const { return unit_[x]; }
  bool comp_defined(int g, int h) const { return comp_raw(g, h) >= 0; }
  // comp_raw returns -1 when undefined
  int comp_raw(int g, int h) const {
    return comp_[static_cast<size_t>(g) * n_arrows() + h];
  }
  int comp(int g, int h) const;  // throws std::logic_error when undefined

  // Arrows grouped by source / by target object, ids ascending.
  std::vector<int> const &arrows_from(int x) const { return by_src_[x]; }
  std::vector<int> const &arrows_into(int x) const { return by_tgt_[x]; }
  // Arrows x -> y, ids ascending.
  std::vector<int> arrows_between(int x, int y) const;

  bool operator==(FiniteGroupoid const &other) const = default;

private:
  int n_objects_ = 0;
  std::vector<int> src_, tgt_, inv_, unit_;
  std::vector<int> comp_;  // n_arrows x n_arrows, -1 = undefined
  std::vector<std::vector<int>> by_src_, by_tgt_;
};

GroupoidRef make_groupoid(FiniteGroupoid g);

// ---- validation ----------------------------------------------------------------

struct GroupoidViolation {
  enum class Kind {
    BadCompDomain,       // comp defined where src/tgt mismatch, or missing
    BadCompEndpoints,    // src/tgt of a composite wrong
    NotAssociative,
    BadUnit,
    BadInverse,
  };
  Kind kind;
  std::array<int, 3> ids{-1, -1, -1};
  std::string message;
};

std::vector<GroupoidViolation> validate_groupoid(FiniteGroupoid const &g,
                                                 size_t max_reports = 100);

// ---- constructions ---------------------------------------------------------------

// Arrows are ordered pairs (a, b) meaning b -> a, with comp((a,b),(b,c)) = (a,c).
FiniteGroupoid pair_groupoid(int n_points);
FiniteGroupoid unit_groupoid(int n_points);
FiniteGroupoid group_as_groupoid(FiniteGroup const &g);

// Left action of a finite group on a finite set; act(gh, x) = act(g, act(h, x)).
struct SetAction {
  FiniteGroup group;
  int carrier = 0;
  std::vector<int> table;  // group.order() x carrier

  int act(int g, int x) const { return table[static_cast<size_t>(g) * carrier + x]; }
  void validate() const;  // throws std::invalid_argument
};

// Objects are the carrier; arrow (g, x) runs x -> g.x; composition multiplies
// the group parts.
FiniteGroupoid translation_groupoid(SetAction const &a);
// Arrow id of (g, x) in the translation groupoid built from `a`.
int translation_arrow_id(SetAction const &a, int g, int x);

FiniteGroupoid product_groupoid(FiniteGroupoid const &a, FiniteGroupoid const &b);
FiniteGroupoid disjoint_union(FiniteGroupoid const &a, FiniteGroupoid const &b);
// Relabels objects and arrows by permutations (new id = perm[old id]).
FiniteGroupoid relabel(FiniteGroupoid const &g, std::vector<int> const &obj_perm,
                       std::vector<int> const &arr_perm);

// ---- orbits and isotropy -----------------------------------------------------------

struct OrbitPartition {
  std::vector<int> class_of;              // object -> class index
  std::vector<std::vector<int>> classes;  // ordered by least member
};

OrbitPartition orbits(FiniteGroupoid const &g);

struct Isotropy {
  FiniteGroup group;
  std::vector<int> arrows;  // element i of `group` is this arrow id
  int object = -1;
};

Isotropy isotropy(FiniteGroupoid const &g, int object);

// For an arrow a1 -> a0, the isomorphism isotropy(a0) -> isotropy(a1) given
// by x |-> g^-1 x g. `map` sends element indices of the a0 isotropy to
// element indices of the a1 isotropy; verified to be a group isomorphism.
struct BaseChangeIso {
  Isotropy from, to;
  std::vector<int> map;
};

BaseChangeIso base_change_iso(FiniteGroupoid const &g, int arrow);

// ---- functors -------------------------------------------------------------------

class GroupoidFunctor {
public:
  // Checks compatibility with src, tgt, unit, inv and comp; throws
  // std::invalid_argument on any failure.
  GroupoidFunctor(GroupoidRef source, GroupoidRef target, std::vector<int> obj_map,
                  std::vector<int> arr_map);

  GroupoidRef const &source() const { return source_; }
  GroupoidRef const &target() const { return target_; }
  int on_object(int x) const { return obj_map_[x]; }
  int on_arrow(int g) const { return arr_map_[g]; }
  std::vector<int> const &obj_map() const { return obj_map_; }
  std::vector<int> const &arr_map() const { return arr_map_; }

private:
  GroupoidRef source_, target_;
  std::vector<int> obj_map_, arr_map_;
};

GroupoidFunctor identity_functor(GroupoidRef g);
// psi after phi; requires phi.target() == psi.source() (same object).
GroupoidFunctor compose(GroupoidFunctor const &psi, GroupoidFunctor const &phi);

struct WeakEquivalenceReport {
  bool essentially_surjective = false;
  bool fully_faithful = false;
  // witnesses when false:
  int missed_object = -1;                    // target object no arrow reaches from the image
  std::array<int, 2> not_faithful_at{-1, -1};  // object pair where bijectivity fails
  std::string detail;
  bool ok() const { return essentially_surjective && fully_faithful; }
};

WeakEquivalenceReport is_weak_equivalence(GroupoidFunctor const &phi);

}  // namespace gpd
