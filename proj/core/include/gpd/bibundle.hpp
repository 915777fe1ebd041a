// Principal bibundles between finite groupoids: construction from functors,
// principality checks, tensor composition, inverses, isomorphism search and
// the Morita equivalence decision with validated witnesses.
//
// A bibundle carries a left action of H along pi and a right action of G
// along eps: h.p defined when src(h) = pi(p) with pi(h.p) = tgt(h);
// p.g defined when eps(p) = tgt(g) with eps(p.g) = src(g).

#pragma once

#include <gpd/groupoid.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gpd {

class Bibundle {
public:
  Bibundle() = default;

  // left_act is (H arrows) x total, right_act is total x (G arrows);
  // -1 marks undefined. Shape-checked only; validate_bibundle reports on
  // the axioms.
  static Bibundle from_tables(GroupoidRef left, GroupoidRef right, int total,
                              std::vector<int> pi, std::vector<int> eps,
                              std::vector<int> left_act, std::vector<int> right_act);

  GroupoidRef const &left() const { return left_; }
  GroupoidRef const &right() const { return right_; }
  int total() const { return total_; }
  int pi(int p) const { return pi_[p]; }
  int eps(int p) const { return eps_[p]; }
  int left_act_raw(int h, int p) const {
    return left_act_[static_cast<size_t>(h) * total_ + p];
  }
  int right_act_raw(int p, int g) const {
    return right_act_[static_cast<size_t>(p) * right_->n_arrows() + g];
  }
  int left_act(int h, int p) const;   // throws std::logic_error when undefined
  int right_act(int p, int g) const;  // throws std::logic_error when undefined

private:
  GroupoidRef left_, right_;
  int total_ = 0;
  std::vector<int> pi_, eps_;
  std::vector<int> left_act_, right_act_;
};

struct BibundleViolation {
  std::string message;
};

// Checks action domains, unit and composition laws, the anchor equations
// pi(p.g) = pi(p) and eps(h.p) = eps(p), and commutation h.(p.g) = (h.p).g.
std::vector<BibundleViolation> validate_bibundle(Bibundle const &b,
                                                 size_t max_reports = 50);

struct PrincipalityReport {
  bool surjective_pi = false;
  bool right_action_free = false;
  bool right_action_fiber_transitive = false;
  // counterexamples when false:
  int empty_fiber_object = -1;
  std::array<int, 2> stabilizer_witness{-1, -1};   // (point, non-unit arrow fixing it)
  std::array<int, 2> untransitive_pair{-1, -1};    // same pi-fiber, no connecting arrow
  bool principal() const {
    return surjective_pi && right_action_free && right_action_fiber_transitive;
  }
};

PrincipalityReport is_principal(Bibundle const &b);
// The mirrored check: eps surjective, left action free and transitive on
// eps-fibers. A bibundle passing both is biprincipal (invertible).
PrincipalityReport is_left_principal(Bibundle const &b);

// Unique g with p.g = p2 for two points in one pi-fiber of a principal
// bundle (the translation map); -1 if none exists.
int translation_arrow(Bibundle const &b, int p, int p2);

// Pullback bundle <phi> = { (y, g) : phi(y) = tgt(g) } with anchors
// pr1 and src(pr2); principal over the source of phi.
Bibundle bundle_from_functor(GroupoidFunctor const &phi);
// <id>: arrows of g with anchors tgt and src.
Bibundle unit_bundle(GroupoidRef g);

// Orbit space of the diagonal middle action on q x_{H0} p. Requires
// q.right() and p.left() to present the same groupoid; checks that
// principality is preserved and throws std::logic_error otherwise.
Bibundle tensor(Bibundle const &q, Bibundle const &p);

// Transposed actions; requires biprincipality (throws std::invalid_argument).
Bibundle inverse_bibundle(Bibundle const &b);

// Equivariant anchor-preserving bijection search between principal
// bibundles over the same pair of groupoids. Exhaustive: propagates over
// action components from anchor-compatible seeds, so absence is certified.
// Returns the lexicographically least isomorphism as a point map.
std::optional<std::vector<int>> bibundle_iso_search(Bibundle const &a, Bibundle const &b);

struct MoritaDecision {
  bool equivalent = false;
  std::string reason;
  // biprincipal witness with left groupoid A and right groupoid B, present
  // iff equivalent
  std::optional<Bibundle> witness;
};

// Decision via the orbit/isotropy classification (sound and complete for
// finite groupoids); the witness is constructed independently and validated
// with is_principal on both sides.
MoritaDecision morita_equivalent(GroupoidRef a, GroupoidRef b);

struct FiberGroupoid {
  FiniteGroupoid groupoid;
  std::vector<int> points;  // object i of `groupoid` is this point of the bundle
};

// Translation groupoid of the left H-action restricted to eps^-1(a0).
FiberGroupoid fiber_groupoid(Bibundle const &b, int a0);

}  // namespace gpd
