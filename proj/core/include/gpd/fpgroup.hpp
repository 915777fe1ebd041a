// Finitely presented groups: abelianization through Smith normal form,
// homomorphism counting into small finite groups, Tietze simplification,
// bounded coset enumeration, and exactness checks for abelianized sequences
// of presentation maps.

#pragma once

#include <gpd/group.hpp>
#include <gpd/intmat.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gpd {

// A word is a sequence of nonzero letters; letter k > 0 is generator k-1,
// letter -k is its inverse.
using Word = std::vector<int>;

Word free_reduce(Word w);
Word cyclic_reduce(Word w);
Word inverse_word(Word const &w);
Word concat(Word const &a, Word const &b);

class GroupPresentation {
public:
  GroupPresentation() = default;
  // Relator letters must lie in [-n, n] \ {0}; words are freely reduced on
  // construction.
  GroupPresentation(int generators, std::vector<Word> relators);

  int generators() const { return n_; }
  std::vector<Word> const &relators() const { return relators_; }

  // Exponent matrix: one row per relator, one column per generator.
  IntMatrix exponent_matrix() const;

  bool operator==(GroupPresentation const &) const = default;

private:
  int n_ = 0;
  std::vector<Word> relators_;
};

struct Abelianization {
  int free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1, in divisibility order
  bool operator==(Abelianization const &) const = default;
  std::string to_string() const;  // e.g. "Z^2 + Z/2 + Z/4", "0"
};

Abelianization abelianization(GroupPresentation const &p);

// Relator row lattice of p in canonical Hermite form.
IntMatrix relator_lattice(GroupPresentation const &p);

// ---- homomorphism counting ------------------------------------------------

inline constexpr long kHomEnumerationGuard = 10'000'000;

// Number of homomorphisms into t, by exhaustive enumeration of generator
// images. Throws std::length_error when |t|^generators exceeds the guard.
long hom_count(GroupPresentation const &p, FiniteGroup const &t);

// Z2, Z3, Z4, S3, D4, A4, S4.
std::vector<FiniteGroup> const &default_hom_targets();
std::vector<std::string> const &default_hom_target_names();

// Componentwise hom_count; entry is nullopt when that target exceeds the
// enumeration guard.
std::vector<std::optional<long>> hom_signature(
    GroupPresentation const &p,
    std::vector<FiniteGroup> const &targets = default_hom_targets());

// Homomorphisms of p into t whose composition with the given generator
// words is trivial, i.e. counting Hom(p / <<normal closure of words>>, t).
long hom_count_killing(GroupPresentation const &p,
                       std::vector<Word> const &killed, FiniteGroup const &t);

int eval_word(FiniteGroup const &g, Word const &w, std::vector<int> const &images);

// ---- Tietze simplification --------------------------------------------------

// Replays the elimination history so that words over the original
// generators can be rewritten over the simplified ones.
class Rewriter {
public:
  Word apply(Word const &w) const;

private:
  friend struct SimplifyRun;
  struct Step {
    int gen;        // generator index eliminated, in the numbering of its step
    Word replacement;  // word over that same numbering, not containing gen
  };
  std::vector<Step> steps_;
};

struct SimplifiedPresentation {
  GroupPresentation presentation;
  Rewriter rewriter;
  std::vector<int> generator_origin;  // surviving generator -> original index
};

SimplifiedPresentation simplify_presentation(GroupPresentation const &p,
                                             size_t max_total_length = 2'000'000);

// ---- presentation maps and exactness ---------------------------------------

class PresentationMap {
public:
  // images[i] is the image word of generator i. Construction checks that
  // every source relator maps into the relator lattice of the target at the
  // abelianized level (full triviality is only semi-decidable) and throws
  // std::invalid_argument otherwise.
  PresentationMap(GroupPresentation source, GroupPresentation target,
                  std::vector<Word> images);

  GroupPresentation const &source() const { return source_; }
  GroupPresentation const &target() const { return target_; }
  std::vector<Word> const &images() const { return images_; }

  Word apply(Word const &w) const;

  // Exponent matrix of the induced map on abelianizations
  // (source generators x target generators).
  IntMatrix abelianized_matrix() const;

private:
  GroupPresentation source_, target_;
  std::vector<Word> images_;
};

inline constexpr int kAbelianRankGuard = 64;

struct ExactnessReport {
  bool composite_trivial_abelian = false;
  bool exact_at_middle_abelian = false;
  std::string detail;
  bool pass() const { return composite_trivial_abelian && exact_at_middle_abelian; }
};

// Exactness at target(f) = source(g) on abelianizations: image lattice of f
// equals kernel lattice of g, both inside the middle abelianization. Exact
// decision via Hermite normal forms. Throws std::length_error when a rank
// guard is exceeded.
ExactnessReport check_exact_abelian(PresentationMap const &f, PresentationMap const &g);

// Image lattice of f inside Z^{target generators} (including target relators).
IntMatrix image_lattice(PresentationMap const &f);
// Kernel lattice of g inside Z^{source generators} (including source relators).
IntMatrix kernel_lattice(PresentationMap const &g);

// ---- bounded coset enumeration and isomorphism verdicts --------------------

inline constexpr int kReconstructionMaxOrder = 48;
inline constexpr int kReconstructionMaxCosets = 100'000;

struct ReconstructedGroup {
  FiniteGroup group;
  std::vector<int> generator_images;  // element of `group` per presentation generator
};

// Bounded Todd-Coxeter over the trivial subgroup. Returns the presented
// group as a multiplication table when enumeration completes within the
// coset bound and the order is at most max_order; nullopt otherwise.
std::optional<ReconstructedGroup> reconstruct_presented_group(
    GroupPresentation const &p, int max_cosets = kReconstructionMaxCosets,
    int max_order = kReconstructionMaxOrder);

std::optional<FiniteGroup> reconstruct_finite_group(
    GroupPresentation const &p, int max_cosets = kReconstructionMaxCosets,
    int max_order = kReconstructionMaxOrder);

enum class IsoVerdict { Refuted, Consistent, YesCertified };

struct IsoReport {
  IsoVerdict verdict = IsoVerdict::Consistent;
  std::string detail;
};

// Refuted on abelianization or hom-signature mismatch; yes-certified only
// when both groups reconstruct within the enumeration bounds and their
// tables are isomorphic. Never certifies falsely: bound overruns degrade
// to Consistent.
IsoReport probably_isomorphic(GroupPresentation const &p, GroupPresentation const &q);

// Multiplication-table presentation: one generator per element, relators
// gen(identity) and gen(a) gen(b) gen(ab)^-1.
GroupPresentation presentation_of_group(FiniteGroup const &g);

std::string word_to_string(Word const &w);

}  // namespace gpd
