#include <gpd/fpgroup.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gpd {

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (int letter : w) {
    if (letter == 0) throw std::invalid_argument("word: zero letter");
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(w.begin() + lo, w.begin() + hi);
}

Word inverse_word(Word const &w) {
  Word out(w.rbegin(), w.rend());
  for (int &letter : out) letter = -letter;
  return out;
}

Word concat(Word const &a, Word const &b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(std::move(out));
}

GroupPresentation::GroupPresentation(int generators, std::vector<Word> relators)
    : n_(generators) {
  if (generators < 0) throw std::invalid_argument("presentation: negative rank");
  relators_.reserve(relators.size());
  for (Word &w : relators) {
    for (int letter : w)
      if (letter == 0 || std::abs(letter) > n_)
        throw std::invalid_argument("presentation: letter out of range");
    Word r = free_reduce(std::move(w));
    if (!r.empty()) relators_.push_back(std::move(r));
  }
}

IntMatrix GroupPresentation::exponent_matrix() const {
  IntMatrix m(static_cast<int>(relators_.size()), n_);
  for (size_t i = 0; i < relators_.size(); ++i)
    for (int letter : relators_[i])
      m.at(static_cast<int>(i), std::abs(letter) - 1) += letter > 0 ? 1 : -1;
  return m;
}

std::string Abelianization::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (Int const &d : torsion) {
    if (!first) os << " + ";
    os << "Z/" << d.get_str();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Abelianization abelianization(GroupPresentation const &p) {
  SNFResult snf = smith_normal_form(p.exponent_matrix());
  Abelianization ab;
  int nonzero = 0;
  for (Int const &d : snf.diagonal()) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) ab.torsion.push_back(d);
  }
  ab.free_rank = p.generators() - nonzero;
  return ab;
}

IntMatrix relator_lattice(GroupPresentation const &p) {
  return hermite_normal_form(p.exponent_matrix());
}

// ---- homomorphism counting ------------------------------------------------

int eval_word(FiniteGroup const &g, Word const &w, std::vector<int> const &images) {
  int x = g.identity();
  for (int letter : w) {
    int im = images[std::abs(letter) - 1];
    x = g.mul(x, letter > 0 ? im : g.inv(im));
  }
  return x;
}

namespace {

template <typename Pred>
long count_assignments(int n_gens, FiniteGroup const &t, Pred const &ok) {
  long total = 1;
  for (int i = 0; i < n_gens; ++i) {
    total *= t.order();
    if (total > kHomEnumerationGuard)
      throw std::length_error("hom_count: enumeration guard exceeded");
  }
  std::vector<int> images(n_gens, 0);
  long count = 0;
  while (true) {
    if (ok(images)) ++count;
    int i = n_gens - 1;
    while (i >= 0 && images[i] == t.order() - 1) images[i--] = 0;
    if (i < 0) break;
    ++images[i];
  }
  return count;
}

}  // namespace

long hom_count(GroupPresentation const &p, FiniteGroup const &t) {
  return count_assignments(p.generators(), t, [&](std::vector<int> const &images) {
    for (Word const &r : p.relators())
      if (eval_word(t, r, images) != t.identity()) return false;
    return true;
  });
}

long hom_count_killing(GroupPresentation const &p, std::vector<Word> const &killed,
                       FiniteGroup const &t) {
  return count_assignments(p.generators(), t, [&](std::vector<int> const &images) {
    for (Word const &r : p.relators())
      if (eval_word(t, r, images) != t.identity()) return false;
    for (Word const &w : killed)
      if (eval_word(t, w, images) != t.identity()) return false;
    return true;
  });
}

std::vector<FiniteGroup> const &default_hom_targets() {
  static std::vector<FiniteGroup> const targets = {
      cyclic_group(2),   cyclic_group(3),      cyclic_group(4),
      symmetric_group(3), dihedral_group(4),   alternating_group(4),
      symmetric_group(4)};
  return targets;
}

std::vector<std::string> const &default_hom_target_names() {
  static std::vector<std::string> const names = {"Z2", "Z3", "Z4", "S3",
                                                 "D4", "A4", "S4"};
  return names;
}

std::vector<std::optional<long>> hom_signature(GroupPresentation const &p,
                                               std::vector<FiniteGroup> const &targets) {
  std::vector<std::optional<long>> out;
  out.reserve(targets.size());
  for (FiniteGroup const &t : targets) {
    try {
      out.push_back(hom_count(p, t));
    } catch (std::length_error const &) {
      out.push_back(std::nullopt);
    }
  }
  return out;
}

// ---- Tietze simplification --------------------------------------------------

Word Rewriter::apply(Word const &w) const {
  Word cur = free_reduce(w);
  for (Step const &step : steps_) {
    // substitute in the step's numbering, then shift generators above the
    // eliminated one down by one
    Word sub;
    sub.reserve(cur.size());
    for (int letter : cur) {
      if (std::abs(letter) - 1 == step.gen) {
        Word rep = letter > 0 ? step.replacement : inverse_word(step.replacement);
        sub.insert(sub.end(), rep.begin(), rep.end());
      } else {
        sub.push_back(letter);
      }
    }
    for (int &letter : sub) {
      int g = std::abs(letter) - 1;
      if (g > step.gen) letter = letter > 0 ? g : -g;
    }
    cur = free_reduce(std::move(sub));
  }
  return cur;
}

struct SimplifyRun {
  std::vector<Word> relators;
  std::vector<bool> alive;
  int n_gens;
  size_t total_len;
  size_t max_total;
  Rewriter rewriter;
  std::vector<int> origin;  // current generator -> original index

  size_t occurrences_elsewhere(int gen, size_t skip_idx) const {
    size_t count = 0;
    for (size_t i = 0; i < relators.size(); ++i) {
      if (!alive[i] || i == skip_idx) continue;
      for (int letter : relators[i])
        if (std::abs(letter) - 1 == gen) ++count;
    }
    return count;
  }

  // Generator occurring exactly once in relator i, or -1. Among candidates
  // picks the least generator index.
  static int once_occurring_gen(Word const &r) {
    // relators are short; quadratic count is fine
    int best = -1;
    for (size_t a = 0; a < r.size(); ++a) {
      int g = std::abs(r[a]) - 1;
      int count = 0;
      for (int letter : r)
        if (std::abs(letter) - 1 == g) ++count;
      if (count == 1 && (best < 0 || g < best)) best = g;
    }
    return best;
  }

  void eliminate(size_t idx, int gen) {
    Word r = cyclic_reduce(relators[idx]);
    // rotate so the unique occurrence of gen comes first: r = g^e v, so
    // g^e = v^-1 and g = v^-1 (e=1) or g = v (e=-1).
    size_t pos = 0;
    while (std::abs(r[pos]) - 1 != gen) ++pos;
    std::rotate(r.begin(), r.begin() + pos, r.end());
    Word v(r.begin() + 1, r.end());
    Word replacement = r[0] > 0 ? inverse_word(v) : v;

    alive[idx] = false;
    total_len -= relators[idx].size();
    for (size_t i = 0; i < relators.size(); ++i) {
      if (!alive[i]) continue;
      bool touches = false;
      for (int letter : relators[i])
        if (std::abs(letter) - 1 == gen) {
          touches = true;
          break;
        }
      if (!touches) continue;
      Word next;
      for (int letter : relators[i]) {
        if (std::abs(letter) - 1 == gen) {
          Word const &rep = letter > 0 ? replacement : inverse_word(replacement);
          next.insert(next.end(), rep.begin(), rep.end());
        } else {
          next.push_back(letter);
        }
      }
      total_len -= relators[i].size();
      relators[i] = free_reduce(std::move(next));
      total_len += relators[i].size();
      if (relators[i].empty()) alive[i] = false;
    }

    rewriter.steps_.push_back({gen, replacement});
    origin.erase(origin.begin() + gen);
    // renumber everything above gen
    auto shift = [gen](Word &w) {
      for (int &letter : w) {
        int g = std::abs(letter) - 1;
        if (g > gen) letter = letter > 0 ? g : -g;  // g is old index; new letter magnitude g
      }
    };
    for (size_t i = 0; i < relators.size(); ++i)
      if (alive[i]) shift(relators[i]);
    --n_gens;
  }
};

SimplifiedPresentation simplify_presentation(GroupPresentation const &p,
                                             size_t max_total_length) {
  SimplifyRun run;
  run.n_gens = p.generators();
  run.relators.reserve(p.relators().size());
  run.total_len = 0;
  run.max_total = max_total_length;
  run.origin.resize(p.generators());
  std::iota(run.origin.begin(), run.origin.end(), 0);
  for (Word const &r : p.relators()) {
    Word c = cyclic_reduce(r);
    if (c.empty()) continue;
    run.relators.push_back(std::move(c));
    run.total_len += run.relators.back().size();
  }
  run.alive.assign(run.relators.size(), true);

  while (true) {
    // best candidate: shortest alive relator with a once-occurring generator
    size_t best_idx = SIZE_MAX;
    int best_gen = -1;
    size_t best_len = SIZE_MAX;
    for (size_t i = 0; i < run.relators.size(); ++i) {
      if (!run.alive[i]) continue;
      size_t len = run.relators[i].size();
      if (len >= best_len) continue;
      int g = SimplifyRun::once_occurring_gen(run.relators[i]);
      if (g < 0) continue;
      best_idx = i;
      best_gen = g;
      best_len = len;
      if (len <= 1) break;
    }
    if (best_idx == SIZE_MAX) break;
    size_t growth = (best_len - 1) * run.occurrences_elsewhere(best_gen, best_idx);
    if (run.total_len + growth > run.max_total) break;
    run.eliminate(best_idx, best_gen);
  }

  std::vector<Word> kept;
  for (size_t i = 0; i < run.relators.size(); ++i)
    if (run.alive[i]) kept.push_back(cyclic_reduce(run.relators[i]));
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  return {GroupPresentation(run.n_gens, std::move(kept)), std::move(run.rewriter),
          std::move(run.origin)};
}

// ---- presentation maps -------------------------------------------------------

PresentationMap::PresentationMap(GroupPresentation source, GroupPresentation target,
                                 std::vector<Word> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != source_.generators())
    throw std::invalid_argument("presentation map: one image word per generator");
  for (Word &w : images_) {
    for (int letter : w)
      if (letter == 0 || std::abs(letter) > target_.generators())
        throw std::invalid_argument("presentation map: image letter out of range");
    w = free_reduce(std::move(w));
  }
  IntMatrix target_lat = relator_lattice(target_);
  IntMatrix f = abelianized_matrix();
  IntMatrix src_rel = source_.exponent_matrix();
  for (int r = 0; r < src_rel.rows(); ++r) {
    std::vector<Int> v(target_.generators());
    for (int j = 0; j < target_.generators(); ++j) {
      Int acc = 0;
      for (int k = 0; k < source_.generators(); ++k) acc += src_rel.at(r, k) * f.at(k, j);
      v[j] = acc;
    }
    if (!lattice_contains(target_lat, v))
      throw std::invalid_argument(
          "presentation map: relator image nontrivial in target abelianization");
  }
}

Word PresentationMap::apply(Word const &w) const {
  Word out;
  for (int letter : w) {
    Word const &im = images_[std::abs(letter) - 1];
    if (letter > 0)
      out.insert(out.end(), im.begin(), im.end());
    else {
      Word ii = inverse_word(im);
      out.insert(out.end(), ii.begin(), ii.end());
    }
  }
  return free_reduce(std::move(out));
}

IntMatrix PresentationMap::abelianized_matrix() const {
  IntMatrix m(source_.generators(), target_.generators());
  for (int i = 0; i < source_.generators(); ++i)
    for (int letter : images_[i])
      m.at(i, std::abs(letter) - 1) += letter > 0 ? 1 : -1;
  return m;
}

IntMatrix image_lattice(PresentationMap const &f) {
  return hermite_normal_form(
      stack_rows(f.abelianized_matrix(), f.target().exponent_matrix()));
}

IntMatrix kernel_lattice(PresentationMap const &g) {
  IntMatrix k = lattice_kernel_mod(g.abelianized_matrix(), g.target().exponent_matrix());
  return hermite_normal_form(stack_rows(k, g.source().exponent_matrix()));
}

ExactnessReport check_exact_abelian(PresentationMap const &f, PresentationMap const &g) {
  if (!(f.target() == g.source()))
    throw std::invalid_argument("check_exact_abelian: middle terms differ");
  for (int rank : {f.source().generators(), g.source().generators(), g.target().generators()})
    if (rank > kAbelianRankGuard)
      throw std::length_error("check_exact_abelian: rank guard exceeded");

  ExactnessReport report;
  IntMatrix composite = f.abelianized_matrix() * g.abelianized_matrix();
  IntMatrix target_lat = relator_lattice(g.target());
  report.composite_trivial_abelian = true;
  for (int i = 0; i < composite.rows(); ++i) {
    std::vector<Int> row(composite.cols());
    for (int j = 0; j < composite.cols(); ++j) row[j] = composite.at(i, j);
    if (!lattice_contains(target_lat, row)) {
      report.composite_trivial_abelian = false;
      report.detail = "generator " + std::to_string(i + 1) + " has nontrivial composite image";
      break;
    }
  }

  IntMatrix image = image_lattice(f);
  IntMatrix kernel = kernel_lattice(g);
  report.exact_at_middle_abelian = image == kernel;
  if (!report.exact_at_middle_abelian && report.detail.empty())
    report.detail = "image lattice differs from kernel lattice";
  return report;
}

// ---- bounded Todd-Coxeter ----------------------------------------------------

namespace {

class CosetTable {
public:
  CosetTable(int n_gens, int max_cosets)
      : ng_(n_gens), ncols_(2 * n_gens), bound_(max_cosets) {
    add_coset();
  }

  static int col_of(int letter) {
    return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
  }
  static int inv_col(int col) { return col ^ 1; }

  int find(int c) {
    while (rep_[c] != c) {
      rep_[c] = rep_[rep_[c]];
      c = rep_[c];
    }
    return c;
  }

  int entry(int c, int col) {
    int d = tab_[static_cast<size_t>(c) * ncols_ + col];
    return d < 0 ? -1 : find(d);
  }

  void set_entry(int c, int col, int d) {
    tab_[static_cast<size_t>(c) * ncols_ + col] = d;
    ++version_;
  }

  long version() const { return version_; }

  bool overflowed() const { return overflow_; }
  int size() const { return static_cast<int>(rep_.size()); }
  int live() const { return live_; }
  bool is_live(int c) { return find(c) == c; }

  int define(int c, int col) {
    if (size() >= bound_) {
      overflow_ = true;
      return -1;
    }
    int d = add_coset();
    set_entry(c, col, d);
    set_entry(d, inv_col(col), c);
    return d;
  }

  // scan-and-fill of relator w at coset a; returns false on overflow
  bool scan(int a, Word const &w) {
    a = find(a);
    int f = a;
    size_t i = 0;
    size_t r = w.size();
    int b = a;
    while (true) {
      while (i < r) {
        int next = entry(f, col_of(w[i]));
        if (next < 0) break;
        f = next;
        ++i;
      }
      if (i == r) {
        if (f != b) merge(f, b);
        return true;
      }
      while (r > i) {
        int next = entry(b, col_of(-w[r - 1]));
        if (next < 0) break;
        b = next;
        --r;
      }
      if (r == i) {
        merge(f, b);
        return true;
      }
      if (r == i + 1) {
        // deduction closes the gap
        int cf = col_of(w[i]);
        set_entry(f, cf, b);
        set_entry(b, inv_col(cf), f);
        process_coincidences();
        return true;
      }
      int d = define(f, col_of(w[i]));
      if (d < 0) return false;
      f = d;
      ++i;
    }
  }

  void merge(int a, int b) {
    queue_.emplace_back(a, b);
    process_coincidences();
  }

  void process_coincidences() {
    while (!queue_.empty()) {
      auto [x, y] = queue_.back();
      queue_.pop_back();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (x > y) std::swap(x, y);
      rep_[y] = x;
      --live_;
      ++version_;
      for (int col = 0; col < ncols_; ++col) {
        int d = tab_[static_cast<size_t>(y) * ncols_ + col];
        if (d < 0) continue;
        d = find(d);
        int e = entry(x, col);
        if (e < 0) {
          set_entry(x, col, d);
          int back = entry(d, inv_col(col));
          if (back < 0)
            set_entry(d, inv_col(col), x);
          else if (back != x)
            queue_.emplace_back(back, x);
        } else if (e != d) {
          queue_.emplace_back(d, e);
        }
      }
    }
  }

private:
  int add_coset() {
    int id = static_cast<int>(rep_.size());
    rep_.push_back(id);
    tab_.insert(tab_.end(), ncols_, -1);
    ++live_;
    return id;
  }

  int ng_, ncols_, bound_;
  int live_ = 0;
  long version_ = 0;
  bool overflow_ = false;
  std::vector<int> tab_;
  std::vector<int> rep_;
  std::vector<std::pair<int, int>> queue_;
};

}  // namespace

std::optional<ReconstructedGroup> reconstruct_presented_group(GroupPresentation const &p,
                                                              int max_cosets,
                                                              int max_order) {
  int n = p.generators();
  if (n == 0) return ReconstructedGroup{trivial_group(), {}};
  CosetTable table(n, max_cosets);

  // Scan rounds until the table is stable; a deduction or coincidence at one
  // coset can invalidate closure established at an earlier one.
  long stable_version = -1;
  while (stable_version != table.version()) {
    stable_version = table.version();
    for (int c = 0; c < table.size(); ++c) {
      if (!table.is_live(c)) continue;
      for (Word const &w : p.relators()) {
        if (!table.scan(c, w)) return std::nullopt;
        if (!table.is_live(c)) break;
      }
      if (!table.is_live(c)) continue;
      for (int col = 0; col < 2 * n; ++col)
        if (table.entry(c, col) < 0) {
          if (table.define(c, col) < 0) return std::nullopt;
        }
    }
    if (table.overflowed()) return std::nullopt;
  }

  if (table.live() > max_order) return std::nullopt;

  // live cosets are the elements; words along a BFS tree give the table
  std::vector<int> live;
  std::vector<int> index(table.size(), -1);
  for (int c = 0; c < table.size(); ++c)
    if (table.is_live(c)) {
      index[c] = static_cast<int>(live.size());
      live.push_back(c);
    }
  int m = static_cast<int>(live.size());

  std::vector<int> parent(m, -1), via_col(m, -1);
  std::vector<int> order_bfs;
  order_bfs.push_back(index[table.find(0)]);
  std::vector<bool> seen(m, false);
  seen[order_bfs[0]] = true;
  for (size_t q = 0; q < order_bfs.size(); ++q) {
    int u = order_bfs[q];
    for (int col = 0; col < 2 * n; ++col) {
      int v = index[table.entry(live[u], col)];
      if (!seen[v]) {
        seen[v] = true;
        parent[v] = u;
        via_col[v] = col;
        order_bfs.push_back(v);
      }
    }
  }

  auto word_of = [&](int v) {
    std::vector<int> cols;
    while (parent[v] >= 0) {
      cols.push_back(via_col[v]);
      v = parent[v];
    }
    std::reverse(cols.begin(), cols.end());
    return cols;
  };

  std::vector<std::vector<int>> mul(m, std::vector<int>(m));
  for (int b = 0; b < m; ++b) {
    std::vector<int> cols = word_of(b);
    for (int a = 0; a < m; ++a) {
      int c = live[a];
      for (int col : cols) c = table.entry(c, col);
      mul[a][b] = index[c];
    }
  }
  ReconstructedGroup out{FiniteGroup::from_table(mul), std::vector<int>(n)};
  for (int j = 0; j < n; ++j)
    out.generator_images[j] = index[table.entry(table.find(0), 2 * j)];
  return out;
}

std::optional<FiniteGroup> reconstruct_finite_group(GroupPresentation const &p,
                                                    int max_cosets, int max_order) {
  auto r = reconstruct_presented_group(p, max_cosets, max_order);
  if (!r) return std::nullopt;
  return std::move(r->group);
}

IsoReport probably_isomorphic(GroupPresentation const &p, GroupPresentation const &q) {
  Abelianization ap = abelianization(p), aq = abelianization(q);
  if (!(ap == aq))
    return {IsoVerdict::Refuted,
            "abelianizations differ: " + ap.to_string() + " vs " + aq.to_string()};

  auto sp = hom_signature(p), sq = hom_signature(q);
  for (size_t i = 0; i < sp.size(); ++i) {
    if (!sp[i] || !sq[i]) continue;
    if (*sp[i] != *sq[i])
      return {IsoVerdict::Refuted,
              "hom counts into " + default_hom_target_names()[i] + " differ: " +
                  std::to_string(*sp[i]) + " vs " + std::to_string(*sq[i])};
  }

  auto gp = reconstruct_finite_group(p);
  auto gq = reconstruct_finite_group(q);
  if (gp && gq) {
    if (gp->order() != gq->order())
      return {IsoVerdict::Refuted, "reconstructed orders differ"};
    if (group_isomorphism(*gp, *gq))
      return {IsoVerdict::YesCertified,
              "both present " + group_description(*gp) + ", tables isomorphic"};
    return {IsoVerdict::Refuted, "reconstructed tables are not isomorphic"};
  }
  return {IsoVerdict::Consistent, "no invariant distinguishes the presentations"};
}

GroupPresentation presentation_of_group(FiniteGroup const &g) {
  int n = g.order();
  std::vector<Word> relators;
  relators.reserve(static_cast<size_t>(n) * n + 1);
  relators.push_back({g.identity() + 1});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      relators.push_back({a + 1, b + 1, -(g.mul(a, b) + 1)});
  return GroupPresentation(n, std::move(relators));
}

std::string word_to_string(Word const &w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << "*";
    os << "g" << std::abs(w[i]);
    if (w[i] < 0) os << "^-1";
  }
  return os.str();
}

}  // namespace gpd
