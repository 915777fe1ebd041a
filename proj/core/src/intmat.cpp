#include <gpd/intmat.hpp>

#include <algorithm>
#include <stdexcept>

namespace gpd {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
  rows_ = static_cast<int>(init.size());
  cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
  a_.reserve(static_cast<size_t>(rows_) * cols_);
  for (auto &row : init) {
    if (static_cast<int>(row.size()) != cols_)
      throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long v : row) a_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](Int const &x) { return x == 0; });
}

IntMatrix IntMatrix::operator*(IntMatrix const &other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("IntMatrix: shape mismatch");
  IntMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      Int const &aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < other.cols_; ++j) out.at(i, j) += aik * other.at(k, j);
    }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

void IntMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row_multiple(int dst, int src, Int const &k) {
  if (k == 0) return;
  for (int c = 0; c < cols_; ++c) at(dst, c) += k * at(src, c);
}

void IntMatrix::add_col_multiple(int dst, int src, Int const &k) {
  if (k == 0) return;
  for (int r = 0; r < rows_; ++r) at(r, dst) += k * at(r, src);
}

void IntMatrix::negate_row(int i) {
  for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(int j) {
  for (int r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant: not square");
  int n = rows_;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination; divisions are exact.
  IntMatrix m = *this;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

std::vector<Int> SNFResult::diagonal() const {
  int k = std::min(D.rows(), D.cols());
  std::vector<Int> d(k);
  for (int i = 0; i < k; ++i) d[i] = D.at(i, i);
  return d;
}

namespace {

// The transform state keeps A = U * D * V at every step, with tracked
// inverses so callers get kernels without a separate inversion.
struct SNFState {
  IntMatrix D, U, V, Uinv, Vinv;

  void row_swap(int i, int j) {
    D.swap_rows(i, j);
    U.swap_cols(i, j);
    Uinv.swap_rows(i, j);
  }
  void col_swap(int i, int j) {
    D.swap_cols(i, j);
    V.swap_rows(i, j);
    Vinv.swap_cols(i, j);
  }
  // D: row i += k * row j
  void row_add(int i, int j, Int const &k) {
    D.add_row_multiple(i, j, k);
    U.add_col_multiple(j, i, -k);
    Uinv.add_row_multiple(i, j, k);
  }
  // D: col j += k * col i
  void col_add(int j, int i, Int const &k) {
    D.add_col_multiple(j, i, k);
    V.add_row_multiple(i, j, -k);
    Vinv.add_col_multiple(j, i, k);
  }
  void row_negate(int i) {
    D.negate_row(i);
    U.negate_col(i);
    Uinv.negate_row(i);
  }
};

bool find_pivot(IntMatrix const &d, int t, int &pi, int &pj) {
  bool found = false;
  Int best;
  for (int i = t; i < d.rows(); ++i)
    for (int j = t; j < d.cols(); ++j) {
      Int const &x = d.at(i, j);
      if (x == 0) continue;
      Int ax = abs(x);
      if (!found || ax < best) {
        found = true;
        best = ax;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SNFResult smith_normal_form(IntMatrix const &a) {
  int m = a.rows(), n = a.cols();
  SNFState s{a, IntMatrix::identity(m), IntMatrix::identity(n),
             IntMatrix::identity(m), IntMatrix::identity(n)};
  int limit = std::min(m, n);

  // phase 1: diagonalize; the pivot is re-selected as the submatrix minimum
  // on every sweep, which keeps the remainder arithmetic Euclidean and the
  // entries tame
  int rank = 0;
  for (int t = 0; t < limit; ++t) {
    int pi, pj;
    if (!find_pivot(s.D, t, pi, pj)) break;
    while (true) {
      s.row_swap(t, pi);
      s.col_swap(t, pj);
      bool clean = true;
      for (int i = t + 1; i < m; ++i)
        if (s.D.at(i, t) != 0) {
          Int q = s.D.at(i, t) / s.D.at(t, t);
          s.row_add(i, t, -q);
          if (s.D.at(i, t) != 0) clean = false;
        }
      for (int j = t + 1; j < n; ++j)
        if (s.D.at(t, j) != 0) {
          Int q = s.D.at(t, j) / s.D.at(t, t);
          s.col_add(j, t, -q);
          if (s.D.at(t, j) != 0) clean = false;
        }
      if (clean) break;
      find_pivot(s.D, t, pi, pj);
    }
    if (s.D.at(t, t) < 0) s.row_negate(t);
    rank = t + 1;
  }

  // phase 2: adjacent 2x2 blocks diag(a, b) -> diag(gcd, lcm) until the
  // chain holds; the blocks stay isolated, so entries remain bounded
  bool chained = false;
  while (!chained) {
    chained = true;
    for (int t = 0; t + 1 < rank; ++t) {
      if (s.D.at(t + 1, t + 1) % s.D.at(t, t) == 0) continue;
      chained = false;
      s.col_add(t, t + 1, 1);  // block is now [[a, 0], [b, b]]
      bool clean = false;
      while (!clean) {
        clean = true;
        if (s.D.at(t + 1, t) != 0) {
          Int aa = abs(s.D.at(t, t)), bb = abs(s.D.at(t + 1, t));
          if (bb < aa) {
            s.row_swap(t, t + 1);
            clean = false;
            continue;
          }
          Int q = s.D.at(t + 1, t) / s.D.at(t, t);
          s.row_add(t + 1, t, -q);
          if (s.D.at(t + 1, t) != 0) {
            s.row_swap(t, t + 1);
            clean = false;
          }
        }
        if (s.D.at(t, t + 1) != 0) {
          Int q = s.D.at(t, t + 1) / s.D.at(t, t);
          s.col_add(t + 1, t, -q);
          if (s.D.at(t, t + 1) != 0) {
            s.col_swap(t, t + 1);
            clean = false;
          }
        }
      }
      if (s.D.at(t, t) < 0) s.row_negate(t);
      if (s.D.at(t + 1, t + 1) < 0) s.row_negate(t + 1);
    }
  }
  return {std::move(s.U), std::move(s.D), std::move(s.V), std::move(s.Uinv),
          std::move(s.Vinv)};
}

IntMatrix hermite_normal_form(IntMatrix const &a) {
  IntMatrix h = a;
  int m = h.rows(), n = h.cols();
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    // gcd elimination within column c on rows >= r
    while (true) {
      int p = -1;
      Int best;
      for (int i = r; i < m; ++i)
        if (h.at(i, c) != 0) {
          Int ax = abs(h.at(i, c));
          if (p < 0 || ax < best) {
            p = i;
            best = ax;
          }
        }
      if (p < 0) break;
      h.swap_rows(r, p);
      bool more = false;
      for (int i = r + 1; i < m; ++i)
        if (h.at(i, c) != 0) {
          Int q = h.at(i, c) / h.at(r, c);
          h.add_row_multiple(i, r, -q);
          if (h.at(i, c) != 0) more = true;
        }
      if (!more) break;
    }
    if (h.at(r, c) == 0) continue;
    if (h.at(r, c) < 0) h.negate_row(r);
    // canonical reduction above the pivot: entries into [0, pivot)
    for (int i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(i, c).get_mpz_t(), h.at(r, c).get_mpz_t());
      h.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  IntMatrix out(r, n);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = h.at(i, j);
  return out;
}

bool lattice_contains(IntMatrix const &hnf, std::vector<Int> const &v) {
  if (static_cast<int>(v.size()) != hnf.cols())
    throw std::invalid_argument("lattice_contains: dimension mismatch");
  std::vector<Int> w = v;
  int row = 0;
  for (int c = 0; c < hnf.cols(); ++c) {
    int pivot_row = -1;
    if (row < hnf.rows() && hnf.at(row, c) != 0) pivot_row = row;
    if (pivot_row < 0) {
      if (w[c] != 0) return false;
      continue;
    }
    if (w[c] % hnf.at(pivot_row, c) != 0) return false;
    Int q = w[c] / hnf.at(pivot_row, c);
    if (q != 0)
      for (int j = c; j < hnf.cols(); ++j) w[j] -= q * hnf.at(pivot_row, j);
    ++row;
  }
  return std::all_of(w.begin(), w.end(), [](Int const &x) { return x == 0; });
}

IntMatrix lattice_kernel(IntMatrix const &b) {
  SNFResult snf = smith_normal_form(b);
  int m = b.rows(), n = b.cols();
  int k = std::min(m, n);
  std::vector<int> free_rows;
  for (int i = 0; i < m; ++i)
    if (i >= k || snf.D.at(i, i) == 0) free_rows.push_back(i);
  IntMatrix out(static_cast<int>(free_rows.size()), m);
  for (size_t r = 0; r < free_rows.size(); ++r)
    for (int j = 0; j < m; ++j) out.at(static_cast<int>(r), j) = snf.Uinv.at(free_rows[r], j);
  return out;
}

IntMatrix lattice_kernel_mod(IntMatrix const &w, IntMatrix const &r) {
  if (w.cols() != r.cols())
    throw std::invalid_argument("lattice_kernel_mod: column mismatch");
  IntMatrix stacked = stack_rows(w, r);
  IntMatrix ker = lattice_kernel(stacked);
  IntMatrix out(ker.rows(), w.rows());
  for (int i = 0; i < ker.rows(); ++i)
    for (int j = 0; j < w.rows(); ++j) out.at(i, j) = ker.at(i, j);
  return hermite_normal_form(out);
}

IntMatrix stack_rows(IntMatrix const &top, IntMatrix const &bottom) {
  if (top.cols() != bottom.cols() && top.rows() != 0 && bottom.rows() != 0)
    throw std::invalid_argument("stack_rows: column mismatch");
  int cols = top.rows() ? top.cols() : bottom.cols();
  IntMatrix out(top.rows() + bottom.rows(), cols);
  for (int i = 0; i < top.rows(); ++i)
    for (int j = 0; j < cols; ++j) out.at(i, j) = top.at(i, j);
  for (int i = 0; i < bottom.rows(); ++i)
    for (int j = 0; j < cols; ++j) out.at(top.rows() + i, j) = bottom.at(i, j);
  return out;
}

}  // namespace gpd
