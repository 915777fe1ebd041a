// Exact integer matrices over GMP integers: Smith and Hermite normal forms,
// lattice membership, lattice kernels. All arithmetic is arbitrary precision;
// intermediate entry growth is the classic failure mode of fixed-width SNF.

#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <vector>

namespace gpd {

using Int = mpz_class;

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int &at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  Int const &at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool is_zero() const;
  bool operator==(IntMatrix const &other) const = default;

  IntMatrix operator*(IntMatrix const &other) const;
  IntMatrix transposed() const;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  void add_row_multiple(int dst, int src, Int const &k);  // row dst += k * row src
  void add_col_multiple(int dst, int src, Int const &k);  // col dst += k * col src
  void negate_row(int i);
  void negate_col(int i);

  // Exact determinant (square matrices), fraction-free Gaussian elimination.
  Int determinant() const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> a_;
};

// A = U * D * V with U, V unimodular and D diagonal with d1 | d2 | ... >= 0.
// Uinv and Vinv are the tracked inverses (also unimodular).
struct SNFResult {
  IntMatrix U, D, V;
  IntMatrix Uinv, Vinv;
  std::vector<Int> diagonal() const;
};

SNFResult smith_normal_form(IntMatrix const &a);

// Canonical row Hermite normal form of the row lattice: zero rows dropped,
// pivots positive with strictly increasing columns, entries above each pivot
// reduced into [0, pivot). Equal lattices produce equal forms.
IntMatrix hermite_normal_form(IntMatrix const &a);

// Membership of v in the row lattice presented by an HNF matrix.
bool lattice_contains(IntMatrix const &hnf, std::vector<Int> const &v);

// Generators of { z : z * b = 0 } as rows of a matrix (may have zero rows
// when the kernel is trivial).
IntMatrix lattice_kernel(IntMatrix const &b);

// Generators of { x : x * w lies in the row lattice of r }.
IntMatrix lattice_kernel_mod(IntMatrix const &w, IntMatrix const &r);

// Stacks the rows of two matrices (must agree in column count).
IntMatrix stack_rows(IntMatrix const &top, IntMatrix const &bottom);

}  // namespace gpd
