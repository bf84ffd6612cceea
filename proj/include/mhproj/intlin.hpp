#pragma once

// Exact integer linear algebra over int64 with overflow detection.
//
// Matrices are dense and row-major. Where a matrix holds a family of vectors
// the convention is mathematical: vectors are columns.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mhproj {

using Int = std::int64_t;
using IntVector = std::vector<Int>;

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);
Int checked_abs(Int a);

/// Floor division (rounds toward negative infinity); b must be nonzero.
Int floor_div(Int a, Int b);
Int gcd(Int a, Int b);

/// gcd of all entries; 0 for the zero vector.
Int content(std::span<const Int> v);
/// Divide by the content. The zero vector is returned unchanged.
IntVector primitive(IntVector v);
Int dot(std::span<const Int> a, std::span<const Int> b);
bool is_zero(std::span<const Int> v);
std::string to_string(std::span<const Int> v);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  /// Matrix whose rows are the given vectors; all must have length `cols`.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  /// Matrix whose columns are the given vectors; all must have length `rows`.
  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  std::vector<IntVector> row_vectors() const;
  std::vector<IntVector> column_vectors() const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVector operator*(std::span<const Int> v) const;

  bool operator==(const IntMatrix&) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, Int factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, Int factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

std::string to_string(const IntMatrix& m);

/// U·A·V = D with U, V unimodular and D diagonal in Smith form.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix U_inverse;
  IntMatrix V_inverse;
  /// Nonzero diagonal entries of D, each dividing the next.
  std::vector<Int> invariant_factors;
};

SmithDecomposition smith_normal_form(const IntMatrix& A);

/// Row-style Hermite normal form: nonzero rows only, echelon with positive
/// pivots and entries above each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& A);

/// A sublattice of Z^ambient_dim. Columns of `basis` are the basis vectors,
/// kept in column Hermite normal form (the transpose of the row HNF).
struct LatticeBasis {
  std::size_t ambient_dim = 0;
  IntMatrix basis;
  std::size_t rank = 0;

  std::vector<IntVector> vectors() const { return basis.column_vectors(); }
  bool operator==(const LatticeBasis&) const = default;
};

/// Lattice spanned by arbitrary generators, canonicalized by HNF.
LatticeBasis lattice_from_generators(std::size_t ambient_dim, const std::vector<IntVector>& gens);
bool lattice_contains(const LatticeBasis& L, std::span<const Int> v);

/// {v in Z^k : A_free v = 0, (A_tor v)_i = 0 mod moduli_i}. Either matrix may
/// have zero rows but both must have k columns.
LatticeBasis kernel_lattice(const IntMatrix& A_free, const IntMatrix& A_tor, std::span<const Int> moduli);
LatticeBasis kernel_lattice(const IntMatrix& A);

std::size_t rank(const IntMatrix& A);
std::size_t rank(const std::vector<IntVector>& vectors, std::size_t dim);

/// Whether vectors in Z^s generate a subgroup of finite index.
bool finite_index(const std::vector<IntVector>& vectors, std::size_t s);

}  // namespace mhproj
