#include "mhproj/intlin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "mhproj/errors.hpp"

namespace mhproj {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("add");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("sub");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("mul");
  return r;
}

Int checked_neg(Int a) {
  if (a == std::numeric_limits<Int>::min()) throw OverflowError("neg");
  return -a;
}

Int checked_abs(Int a) { return a < 0 ? checked_neg(a) : a; }

Int floor_div(Int a, Int b) {
  if (b == -1) return checked_neg(a);
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int gcd(Int a, Int b) {
  a = checked_abs(a);
  b = checked_abs(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int content(std::span<const Int> v) {
  Int g = 0;
  for (Int x : v) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

IntVector primitive(IntVector v) {
  Int g = content(v);
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

bool is_zero(std::span<const Int> v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

std::string to_string(std::span<const Int> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DomainError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  auto first = data_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
  return IntVector(first, first + static_cast<std::ptrdiff_t>(cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<IntVector> IntMatrix::row_vectors() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

std::vector<IntVector> IntMatrix::column_vectors() const {
  std::vector<IntVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DomainError("matrix product dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      Int a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out(i, j) = checked_add(out(i, j), checked_mul(a, rhs(k, j)));
    }
  return out;
}

IntVector IntMatrix::operator*(std::span<const Int> v) const {
  if (cols_ != v.size()) throw DomainError("matrix-vector dimension mismatch");
  IntVector out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) out[i] = checked_add(out[i], checked_mul((*this)(i, k), v[k]));
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, Int factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(dst, c) = checked_add((*this)(dst, c), checked_mul(factor, (*this)(src, c)));
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, Int factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, dst) = checked_add((*this)(r, dst), checked_mul(factor, (*this)(r, src)));
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = checked_neg((*this)(r, c));
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = checked_neg((*this)(r, c));
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) os << (r ? "," : "") << to_string(m.row(r));
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

// Elimination runs in 128-bit arithmetic: transforms can grow well past the
// final entries before the kernel reductions shrink them again.
using W = __int128;
using WVec = std::vector<W>;

W w_add(W a, W b) {
  W r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("add");
  return r;
}
W w_sub(W a, W b) {
  W r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("sub");
  return r;
}
W w_mul(W a, W b) {
  W r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("mul");
  return r;
}
W w_neg(W a) { return w_sub(0, a); }
W w_abs(W a) { return a < 0 ? w_neg(a) : a; }
W wgcd(W a, W b) {
  a = w_abs(a);
  b = w_abs(b);
  while (b != 0) {
    const W t = a % b;
    a = b;
    b = t;
  }
  return a;
}

class WMat {
 public:
  WMat(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()), data_(rows_ * cols_) {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = m(i, j);
  }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  W& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  W operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  WVec row(std::size_t r) const { return WVec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }
  WVec column(std::size_t c) const {
    WVec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }
  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  void add_row_multiple(std::size_t dst, std::size_t src, W f) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) = w_add((*this)(dst, j), w_mul(f, (*this)(src, j)));
  }
  void add_col_multiple(std::size_t dst, std::size_t src, W f) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) = w_add((*this)(i, dst), w_mul(f, (*this)(i, src)));
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = w_neg((*this)(r, j));
  }
  void negate_col(std::size_t c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = w_neg((*this)(i, c));
  }
  IntMatrix narrow() const {
    IntMatrix out(rows_, cols_);
    constexpr W lo = std::numeric_limits<Int>::min(), hi = std::numeric_limits<Int>::max();
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const W x = (*this)(i, j);
        if (x < lo || x > hi) throw OverflowError("Smith transform entry exceeds 64 bits");
        out(i, j) = static_cast<Int>(x);
      }
    return out;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<W> data_;
};


// Row and column operations applied to D, mirrored on U (rows) and V (columns),
// with the inverse operations applied to U^-1 (columns) and V^-1 (rows).
/// Quotient rounded to nearest, so the remainder is at most |b|/2 in size.
W nearest_div(W a, W b) {
  W q = a / b, r = a % b;
  if (w_mul(2, w_abs(r)) > w_abs(b)) q += ((r < 0) == (b < 0)) ? 1 : -1;
  return q;
}

Int nearest_div(Int a, Int b) {
  Int q = a / b, r = a % b;
  if (checked_mul(2, checked_abs(r)) > checked_abs(b)) q += ((r < 0) == (b < 0)) ? 1 : -1;
  return q;
}

struct Bezout {
  W g, x, y;
};

/// g = wgcd(a, b) >= 0 with x*a + y*b = g.
Bezout extended_gcd(W a, W b) {
  W old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const W q = old_r / r;
    W tmp = w_sub(old_r, w_mul(q, r));
    old_r = r;
    r = tmp;
    tmp = w_sub(old_s, w_mul(q, s));
    old_s = s;
    s = tmp;
    tmp = w_sub(old_t, w_mul(q, t));
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {w_neg(old_r), w_neg(old_s), w_neg(old_t)};
  return {old_r, old_s, old_t};
}

/// (row a, row b) <- (x*a + y*b, u*a + v*b)
void combine_rows(WMat& M, std::size_t a, std::size_t b, W x, W y, W u, W v) {
  for (std::size_t j = 0; j < M.cols(); ++j) {
    const W ra = M(a, j), rb = M(b, j);
    M(a, j) = w_add(w_mul(x, ra), w_mul(y, rb));
    M(b, j) = w_add(w_mul(u, ra), w_mul(v, rb));
  }
}

/// (col a, col b) <- (x*a + y*b, u*a + v*b)
void combine_cols(WMat& M, std::size_t a, std::size_t b, W x, W y, W u, W v) {
  for (std::size_t i = 0; i < M.rows(); ++i) {
    const W ca = M(i, a), cb = M(i, b);
    M(i, a) = w_add(w_mul(x, ca), w_mul(y, cb));
    M(i, b) = w_add(w_mul(u, ca), w_mul(v, cb));
  }
}

struct SmithWorkspace {
  WMat D, U, V, Ui, Vi;

  void swap_rows(std::size_t a, std::size_t b) {
    D.swap_rows(a, b);
    U.swap_rows(a, b);
    Ui.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    D.swap_cols(a, b);
    V.swap_cols(a, b);
    Vi.swap_rows(a, b);
  }
  void add_row(std::size_t dst, std::size_t src, W f) {
    D.add_row_multiple(dst, src, f);
    U.add_row_multiple(dst, src, f);
    Ui.add_col_multiple(src, dst, w_neg(f));
  }
  void add_col(std::size_t dst, std::size_t src, W f) {
    D.add_col_multiple(dst, src, f);
    V.add_col_multiple(dst, src, f);
    Vi.add_row_multiple(src, dst, w_neg(f));
  }
  /// Row b loses its entry in column c to row a by a 2x2 unimodular step.
  void bezout_rows(std::size_t a, std::size_t b, std::size_t c) { bezout_rows(a, b, c, D); }
  void bezout_rows(std::size_t a, std::size_t b, std::size_t c, const WMat& key) {
    const W va = key(a, c), vb = key(b, c);
    if (vb % va == 0) {
      add_row(b, a, w_neg(vb / va));
      return;
    }
    auto [g, x, y] = extended_gcd(va, vb);
    const W p = va / g, q = vb / g;
    combine_rows(D, a, b, x, y, w_neg(q), p);
    combine_rows(U, a, b, x, y, w_neg(q), p);
    // The inverse step [[p, -y], [q, x]] acts on the columns of Ui.
    combine_cols(Ui, a, b, p, q, w_neg(y), x);
  }
  /// Column b loses its entry in row r to column a.
  void bezout_cols(std::size_t a, std::size_t b, std::size_t r) { bezout_cols(a, b, r, D); }
  void bezout_cols(std::size_t a, std::size_t b, std::size_t r, const WMat& key) {
    const W va = key(r, a), vb = key(r, b);
    if (vb % va == 0) {
      add_col(b, a, w_neg(vb / va));
      return;
    }
    auto [g, x, y] = extended_gcd(va, vb);
    const W p = va / g, q = vb / g;
    combine_cols(D, a, b, x, y, w_neg(q), p);
    combine_cols(V, a, b, x, y, w_neg(q), p);
    combine_rows(Vi, a, b, p, q, w_neg(y), x);
  }
  /// Rows of U whose D-row vanishes span the left kernel; bring them to Hermite
  /// form and size-reduce the other rows against them. D is unaffected.
  void reduce_left_kernel() {
    const std::size_t m = D.rows(), n = D.cols();
    std::vector<std::size_t> zero, live;
    for (std::size_t i = 0; i < m; ++i) {
      bool z = true;
      for (std::size_t j = 0; j < n && z; ++j) z = D(i, j) == 0;
      (z ? zero : live).push_back(i);
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < m && r < zero.size(); ++c) {
      std::size_t piv = zero.size();
      for (std::size_t k = r; k < zero.size(); ++k)
        if (U(zero[k], c) != 0 && (piv == zero.size() || w_abs(U(zero[k], c)) < w_abs(U(zero[piv], c))))
          piv = k;
      if (piv == zero.size()) continue;
      swap_rows(zero[r], zero[piv]);
      for (std::size_t k = r + 1; k < zero.size(); ++k)
        if (U(zero[k], c) != 0) bezout_rows(zero[r], zero[k], c, U);
      if (U(zero[r], c) < 0) negate_row(zero[r]);
      const W p = U(zero[r], c);
      for (std::size_t k = 0; k < r; ++k) add_row(zero[k], zero[r], w_neg(nearest_div(U(zero[k], c), p)));
      for (std::size_t i : live) add_row(i, zero[r], w_neg(nearest_div(U(i, c), p)));
      ++r;
    }
  }
  /// Column analogue for V and the right kernel.
  void reduce_right_kernel() {
    const std::size_t m = D.rows(), n = D.cols();
    std::vector<std::size_t> zero, live;
    for (std::size_t j = 0; j < n; ++j) {
      bool z = true;
      for (std::size_t i = 0; i < m && z; ++i) z = D(i, j) == 0;
      (z ? zero : live).push_back(j);
    }
    std::size_t c = 0;
    for (std::size_t r = 0; r < n && c < zero.size(); ++r) {
      std::size_t piv = zero.size();
      for (std::size_t k = c; k < zero.size(); ++k)
        if (V(r, zero[k]) != 0 && (piv == zero.size() || w_abs(V(r, zero[k])) < w_abs(V(r, zero[piv]))))
          piv = k;
      if (piv == zero.size()) continue;
      swap_cols(zero[c], zero[piv]);
      for (std::size_t k = c + 1; k < zero.size(); ++k)
        if (V(r, zero[k]) != 0) bezout_cols(zero[c], zero[k], r, V);
      if (V(r, zero[c]) < 0) negate_col(zero[c]);
      const W p = V(r, zero[c]);
      for (std::size_t k = 0; k < c; ++k) add_col(zero[k], zero[c], w_neg(nearest_div(V(r, zero[k]), p)));
      for (std::size_t j : live) add_col(j, zero[c], w_neg(nearest_div(V(r, j), p)));
      ++c;
    }
  }
  /// With D diagonal, column j of V may absorb c*V_i whenever d_j | c*d_i;
  /// row i of U then absorbs -(c*d_i/d_j)*U_j and D is unchanged. Greedily
  /// apply such moves while they shrink |U|^2 + |V|^2.
  void polish(std::size_t r) {
    auto sq = [](const WVec& a, const WVec& b) {
      double s = 0;
      for (std::size_t k = 0; k < a.size(); ++k) s += static_cast<double>(a[k]) * static_cast<double>(b[k]);
      return s;
    };
    for (int pass = 0; pass < 64; ++pass) {
      bool improved = false;
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < r; ++i) {
          if (i == j) continue;
          const W step = D(j, j) / wgcd(D(i, i), D(j, j));  // c = step * t
          const W k = w_mul(step, D(i, i)) / D(j, j);   // U_i -= t * k * U_j
          const WVec vi = V.column(i), vj = V.column(j), ui = U.row(i), uj = U.row(j);
          const double a = static_cast<double>(step), b = static_cast<double>(k);
          const double quad = a * a * sq(vi, vi) + b * b * sq(uj, uj);
          const double lin = a * sq(vi, vj) - b * sq(ui, uj);
          if (quad == 0) continue;
          const double t_opt = -lin / quad;
          if (!(std::abs(t_opt) < 1e15)) continue;
          const W t = static_cast<W>(std::llround(t_opt));
          const double td = static_cast<double>(t);
          if (t == 0 || !(td * td * quad + 2 * td * lin < -0.5)) continue;
          add_col(j, i, w_mul(t, step));
          add_row(i, j, w_neg(w_mul(t, k)));
          improved = true;
        }
      if (!improved) break;
    }
  }
  /// diag(a, b) at positions i, j becomes diag(gcd, lcm).
  void gcd_lcm(std::size_t i, std::size_t j) {
    add_col(i, j, 1);       // column i now holds (a, b)
    bezout_rows(i, j, i);   // (g, 0) in column i; row i picks up an entry in column j
    const W g = D(i, i);
    add_col(j, i, w_neg(D(i, j) / g));
    if (D(j, j) < 0) negate_row(j);
  }
  void negate_col(std::size_t c) {
    D.negate_col(c);
    V.negate_col(c);
    Vi.negate_row(c);
  }
  void negate_row(std::size_t r) {
    D.negate_row(r);
    U.negate_row(r);
    Ui.negate_col(r);
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  SmithWorkspace w{A, IntMatrix::identity(m), IntMatrix::identity(n), IntMatrix::identity(m),
                   IntMatrix::identity(n)};

  // Diagonalize one pivot at a time, each pivot the smallest entry left.
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    bool exhausted = false;
    for (;;) {
      std::size_t pr = m, pc = n;
      W best = 0;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          const W a = w.D(i, j);
          if (a != 0 && (best == 0 || w_abs(a) < best)) {
            best = w_abs(a);
            pr = i;
            pc = j;
          }
        }
      if (best == 0) {
        exhausted = true;
        break;
      }
      w.swap_rows(t, pr);
      w.swap_cols(t, pc);
      bool clean = true;
      const W p = w.D(t, t);
      for (std::size_t i = t + 1; i < m; ++i) {
        if (w.D(i, t) == 0) continue;
        w.add_row(i, t, w_neg(nearest_div(w.D(i, t), p)));
        if (w.D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (w.D(t, j) == 0) continue;
        w.add_col(j, t, w_neg(nearest_div(w.D(t, j), p)));
        if (w.D(t, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (exhausted) break;
  }
  w.reduce_left_kernel();
  w.reduce_right_kernel();

  // Nonzero diagonal entries now lead; enforce d_i | d_j by gcd/lcm swaps.
  std::size_t r = 0;
  while (r < std::min(m, n) && w.D(r, r) != 0) ++r;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (w.D(j, j) % w.D(i, i) != 0) w.gcd_lcm(i, j);
  w.polish(r);
  w.reduce_left_kernel();
  w.reduce_right_kernel();
  std::vector<Int> factors;
  for (std::size_t i = 0; i < r; ++i)
    if (w.D(i, i) < 0) w.negate_row(i);
  SmithDecomposition out{w.U.narrow(), w.D.narrow(), w.V.narrow(), w.Ui.narrow(), w.Vi.narrow(), {}};
  for (std::size_t i = 0; i < r; ++i) out.invariant_factors.push_back(out.D(i, i));
  return out;
}

// ---------------------------------------------------------------------------
// Hermite normal form

IntMatrix hermite_normal_form(const IntMatrix& A) {
  IntMatrix H = A;
  const std::size_t m = H.rows(), n = H.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (;;) {
      std::size_t piv = m;
      for (std::size_t i = r; i < m; ++i)
        if (H(i, c) != 0 && (piv == m || checked_abs(H(i, c)) < checked_abs(H(piv, c)))) piv = i;
      if (piv == m) break;
      H.swap_rows(r, piv);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (H(i, c) == 0) continue;
        H.add_row_multiple(i, r, checked_neg(H(i, c) / H(r, c)));
        if (H(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) H.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) H.add_row_multiple(i, r, checked_neg(floor_div(H(i, c), H(r, c))));
    ++r;
  }
  IntMatrix out(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = H(i, j);
  return out;
}

// ---------------------------------------------------------------------------
// Lattices

LatticeBasis lattice_from_generators(std::size_t ambient_dim, const std::vector<IntVector>& gens) {
  IntMatrix H = hermite_normal_form(IntMatrix::from_rows(gens, ambient_dim));
  return LatticeBasis{ambient_dim, H.transpose(), H.rows()};
}

bool lattice_contains(const LatticeBasis& L, std::span<const Int> v) {
  if (v.size() != L.ambient_dim) throw DomainError("lattice_contains: dimension mismatch");
  // Reduce v against the echelon rows; v is in L iff the remainder vanishes.
  IntVector rem(v.begin(), v.end());
  for (std::size_t b = 0; b < L.rank; ++b) {
    std::size_t piv = 0;
    while (L.basis(piv, b) == 0) ++piv;
    for (std::size_t c = 0; c < piv; ++c)
      if (rem[c] != 0) return false;
    Int p = L.basis(piv, b);
    if (rem[piv] % p != 0) return false;
    Int q = rem[piv] / p;
    for (std::size_t c = 0; c < L.ambient_dim; ++c) rem[c] = checked_sub(rem[c], checked_mul(q, L.basis(c, b)));
  }
  return is_zero(rem);
}

LatticeBasis kernel_lattice(const IntMatrix& A) {
  const std::size_t k = A.cols();
  // Impose the rows one at a time. K holds a Hermite basis of the kernel so
  // far; the next row restricts it to the kernel of w = a*K, found by Euclid
  // steps on the columns of K. Re-normalizing after each row keeps entries
  // bounded by the minors of A.
  std::vector<IntVector> K = IntMatrix::identity(k).column_vectors();
  for (std::size_t r = 0; r < A.rows() && !K.empty(); ++r) {
    const IntVector a = A.row(r);
    IntVector w;
    for (const IntVector& v : K) w.push_back(dot(a, v));
    for (;;) {
      std::size_t piv = w.size();
      for (std::size_t j = 0; j < w.size(); ++j)
        if (w[j] != 0 && (piv == w.size() || checked_abs(w[j]) < checked_abs(w[piv]))) piv = j;
      if (piv == w.size()) break;
      bool done = true;
      for (std::size_t j = 0; j < w.size(); ++j) {
        if (j == piv || w[j] == 0) continue;
        const Int q = nearest_div(w[j], w[piv]);
        w[j] = checked_sub(w[j], checked_mul(q, w[piv]));
        for (std::size_t i = 0; i < k; ++i) K[j][i] = checked_sub(K[j][i], checked_mul(q, K[piv][i]));
        if (w[j] != 0) done = false;
      }
      if (done) {
        K.erase(K.begin() + static_cast<std::ptrdiff_t>(piv));
        break;
      }
    }
    K = lattice_from_generators(k, K).vectors();
  }
  return lattice_from_generators(k, K);
}

LatticeBasis kernel_lattice(const IntMatrix& A_free, const IntMatrix& A_tor, std::span<const Int> moduli) {
  const std::size_t k = std::max(A_free.cols(), A_tor.cols());
  if ((A_free.rows() && A_free.cols() != k) || (A_tor.rows() && A_tor.cols() != k))
    throw DomainError("kernel_lattice: column count mismatch");
  if (A_tor.rows() != moduli.size()) throw DomainError("kernel_lattice: one modulus per torsion row required");
  if (A_tor.rows() == 0) return kernel_lattice(A_free.rows() ? A_free : IntMatrix(0, k));

  // [A_free 0; A_tor -diag(m)] (v, w)^T = 0, then drop the auxiliary unknowns w.
  const std::size_t s = A_free.rows(), t = A_tor.rows();
  IntMatrix stacked(s + t, k + t);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < k; ++j) stacked(i, j) = A_free(i, j);
  for (std::size_t i = 0; i < t; ++i) {
    if (moduli[i] < 2) throw DomainError("kernel_lattice: moduli must be >= 2");
    for (std::size_t j = 0; j < k; ++j) stacked(s + i, j) = A_tor(i, j);
    stacked(s + i, k + i) = checked_neg(moduli[i]);
  }
  LatticeBasis ext = kernel_lattice(stacked);
  std::vector<IntVector> gens;
  for (const IntVector& v : ext.vectors()) gens.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
  return lattice_from_generators(k, gens);
}

std::size_t rank(const IntMatrix& A) { return hermite_normal_form(A).rows(); }

std::size_t rank(const std::vector<IntVector>& vectors, std::size_t dim) {
  return rank(IntMatrix::from_rows(vectors, dim));
}

bool finite_index(const std::vector<IntVector>& vectors, std::size_t s) {
  if (s == 0) return true;
  return rank(vectors, s) == s;
}

}  // namespace mhproj
