#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace fibtype {

/// Dense matrix over Z with exact entries. No floating point anywhere in
/// the abelianization pipeline.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("bad matrix shape");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
  }

  static IntegerMatrix identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  mpz_class& operator()(int r, int c) { return data_[idx(r, c)]; }
  const mpz_class& operator()(int r, int c) const { return data_[idx(r, c)]; }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

  IntegerMatrix operator*(const IntegerMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
    IntegerMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int t = 0; t < cols_; ++t) {
        const mpz_class& a = (*this)(i, t);
        if (a == 0) continue;
        for (int j = 0; j < o.cols_; ++j) out(i, j) += a * o(t, j);
      }
    return out;
  }

  void swap_rows(int a, int b) {
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(int a, int b) {
    for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[a] += f * row[b]
  void add_row(int a, int b, const mpz_class& f) {
    for (int j = 0; j < cols_; ++j) (*this)(a, j) += f * (*this)(b, j);
  }
  /// col[a] += f * col[b]
  void add_col(int a, int b, const mpz_class& f) {
    for (int i = 0; i < rows_; ++i) (*this)(i, a) += f * (*this)(i, b);
  }
  void negate_row(int a) {
    for (int j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
  }
  void negate_col(int a) {
    for (int i = 0; i < rows_; ++i) (*this)(i, a) = -(*this)(i, a);
  }

  mpz_class determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    // fraction-free Bareiss elimination
    int n = rows_;
    if (n == 0) return 1;
    IntegerMatrix m = *this;
    mpz_class prev = 1;
    int sign = 1;
    for (int t = 0; t < n - 1; ++t) {
      if (m(t, t) == 0) {
        int p = -1;
        for (int i = t + 1; i < n; ++i)
          if (m(i, t) != 0) {
            p = i;
            break;
          }
        if (p < 0) return 0;
        m.swap_rows(t, p);
        sign = -sign;
      }
      for (int i = t + 1; i < n; ++i)
        for (int j = t + 1; j < n; ++j) {
          mpz_class v = m(i, j) * m(t, t) - m(i, t) * m(t, j);
          mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
          m(i, j) = v;
        }
      prev = m(t, t);
    }
    return sign > 0 ? m(n - 1, n - 1) : mpz_class(-m(n - 1, n - 1));
  }

 private:
  std::size_t idx(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("matrix index");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpz_class> data_;
};

}  // namespace fibtype
