#pragma once

// Matrices over the rationals with direct sum as tensor.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "otsalg/error.hpp"
#include "otsalg/rational.hpp"

namespace otsalg {

/// A morphism n -> m, stored as an m x n matrix acting on column vectors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw DimensionMismatch("matrix data has the wrong length");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Rational>& data() const { return data_; }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block outside the matrix");
    Matrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Diagrammatic composition: f : n -> m then g : m -> k gives g·f.
inline Matrix compose(const Matrix& f, const Matrix& g) {
  if (f.rows() != g.cols())
    throw DimensionMismatch("cannot compose " + std::to_string(f.cols()) + "->" + std::to_string(f.rows()) +
                            " with " + std::to_string(g.cols()) + "->" + std::to_string(g.rows()));
  Matrix out(g.rows(), f.cols());
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t k = 0; k < g.cols(); ++k) {
      if (g(r, k) == 0) continue;
      for (std::size_t c = 0; c < f.cols(); ++c) out(r, c) += g(r, k) * f(k, c);
    }
  return out;
}

/// Direct sum.
inline Matrix tensor(const Matrix& f, const Matrix& g) {
  Matrix out(f.rows() + g.rows(), f.cols() + g.cols());
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c) out(r, c) = f(r, c);
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c) out(f.rows() + r, f.cols() + c) = g(r, c);
  return out;
}

struct MatInstance {
  using object = std::size_t;
  using morphism = Matrix;
  static constexpr const char* name = "mat";

  static std::size_t unit() { return 0; }
  static std::size_t dom(const Matrix& f) { return f.cols(); }
  static std::size_t cod(const Matrix& f) { return f.rows(); }
  static Matrix compose(const Matrix& f, const Matrix& g) { return otsalg::compose(f, g); }
  static Matrix tensor(const Matrix& f, const Matrix& g) { return otsalg::tensor(f, g); }
  static Matrix identity(std::size_t n) { return Matrix::identity(n); }

  /// (x, y) -> (y, x) for x of dimension n and y of dimension m.
  static Matrix swap(std::size_t n, std::size_t m) {
    Matrix s(n + m, n + m);
    for (std::size_t i = 0; i < m; ++i) s(i, n + i) = 1;
    for (std::size_t j = 0; j < n; ++j) s(m + j, j) = 1;
    return s;
  }

  static bool equal(const Matrix& f, const Matrix& g) { return f == g; }
  static std::size_t tensor_objects(std::size_t a, std::size_t b) { return a + b; }
  static std::optional<std::size_t> strip_prefix(std::size_t whole, std::size_t prefix) {
    if (prefix > whole) return std::nullopt;
    return whole - prefix;
  }
  static std::string describe(std::size_t n) { return std::to_string(n); }

  /// x -> (x, x)
  static Matrix copy(std::size_t n) { return stack(identity(n), identity(n)); }
  /// (x, y) -> x + y
  static Matrix cocopy(std::size_t n) {
    Matrix m(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m(i, n + i) = 1;
    return m;
  }
  static Matrix discard(std::size_t n) { return Matrix(0, n); }
  static Matrix codiscard(std::size_t n) { return Matrix(n, 0); }

 private:
  static Matrix stack(const Matrix& top, const Matrix& bottom) {
    Matrix out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r)
      for (std::size_t c = 0; c < top.cols(); ++c) out(r, c) = top(r, c);
    for (std::size_t r = 0; r < bottom.rows(); ++r)
      for (std::size_t c = 0; c < top.cols(); ++c) out(top.rows() + r, c) = bottom(r, c);
    return out;
  }
};

}  // namespace otsalg
