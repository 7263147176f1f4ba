#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace neron {

using Rational = mpq_class;

// Parses "p/q", "p" or "-p/q". Throws Error(kMalformedInput) otherwise.
Rational parse_rational(std::string_view text);

// Lowest terms, always with an explicit denominator: "3/1", "-2/9".
std::string format_rational(const Rational& value);

// Dense square matrix over Q, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static RationalMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }

  Rational& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Rational& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  bool is_symmetric() const;
  RationalMatrix transposed() const;

  // x^T M y
  Rational bilinear(std::span<const Rational> x, std::span<const Rational> y) const;
  std::vector<Rational> apply(std::span<const Rational> x) const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> data_;
};

// Gauss-Jordan inverse. Throws Error(kSingularMatrix) if the matrix is singular.
RationalMatrix inverse(const RationalMatrix& m);

// Exact rank by row reduction.
std::size_t rank(const RationalMatrix& m);

Rational determinant(const RationalMatrix& m);

}  // namespace neron
