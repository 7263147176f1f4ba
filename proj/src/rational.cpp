#include "neron/rational.hpp"

#include <cctype>
#include <utility>

#include "neron/error.hpp"

namespace neron {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw Error(ErrorCode::kMalformedInput, "not a rational: '" + std::string(text) + "'");
  }
  mpz_class p(strip_plus(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) {
    throw Error(ErrorCode::kMalformedInput, "zero denominator: '" + std::string(text) + "'");
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  Rational r = value;
  r.canonicalize();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

RationalMatrix RationalMatrix::identity(std::size_t dim) {
  RationalMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

bool RationalMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Rational RationalMatrix::bilinear(std::span<const Rational> x, std::span<const Rational> y) const {
  Rational total = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] != 0) row += (*this)(i, j) * y[j];
    }
    total += x[i] * row;
  }
  return total;
}

std::vector<Rational> RationalMatrix::apply(std::span<const Rational> x) const {
  std::vector<Rational> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      if (x[j] != 0) out[i] += (*this)(i, j) * x[j];
    }
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.dim();
  RationalMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.dim();
  RationalMatrix work = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col) == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::kSingularMatrix, "matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Rational scale = 1 / work(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || work(i, col) == 0) continue;
      const Rational factor = work(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        work(i, j) -= factor * work(col, j);
        inv(i, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

std::size_t rank(const RationalMatrix& m) {
  const std::size_t n = m.dim();
  RationalMatrix work = m;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < n; ++col) {
    std::size_t pivot = r;
    while (pivot < n && work(pivot, col) == 0) ++pivot;
    if (pivot == n) continue;
    for (std::size_t j = 0; j < n; ++j) std::swap(work(pivot, j), work(r, j));
    for (std::size_t i = r + 1; i < n; ++i) {
      if (work(i, col) == 0) continue;
      const Rational factor = work(i, col) / work(r, col);
      for (std::size_t j = col; j < n; ++j) work(i, j) -= factor * work(r, j);
    }
    ++r;
  }
  return r;
}

Rational determinant(const RationalMatrix& m) {
  const std::size_t n = m.dim();
  RationalMatrix work = m;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(work(pivot, j), work(col, j));
      det = -det;
    }
    det *= work(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (work(i, col) == 0) continue;
      const Rational factor = work(i, col) / work(col, col);
      for (std::size_t j = col; j < n; ++j) work(i, j) -= factor * work(col, j);
    }
  }
  return det;
}

}  // namespace neron
