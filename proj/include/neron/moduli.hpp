#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "neron/graph.hpp"
#include "neron/rational.hpp"

namespace neron {

// Sorted set of 1-based mark indices.
using MarkSet = std::vector<int>;

enum class SymbolKind { kKappaOne, kPsi, kDeltaZero, kDeltaZeroP, kDeltaH, kPairRR, kPairXiR };

// A generator of the boundary/tautological symbol algebra on M_{g,n}-bar.
// Declaration order of the kinds is the output order.
struct ClassSymbol {
  SymbolKind kind = SymbolKind::kKappaOne;
  int index = 0;  // Psi(i), PairXiR(i)
  long h = 0;     // DeltaH
  MarkSet marks;  // DeltaZeroP, DeltaH

  static ClassSymbol kappa_one();
  static ClassSymbol psi(int i);
  static ClassSymbol delta_zero();
  // Requires |P| >= 2.
  static ClassSymbol delta_zero_p(MarkSet marks);
  // delta_h^P for 1 <= h <= g-1, stored as the canonical side of {(P,h), (P^c,g-h)}.
  static ClassSymbol delta_h(long h, MarkSet marks, long g, int n);
  static ClassSymbol pair_rr();
  static ClassSymbol pair_xi_r(int i);

  friend bool operator==(const ClassSymbol&, const ClassSymbol&) = default;
  friend auto operator<=>(const ClassSymbol&, const ClassSymbol&) = default;
};

// "kappa1", "psi_2", "delta_0", "delta_0^{1,2}", "delta_1", "delta_1^{1,3}", "<R,R>", "<x_1,R>".
std::string to_string(const ClassSymbol& symbol);

// Formal Q-combination of symbols on M_{g,n}-bar. Zero coefficients are not stored.
class PicClass {
 public:
  PicClass(long g, int n) : g_(g), n_(n) {}

  long g() const noexcept { return g_; }
  int n() const noexcept { return n_; }
  const std::map<ClassSymbol, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const ClassSymbol& symbol) const;
  void add(const ClassSymbol& symbol, const Rational& amount);

  PicClass& operator+=(const PicClass& other);
  friend bool operator==(const PicClass&, const PicClass&) = default;

 private:
  long g_;
  int n_;
  std::map<ClassSymbol, Rational> terms_;
};

// Parameters (g, n, d, m) of the divisor D = sum_i d_i [x_i] - m R.
struct LearInput {
  long g = 2;
  std::vector<long> d;  // n weights
  long m = 0;

  int n() const noexcept { return static_cast<int>(d.size()); }
};

// Throws Error(kOutOfRange) unless g >= 2 and 1 <= n <= 16,
// Error(kWeightConstraint) unless sum(d) == (2g - 2) m.
void validate(const LearInput& in);

// (m + sum_{i in P} d_i)^2. Requires |P| >= 2.
mpz_class a_coeff_zero(const MarkSet& marks, std::span<const long> d, long m);

// (-(2h - 1) m + sum_{i in P} d_i)^2. Requires 1 <= h <= g - 1.
mpz_class a_coeff(long h, const MarkSet& marks, std::span<const long> d, long m, long g);

// Reduction divisors on the two-vertex one-edge graph with vertices "C1", "C2" for a
// generic point of Delta_0^P (genera 0, g) and of Delta_h^P (genera h, g - h).
MultiGraph one_edge_graph();
Divisor stratum_divisor_zero(const MarkSet& marks, std::span<const long> d, long m, long g);
Divisor stratum_divisor(long h, const MarkSet& marks, std::span<const long> d, long m, long g);

// <D,D> = -sum_i (d_i^2 + 2 m d_i) <x_i,R> + m^2 <R,R>.
PicClass deligne_self_pairing_expansion(const LearInput& in);

// -<D,D> - sum_{|P|>=2} a(P,d) delta_0^P - 1/2 sum_{h=1}^{g-1} sum_P a(P,h,d) delta_h^P.
PicClass lear_class_deligne_basis(const LearInput& in);

// -m^2 kappa1 + sum_i (d_i^2 + 2 m d_i) psi_i - 2 sum_P sum_{j<k in P} d_j d_k delta_0^P
//   - 1/2 sum_h sum_P a(P,h,d) delta_h^P.
PicClass lear_class_kappa_psi(const LearInput& in);

// Rewrites <R,R> = kappa1 - sum_{|P|>=2} delta_0^P and
// <x_i,R> = psi_i + sum_{P ni i, |P|>=2} delta_0^P.
PicClass to_kappa_psi(const PicClass& deligne);

// All subsets of {1..n} in increasing bitmask order.
std::vector<MarkSet> mark_subsets(int n);

}  // namespace neron
