#include "neron/moduli.hpp"

#include <algorithm>

#include "neron/canon.hpp"
#include "neron/error.hpp"

namespace neron {

namespace {

constexpr int kMaxMarks = 16;

MarkSet all_marks(int n) {
  MarkSet out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i + 1;
  return out;
}

long partial_sum(const MarkSet& marks, std::span<const long> d) {
  long total = 0;
  for (int i : marks) {
    if (i < 1 || static_cast<std::size_t>(i) > d.size()) {
      throw Error(ErrorCode::kOutOfRange, "mark index " + std::to_string(i) + " out of range");
    }
    total += d[static_cast<std::size_t>(i - 1)];
  }
  return total;
}

MarkSet sorted_unique(MarkSet marks) {
  std::sort(marks.begin(), marks.end());
  if (std::adjacent_find(marks.begin(), marks.end()) != marks.end()) {
    throw Error(ErrorCode::kMalformedInput, "mark set has repeated entries");
  }
  return marks;
}

mpz_class square(long x) {
  const mpz_class v = x;
  return v * v;
}

std::string join(const MarkSet& marks) {
  std::string out;
  for (std::size_t i = 0; i < marks.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(marks[i]);
  }
  return out;
}

// Adds -1/2 sum_{h=1}^{g-1} sum_P a(P,h,d) delta_h^P, accumulated on canonical symbols.
void add_delta_h_terms(PicClass& cls, const LearInput& in) {
  const Rational half(mpz_class(1), mpz_class(2));
  for (long h = 1; h <= in.g - 1; ++h) {
    for (const MarkSet& p : mark_subsets(in.n())) {
      const mpz_class a = a_coeff(h, p, in.d, in.m, in.g);
      if (a == 0) continue;
      cls.add(ClassSymbol::delta_h(h, p, in.g, in.n()), -half * Rational(a));
    }
  }
}

}  // namespace

ClassSymbol ClassSymbol::kappa_one() { return {SymbolKind::kKappaOne, 0, 0, {}}; }

ClassSymbol ClassSymbol::psi(int i) { return {SymbolKind::kPsi, i, 0, {}}; }

ClassSymbol ClassSymbol::delta_zero() { return {SymbolKind::kDeltaZero, 0, 0, {}}; }

ClassSymbol ClassSymbol::delta_zero_p(MarkSet marks) {
  marks = sorted_unique(std::move(marks));
  if (marks.size() < 2) throw Error(ErrorCode::kOutOfRange, "delta_0^P needs |P| >= 2");
  return {SymbolKind::kDeltaZeroP, 0, 0, std::move(marks)};
}

ClassSymbol ClassSymbol::delta_h(long h, MarkSet marks, long g, int n) {
  if (h < 1 || h > g - 1) {
    throw Error(ErrorCode::kOutOfRange, "delta_h needs 1 <= h <= g-1, got h=" + std::to_string(h));
  }
  marks = sorted_unique(std::move(marks));
  const Side<int> first{marks, h};
  const Side<int> second{complement(all_marks(n), marks), g - h};
  const Side<int>& chosen = canonical_side(first, second);
  return {SymbolKind::kDeltaH, 0, chosen.genus, chosen.marks};
}

ClassSymbol ClassSymbol::pair_rr() { return {SymbolKind::kPairRR, 0, 0, {}}; }

ClassSymbol ClassSymbol::pair_xi_r(int i) { return {SymbolKind::kPairXiR, i, 0, {}}; }

std::string to_string(const ClassSymbol& symbol) {
  switch (symbol.kind) {
    case SymbolKind::kKappaOne:
      return "kappa1";
    case SymbolKind::kPsi:
      return "psi_" + std::to_string(symbol.index);
    case SymbolKind::kDeltaZero:
      return "delta_0";
    case SymbolKind::kDeltaZeroP:
      return "delta_0^{" + join(symbol.marks) + "}";
    case SymbolKind::kDeltaH: {
      std::string out = "delta_" + std::to_string(symbol.h);
      if (!symbol.marks.empty()) out += "^{" + join(symbol.marks) + "}";
      return out;
    }
    case SymbolKind::kPairRR:
      return "<R,R>";
    case SymbolKind::kPairXiR:
      return "<x_" + std::to_string(symbol.index) + ",R>";
  }
  return "?";
}

Rational PicClass::coefficient(const ClassSymbol& symbol) const {
  const auto it = terms_.find(symbol);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PicClass::add(const ClassSymbol& symbol, const Rational& amount) {
  if (amount == 0) return;
  auto [it, inserted] = terms_.try_emplace(symbol, amount);
  if (!inserted) {
    it->second += amount;
    if (it->second == 0) terms_.erase(it);
  }
}

PicClass& PicClass::operator+=(const PicClass& other) {
  for (const auto& [symbol, coefficient] : other.terms_) add(symbol, coefficient);
  return *this;
}

void validate(const LearInput& in) {
  if (in.g < 2) throw Error(ErrorCode::kOutOfRange, "requires g >= 2");
  if (in.n() < 1 || in.n() > kMaxMarks) {
    throw Error(ErrorCode::kOutOfRange, "requires 1 <= n <= " + std::to_string(kMaxMarks));
  }
  long total = 0;
  for (long di : in.d) total += di;
  if (total != (2 * in.g - 2) * in.m) {
    throw Error(ErrorCode::kWeightConstraint,
                "sum(d) = " + std::to_string(total) + " but (2g-2)m = " +
                    std::to_string((2 * in.g - 2) * in.m));
  }
}

std::vector<MarkSet> mark_subsets(int n) {
  std::vector<MarkSet> out;
  const unsigned long count = 1UL << n;
  out.reserve(count);
  for (unsigned long mask = 0; mask < count; ++mask) {
    MarkSet p;
    for (int i = 0; i < n; ++i) {
      if (mask & (1UL << i)) p.push_back(i + 1);
    }
    out.push_back(std::move(p));
  }
  return out;
}

mpz_class a_coeff_zero(const MarkSet& marks, std::span<const long> d, long m) {
  if (sorted_unique(marks).size() < 2) throw Error(ErrorCode::kOutOfRange, "a(P,d) needs |P| >= 2");
  return square(m + partial_sum(marks, d));
}

mpz_class a_coeff(long h, const MarkSet& marks, std::span<const long> d, long m, long g) {
  if (h < 1 || h > g - 1) {
    throw Error(ErrorCode::kOutOfRange,
                "a(P,h,d) needs 1 <= h <= g-1, got h=" + std::to_string(h));
  }
  sorted_unique(marks);
  return square(-(2 * h - 1) * m + partial_sum(marks, d));
}

MultiGraph one_edge_graph() {
  return MultiGraph({"C1", "C2"}, std::vector<std::pair<std::string, std::string>>{{"C1", "C2"}});
}

Divisor stratum_divisor_zero(const MarkSet& marks, std::span<const long> d, long m, long g) {
  const long inside = partial_sum(marks, d);
  const long outside = partial_sum(complement(all_marks(static_cast<int>(d.size())),
                                              sorted_unique(marks)),
                                   d);
  Divisor out;
  out.add("C1", m + inside);
  out.add("C2", -(2 * g - 1) * m + outside);
  return out;
}

Divisor stratum_divisor(long h, const MarkSet& marks, std::span<const long> d, long m, long g) {
  const long inside = partial_sum(marks, d);
  const long outside = partial_sum(complement(all_marks(static_cast<int>(d.size())),
                                              sorted_unique(marks)),
                                   d);
  Divisor out;
  out.add("C1", -(2 * h - 1) * m + inside);
  out.add("C2", -(2 * (g - h) - 1) * m + outside);
  return out;
}

PicClass deligne_self_pairing_expansion(const LearInput& in) {
  validate(in);
  PicClass out(in.g, in.n());
  for (int i = 1; i <= in.n(); ++i) {
    const long di = in.d[static_cast<std::size_t>(i - 1)];
    out.add(ClassSymbol::pair_xi_r(i), -(di * di + 2 * in.m * di));
  }
  out.add(ClassSymbol::pair_rr(), in.m * in.m);
  return out;
}

PicClass lear_class_deligne_basis(const LearInput& in) {
  validate(in);
  PicClass out(in.g, in.n());
  const PicClass pairing = deligne_self_pairing_expansion(in);
  for (const auto& [symbol, coefficient] : pairing.terms()) {
    out.add(symbol, -coefficient);
  }
  for (const MarkSet& p : mark_subsets(in.n())) {
    if (p.size() < 2) continue;
    out.add(ClassSymbol::delta_zero_p(p), -Rational(a_coeff_zero(p, in.d, in.m)));
  }
  add_delta_h_terms(out, in);
  return out;
}

PicClass lear_class_kappa_psi(const LearInput& in) {
  validate(in);
  PicClass out(in.g, in.n());
  out.add(ClassSymbol::kappa_one(), -in.m * in.m);
  for (int i = 1; i <= in.n(); ++i) {
    const long di = in.d[static_cast<std::size_t>(i - 1)];
    out.add(ClassSymbol::psi(i), di * di + 2 * in.m * di);
  }
  for (const MarkSet& p : mark_subsets(in.n())) {
    if (p.size() < 2) continue;
    mpz_class cross = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
      for (std::size_t k = j + 1; k < p.size(); ++k) {
        cross += mpz_class(in.d[static_cast<std::size_t>(p[j] - 1)]) *
                 in.d[static_cast<std::size_t>(p[k] - 1)];
      }
    }
    out.add(ClassSymbol::delta_zero_p(p), Rational(-2 * cross));
  }
  add_delta_h_terms(out, in);
  return out;
}

PicClass to_kappa_psi(const PicClass& deligne) {
  PicClass out(deligne.g(), deligne.n());
  const auto subsets = mark_subsets(deligne.n());
  for (const auto& [symbol, coefficient] : deligne.terms()) {
    switch (symbol.kind) {
      case SymbolKind::kPairRR:
        out.add(ClassSymbol::kappa_one(), coefficient);
        for (const MarkSet& p : subsets) {
          if (p.size() >= 2) out.add(ClassSymbol::delta_zero_p(p), -coefficient);
        }
        break;
      case SymbolKind::kPairXiR:
        out.add(ClassSymbol::psi(symbol.index), coefficient);
        for (const MarkSet& p : subsets) {
          if (p.size() >= 2 && std::binary_search(p.begin(), p.end(), symbol.index)) {
            out.add(ClassSymbol::delta_zero_p(p), coefficient);
          }
        }
        break;
      default:
        out.add(symbol, coefficient);
    }
  }
  return out;
}

}  // namespace neron
