#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "rankinv/error.hpp"

namespace rankinv {

/// Exact binomial coefficient, or nullopt when it does not fit in 64 bits.
inline std::optional<std::uint64_t> binomial_checked(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // acc * (n - k + i) / i stays integral at every step
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(acc);
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  auto v = binomial_checked(n, k);
  if (!v) throw BudgetError("binomial coefficient overflows 64 bits");
  return *v;
}

/// C(a, 2) with the convention C(a, 2) = 0 for a < 2.
inline std::uint64_t binom2(std::int64_t a) {
  return a < 2 ? 0 : static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(a - 1) / 2;
}

inline std::optional<std::uint64_t> ipow_checked(std::uint64_t base, std::uint64_t exp) {
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(acc);
}

inline std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
  auto v = ipow_checked(base, exp);
  if (!v) throw BudgetError("integer power overflows 64 bits");
  return *v;
}

/// Exponent vectors of all degree-`degree` monomials in `vars` variables,
/// graded lexicographic order: x1^d first, xk^d last.
inline std::vector<std::vector<unsigned>> monomial_exponents(unsigned vars, unsigned degree) {
  std::vector<std::vector<unsigned>> out;
  if (vars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> cur(vars, 0);
  auto rec = [&](auto&& self, unsigned pos, unsigned left) -> void {
    if (pos + 1 == vars) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
  };
  rec(rec, 0, degree);
  return out;
}

}  // namespace rankinv
