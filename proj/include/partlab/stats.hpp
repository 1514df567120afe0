#pragma once

// Series-backed tables of every partition statistic in the library.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "partlab/series.hpp"

namespace partlab {

enum class StatId { a_k, a_kp, b_k, c_k, M_ell, MP_ell, Q, p, c };

std::string_view stat_name(StatId id);
std::optional<StatId> parse_stat_name(std::string_view name);

struct StatParams {
  std::optional<unsigned> k;
  std::optional<unsigned> p;
  std::optional<unsigned> ell;
  bool operator==(const StatParams&) const = default;
};

/// Values of one statistic for n = 0..n_max.
struct StatTable {
  StatId id = StatId::p;
  StatParams params;
  std::vector<BigInt> values;

  std::size_t n_max() const { return values.size() - 1; }
  /// Entry n; negative n reads as 0, n past the table throws.
  BigInt at(long long n) const;
  /// "stat/k=..,p=..,ell=.." key used by exports.
  std::string key() const;
  bool operator==(const StatTable&) const = default;
};

/// Throws std::invalid_argument when `params` do not fit `id`
/// (k >= 1, 0 <= p <= k-1, ell >= 1, no stray parameters).
void validate_params(StatId id, const StatParams& params);

StatTable partition_table(std::size_t n_max);
StatTable distinct_table(std::size_t n_max);

StatTable b_k_series(unsigned k, std::size_t n_max);
StatTable a_k_series(unsigned k, std::size_t n_max);
StatTable a_kp_series(unsigned k, unsigned p, std::size_t n_max);

/// c_k(n) = sum_{j=1}^{floor(n/k)} j Q((n-kj)/2), Q of a non-integer being 0
/// and Q(0) = 1.
StatTable c_k_table(unsigned k, std::size_t n_max);
/// Same sum over a caller-supplied Q table (must cover n_max/2).
StatTable c_k_table(unsigned k, std::size_t n_max, const StatTable& distinct);
/// c(n) for n = 0..n_max, through c(n) = c_2(2n).
StatTable c_table(std::size_t n_max);

/// M_ell via the truncated pentagonal theorem:
/// (-1)^(ell-1) (pentagonal_series(ell) / (q;q)_inf - 1). Cross-checked
/// against the Gaussian-binomial sum; disagreement throws std::logic_error.
StatTable M_ell_series(unsigned ell, std::size_t n_max);
/// sum_{m>=ell} q^(C(ell,2)+(ell+1)m) / (q;q)_m * [m-1 choose ell-1].
StatTable M_ell_gaussian(unsigned ell, std::size_t n_max);
/// Alternating differences of p(n); M_ell(0) is 0.
StatTable M_ell_pdiff(unsigned ell, std::size_t n_max);

/// (-1)^(ell-1) ((-q;q^2)_inf / (q^2;q^2)_inf * theta_truncated(ell) - 1).
/// A negative entry or nonzero constant term throws std::logic_error.
StatTable MP_ell_series(unsigned ell, std::size_t n_max);

/// n/k when k divides n, else 0.
BigInt divisor_indicator_term(long long n, unsigned k);

}  // namespace partlab
