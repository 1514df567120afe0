#pragma once

// Identity sweeps. Each suite evaluates both sides of an identity cell by
// cell with exact integers and collects every failing cell; nothing here
// throws on a failed identity.

#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partlab/enumerate.hpp"
#include "partlab/stats.hpp"

namespace partlab {

enum class IdentityId {
  ThmGF_a,
  ThmGF_ap,
  ThmGF_b,
  ThmComb_1,
  ThmComb_2,
  ThmComb_3,
  Trunc_eq,
  Trunc_nonneg,
  Trunc_infsum,
  PfT2,
  M_gauss,
  M_enum,
  MP_enum,
  Gen17_eq,
  Gen17_nonneg,
  Gen17_infsum,
  Gen17_displayed,
  Gen17_displayed_infsum,
  BadExponent,
  Bridge,
  P1,
  P2,
  P3,
  Euler,
};

std::string_view identity_name(IdentityId id);

struct CaseParams {
  long long n = 0;
  std::optional<unsigned> k;
  std::optional<unsigned> p;
  std::optional<unsigned> ell;
  bool operator==(const CaseParams&) const = default;
};

/// Both sides of one identity cell. For inequality cells `rhs` is 0 and the
/// cell passes when lhs >= 0.
struct IdentityCase {
  IdentityId id = IdentityId::Euler;
  CaseParams params;
  BigInt lhs;
  BigInt rhs;
  bool pass = true;
};

/// Orders by identity, then k, p, ell, n.
bool case_less(const IdentityCase& a, const IdentityCase& b);

struct IntRange {
  unsigned lo = 1;
  unsigned hi = 0;
  bool empty() const { return hi < lo; }
  bool operator==(const IntRange&) const = default;
};

struct SweepRange {
  std::size_t n_max = 0;
  std::optional<IntRange> k;
  std::optional<IntRange> ell;
  std::string describe() const;
};

struct VerificationReport {
  std::string suite;
  SweepRange range;
  std::size_t total = 0;
  std::vector<IdentityCase> failures;
  std::chrono::nanoseconds wall{0};

  bool passed() const { return failures.empty(); }
  /// Smallest failing cell under case_less, if any.
  const IdentityCase* first_failure() const;

  void expect_equal(IdentityId id, CaseParams params, BigInt lhs, BigInt rhs);
  void expect_nonnegative(IdentityId id, CaseParams params, BigInt value);
  /// Sorts failures so reports compare equal however they were produced.
  void finalize();
};

struct VerifyConfig {
  std::size_t n_max = 60;
  IntRange k{1, 4};
  IntRange ell{1, 3};
  unsigned enum_cap = kDefaultPartitionCap;
  unsigned subset_cap = kDefaultSubsetCap;
  /// Worker threads for run_all; 0 picks the hardware count.
  unsigned threads = 1;

  /// Series order needed for shifted lookups such as b_k(n+k-p).
  std::size_t series_order() const;
  /// Throws std::invalid_argument on bad ranges.
  void validate() const;
};

/// Every series table the suites read, built once per configuration.
struct TableSet {
  std::size_t order = 0;
  StatTable p;
  StatTable Q;
  std::map<unsigned, StatTable> b;
  std::map<unsigned, StatTable> c;
  std::map<std::pair<unsigned, unsigned>, StatTable> a;  // keyed by (k, p)
  std::map<unsigned, StatTable> M;
  std::map<unsigned, StatTable> MP;

  static TableSet build(std::size_t order, IntRange k, IntRange ell, unsigned threads = 1);
};

// Single-cell building blocks, shared by the suites and the tests.

/// (-1)^(l-1) ( sum_{j=-(l-1)}^{l} (-1)^j b_k(n - g_j) - [k|n] n/k ).
BigInt trunc_lhs(const StatTable& b_k, long long n, unsigned k, unsigned ell);
/// sum_{j=1}^{floor(n/k)} j M_l(n - kj).
BigInt trunc_rhs(const StatTable& M_ell, long long n, unsigned k);
/// sum over all j in Z of (-1)^j b_k(n - g_j).
BigInt pentagonal_bilateral_sum(const StatTable& b_k, long long n);

/// Which c_k(n) term the truncated-theta identity subtracts.
enum class Gen17Form {
  /// c_k(n) itself, the coefficient of q^k/(1-q^k)^2 (-q^2;q^2)_inf.
  Derived,
  /// c_k(n) only when k divides n, as typeset in the theorem statement.
  Displayed,
};
enum class ThetaSign {
  Triangular,  // (-1)^(j(j+1)/2)
  Plain,       // (-1)^j, the uncorrected exponent
};
BigInt gen17_lhs(const StatTable& b_k, const StatTable& c_k, long long n, unsigned k, unsigned ell,
                 Gen17Form form, ThetaSign sign = ThetaSign::Triangular);
/// sum_{j=0}^{n} c_k(j) MP_l(n-j).
BigInt gen17_rhs(const StatTable& c_k, const StatTable& MP_ell, long long n);
/// sum_{j>=0} (-1)^(j(j+1)/2) b_k(n - T_j).
BigInt theta_infinite_sum(const StatTable& b_k, long long n);

// Suites. n always runs over 1..n_max.

/// Series a_k, a_{k,p}, b_k against the enumeration oracles.
VerificationReport verify_gf(IntRange k, std::size_t n_max, unsigned threads = 1);

/// a_k = k b_k, a_{k,p} = (k-p) b_k(n-p) + p b_k(n+k-p), and
/// a_1(n) = b_2(n+1) + 2 b_2(n) + b_2(n-1).
VerificationReport verify_comb(IntRange k, std::size_t n_max);
VerificationReport verify_comb(const TableSet& t, IntRange k, std::size_t n_max);

VerificationReport verify_trunc(unsigned k, unsigned ell, std::size_t n_max);
VerificationReport verify_trunc(const TableSet& t, IntRange k, IntRange ell, std::size_t n_max);

/// Nonnegativity for every ell <= ell_max and the bilateral-sum identity.
VerificationReport verify_trunc_corollaries(unsigned k, unsigned ell_max, std::size_t n_max);
VerificationReport verify_trunc_corollaries(const TableSet& t, IntRange k, IntRange ell,
                                            std::size_t n_max);

/// M_ell by the pentagonal rearrangement, the Gaussian-binomial sum and the
/// p(n) differences; plus the enumeration oracle for n <= enum_cap.
VerificationReport verify_m_routes(IntRange ell, std::size_t n_max, unsigned enum_cap);
VerificationReport verify_m_routes(const TableSet& t, IntRange ell, std::size_t n_max,
                                   unsigned enum_cap);

/// MP_ell enumeration (odd-parts reading) against its series.
VerificationReport verify_mp_enum(IntRange ell, std::size_t n_max);
VerificationReport verify_mp_enum(const TableSet& t, IntRange ell, std::size_t n_max);

/// Truncated-theta identity, its nonnegativity and infinite-sum corollaries.
VerificationReport verify_gen17(unsigned k, unsigned ell, std::size_t n_max,
                                Gen17Form form = Gen17Form::Derived);
VerificationReport verify_gen17(const TableSet& t, IntRange k, IntRange ell, std::size_t n_max,
                                Gen17Form form = Gen17Form::Derived);

/// Runs the theorem with its typeset [k|n] c_k(n) term and reports every
/// cell where that form breaks; failures are findings, not errors.
VerificationReport find_gen17_displayed_discrepancies(IntRange k, IntRange ell, std::size_t n_max);

struct BadExponentResult {
  /// Smallest failing (n, ell) of the uncorrected identity, by n then ell.
  std::optional<std::pair<long long, unsigned>> witness;
  /// First failing n for each ell that fails at all.
  std::map<unsigned, long long> first_failure_by_ell;
  VerificationReport uncorrected;
  VerificationReport corrected;
};

/// The k = 2 identity with c(n/2) and sum c(j) MP_l(n-2j), once with the
/// exponent j(j+1)/2 and once with j.
BadExponentResult find_bad_exponent_counterexample(std::size_t n_max, IntRange ell = {1, 3});

/// c_2(2n) against exhaustive subset counting.
VerificationReport verify_bridge(std::size_t n_max, unsigned subset_cap = kDefaultSubsetCap);

/// Overlined-part sum over P_k(n) = a_k(n); |A_k(n)| against the series
/// q^k/(1-q^k)^2/(q;q)_inf; overlined-part sum = k |A_k(n)|.
VerificationReport verify_overpartition_identities(unsigned k, std::size_t n_max);
VerificationReport verify_overpartition_identities(IntRange k, std::size_t n_max,
                                                   unsigned threads = 1);

/// (q;q)_inf as a product against the bilateral pentagonal sum.
VerificationReport verify_euler(std::size_t order);

/// Suite names run_all executes, in report order.
std::vector<std::string> suite_names();

std::vector<VerificationReport> run_all(const VerifyConfig& config);
/// As above over caller-provided tables; used to inject faults.
std::vector<VerificationReport> run_all(const VerifyConfig& config, const TableSet& tables);

}  // namespace partlab
