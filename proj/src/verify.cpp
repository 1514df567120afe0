#include "partlab/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "partlab/parallel.hpp"

namespace partlab {

namespace {

constexpr std::array<std::pair<IdentityId, std::string_view>, 24> kIdentityNames{{
    {IdentityId::ThmGF_a, "ThmGF-a"},
    {IdentityId::ThmGF_ap, "ThmGF-ap"},
    {IdentityId::ThmGF_b, "ThmGF-b"},
    {IdentityId::ThmComb_1, "ThmComb-1"},
    {IdentityId::ThmComb_2, "ThmComb-2"},
    {IdentityId::ThmComb_3, "ThmComb-3"},
    {IdentityId::Trunc_eq, "Trunc-eq"},
    {IdentityId::Trunc_nonneg, "Trunc-nonneg"},
    {IdentityId::Trunc_infsum, "Trunc-infsum"},
    {IdentityId::PfT2, "PfT2"},
    {IdentityId::M_gauss, "M-gauss"},
    {IdentityId::M_enum, "M-enum"},
    {IdentityId::MP_enum, "MP-enum"},
    {IdentityId::Gen17_eq, "Gen17-eq"},
    {IdentityId::Gen17_nonneg, "Gen17-nonneg"},
    {IdentityId::Gen17_infsum, "Gen17-infsum"},
    {IdentityId::Gen17_displayed, "Gen17-displayed"},
    {IdentityId::Gen17_displayed_infsum, "Gen17-displayed-infsum"},
    {IdentityId::BadExponent, "BadExponent"},
    {IdentityId::Bridge, "Bridge"},
    {IdentityId::P1, "P1"},
    {IdentityId::P2, "P2"},
    {IdentityId::P3, "P3"},
    {IdentityId::Euler, "Euler"},
}};

using Clock = std::chrono::steady_clock;

// Runs `body` against a fresh report and stamps name, range and wall time.
VerificationReport timed(std::string suite, SweepRange range,
                         const std::function<void(VerificationReport&)>& body) {
  VerificationReport r;
  r.suite = std::move(suite);
  r.range = range;
  const auto start = Clock::now();
  body(r);
  r.finalize();
  r.wall = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return r;
}

BigInt sign_of_ell(unsigned ell) { return (ell % 2 == 1) ? 1 : -1; }  // (-1)^(ell-1)

long long pentagonal(long long j) { return j * (3 * j - 1) / 2; }
long long triangular(long long j) { return j * (j + 1) / 2; }

template <typename Map, typename Key>
const StatTable& lookup(const Map& m, const Key& key, const char* what) {
  auto it = m.find(key);
  if (it == m.end()) throw std::invalid_argument(std::string("table set lacks ") + what);
  return it->second;
}

void require_order(const TableSet& t, std::size_t needed) {
  if (t.order < needed)
    throw std::invalid_argument("table order " + std::to_string(t.order) + " below required " +
                                std::to_string(needed));
}

std::vector<unsigned> values_of(IntRange r) {
  std::vector<unsigned> out;
  for (unsigned v = r.lo; v <= r.hi && !r.empty(); ++v) out.push_back(v);
  return out;
}

}  // namespace

std::string_view identity_name(IdentityId id) {
  for (const auto& [iid, name] : kIdentityNames)
    if (iid == id) return name;
  return "?";
}

bool case_less(const IdentityCase& a, const IdentityCase& b) {
  auto key = [](const IdentityCase& c) {
    return std::make_tuple(static_cast<int>(c.id), c.params.k.value_or(0), c.params.p.value_or(0),
                           c.params.ell.value_or(0), c.params.n);
  };
  return key(a) < key(b);
}

std::string SweepRange::describe() const {
  std::ostringstream os;
  os << "n<=" << n_max;
  if (k) os << " k=" << k->lo << ".." << k->hi;
  if (ell) os << " ell=" << ell->lo << ".." << ell->hi;
  return os.str();
}

const IdentityCase* VerificationReport::first_failure() const {
  if (failures.empty()) return nullptr;
  return &*std::min_element(failures.begin(), failures.end(), case_less);
}

void VerificationReport::expect_equal(IdentityId id, CaseParams params, BigInt lhs, BigInt rhs) {
  ++total;
  if (lhs != rhs) failures.push_back({id, params, std::move(lhs), std::move(rhs), false});
}

void VerificationReport::expect_nonnegative(IdentityId id, CaseParams params, BigInt value) {
  ++total;
  if (value < 0) failures.push_back({id, params, std::move(value), 0, false});
}

void VerificationReport::finalize() { std::stable_sort(failures.begin(), failures.end(), case_less); }

std::size_t VerifyConfig::series_order() const {
  return n_max + (k.empty() ? 0 : k.hi) + 1;
}

void VerifyConfig::validate() const {
  if (!k.empty() && k.lo < 1) throw std::invalid_argument("k range must start at 1 or above");
  if (!ell.empty() && ell.lo < 1) throw std::invalid_argument("ell range must start at 1 or above");
  if (!k.empty() && n_max < k.hi)
    throw std::invalid_argument("n-max must be at least the largest k");
}

TableSet TableSet::build(std::size_t order, IntRange k, IntRange ell, unsigned threads) {
  TableSet t;
  t.order = order;
  const auto ks = values_of(k);
  const auto ells = values_of(ell);

  // Create every slot first; the tasks then only write through stable
  // pointers, never touching the maps themselves.
  std::vector<std::pair<StatTable*, std::function<StatTable()>>> tasks;
  tasks.emplace_back(&t.p, [order] { return partition_table(order); });
  tasks.emplace_back(&t.Q, [order] { return distinct_table(order); });
  for (unsigned kk : ks) {
    tasks.emplace_back(&t.b[kk], [kk, order] { return b_k_series(kk, order); });
    tasks.emplace_back(&t.c[kk], [kk, order] { return c_k_table(kk, order); });
    for (unsigned p = 0; p < kk; ++p)
      tasks.emplace_back(&t.a[{kk, p}], [kk, p, order] { return a_kp_series(kk, p, order); });
  }
  for (unsigned l : ells) {
    tasks.emplace_back(&t.M[l], [l, order] { return M_ell_series(l, order); });
    tasks.emplace_back(&t.MP[l], [l, order] { return MP_ell_series(l, order); });
  }
  parallel_for(tasks.size(), threads, [&](std::size_t i) { *tasks[i].first = tasks[i].second(); });
  return t;
}

BigInt trunc_lhs(const StatTable& b_k, long long n, unsigned k, unsigned ell) {
  BigInt sum = 0;
  for (long long j = -(static_cast<long long>(ell) - 1); j <= static_cast<long long>(ell); ++j) {
    const BigInt term = b_k.at(n - pentagonal(j));
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sign_of_ell(ell) * (sum - divisor_indicator_term(n, k));
}

BigInt trunc_rhs(const StatTable& M_ell, long long n, unsigned k) {
  BigInt sum = 0;
  for (long long j = 1; j <= n / k; ++j) sum += BigInt(static_cast<long>(j)) * M_ell.at(n - k * j);
  return sum;
}

BigInt pentagonal_bilateral_sum(const StatTable& b_k, long long n) {
  BigInt sum = b_k.at(n);
  for (long long j = 1; pentagonal(j) <= n; ++j) {
    const BigInt pair = b_k.at(n - pentagonal(j)) + b_k.at(n - pentagonal(-j));
    if (j % 2 == 0)
      sum += pair;
    else
      sum -= pair;
  }
  return sum;
}

BigInt gen17_lhs(const StatTable& b_k, const StatTable& c_k, long long n, unsigned k, unsigned ell,
                 Gen17Form form, ThetaSign sign) {
  BigInt sum = 0;
  for (long long j = 0; j < 2 * static_cast<long long>(ell); ++j) {
    const long long t = triangular(j);
    const long long exponent = sign == ThetaSign::Triangular ? t : j;
    const BigInt term = b_k.at(n - t);
    if (exponent % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  const bool include = form == Gen17Form::Derived || n % k == 0;
  if (include) sum -= c_k.at(n);
  return sign_of_ell(ell) * sum;
}

BigInt gen17_rhs(const StatTable& c_k, const StatTable& MP_ell, long long n) {
  BigInt sum = 0;
  for (long long j = 0; j <= n; ++j) {
    const auto& cj = c_k.values.at(static_cast<std::size_t>(j));
    if (sgn(cj) == 0) continue;
    sum += cj * MP_ell.at(n - j);
  }
  return sum;
}

BigInt theta_infinite_sum(const StatTable& b_k, long long n) {
  BigInt sum = 0;
  for (long long j = 0; triangular(j) <= n; ++j) {
    const long long t = triangular(j);
    if (t % 2 == 0)
      sum += b_k.at(n - t);
    else
      sum -= b_k.at(n - t);
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Suites

namespace {

VerificationReport verify_gf_tables(const TableSet& t, IntRange k, std::size_t n_max,
                                    unsigned threads) {
  return timed("gf", {n_max, k, std::nullopt}, [&](VerificationReport& r) {
    if (k.empty() || n_max == 0) return;
    require_order(t, n_max);
    std::vector<PartitionTally> tallies(n_max + 1);
    parallel_for(n_max, threads, [&](std::size_t i) {
      const auto n = static_cast<unsigned>(i + 1);
      tallies[n] = tally_statistics(n, k.hi);
    });
    for (unsigned kk : values_of(k)) {
      const auto& a0 = lookup(t.a, std::pair{kk, 0U}, "a_kp");
      const auto& b = lookup(t.b, kk, "b_k");
      for (std::size_t n = 1; n <= n_max; ++n) {
        const auto nn = static_cast<long long>(n);
        r.expect_equal(IdentityId::ThmGF_a, {nn, kk, {}, {}}, a0.at(nn), tallies[n].a[kk][0]);
        r.expect_equal(IdentityId::ThmGF_b, {nn, kk, {}, {}}, b.at(nn), tallies[n].b[kk]);
        for (unsigned p = 0; p < kk; ++p) {
          const auto& ap = lookup(t.a, std::pair{kk, p}, "a_kp");
          r.expect_equal(IdentityId::ThmGF_ap, {nn, kk, p, {}}, ap.at(nn), tallies[n].a[kk][p]);
        }
      }
    }
  });
}

VerificationReport overpartition_suite(IntRange k, std::size_t n_max, unsigned threads) {
  return timed("overpartition", {n_max, k, std::nullopt}, [&](VerificationReport& r) {
    const auto ks = values_of(k);
    if (ks.empty() || n_max == 0) return;
    const auto P = invert(euler_product(n_max));

    std::vector<OverpartitionTally> marks(n_max + 1);
    std::vector<PartitionTally> stats(n_max + 1);
    parallel_for(n_max, threads, [&](std::size_t i) {
      const auto n = static_cast<unsigned>(i + 1);
      marks[n] = overpartition_tally(n, k.hi);
      stats[n] = tally_statistics(n, k.hi);
    });

    for (unsigned kk : ks) {
      // q^k/(1-q^k) * 1/(1-q^k) * 1/(q;q)_inf
      const auto geometric = invert(make_one(n_max) - monomial(1, kk, n_max));
      const auto counting = mul(mul(monomial(1, kk, n_max), mul(geometric, geometric)), P);
      for (std::size_t n = 1; n <= n_max; ++n) {
        const BigInt over_sum = static_cast<unsigned long>(marks[n].overlined_sum[kk]);
        const BigInt a_count = static_cast<unsigned long>(marks[n].a_count[kk]);
        const CaseParams at{static_cast<long long>(n), kk, {}, {}};
        r.expect_equal(IdentityId::P1, at, over_sum, stats[n].a[kk][0]);
        r.expect_equal(IdentityId::P2, at, a_count, counting[n]);
        r.expect_equal(IdentityId::P3, at, over_sum, BigInt(kk) * a_count);
      }
    }
  });
}

}  // namespace

VerificationReport verify_gf(IntRange k, std::size_t n_max, unsigned threads) {
  const auto t = TableSet::build(n_max, k, {1, 0}, threads);
  return verify_gf_tables(t, k, n_max, threads);
}

VerificationReport verify_comb(IntRange k, std::size_t n_max) {
  // a_1 and b_2 are always built for the a(n) identity.
  const auto t = TableSet::build(n_max + std::max(k.hi, 2U) + 1, {1, std::max(k.hi, 2U)}, {1, 0});
  return verify_comb(t, k, n_max);
}

VerificationReport verify_comb(const TableSet& t, IntRange k, std::size_t n_max) {
  return timed("comb", {n_max, k, std::nullopt}, [&](VerificationReport& r) {
    if (k.empty()) return;
    require_order(t, n_max + k.hi + 1);
    for (unsigned kk : values_of(k)) {
      const auto& b = lookup(t.b, kk, "b_k");
      for (long long n = 1; n <= static_cast<long long>(n_max); ++n) {
        r.expect_equal(IdentityId::ThmComb_1, {n, kk, {}, {}}, lookup(t.a, std::pair{kk, 0U}, "a_kp").at(n),
                       BigInt(kk) * b.at(n));
        for (unsigned p = 1; p < kk; ++p) {
          const BigInt rhs = BigInt(kk - p) * b.at(n - p) + BigInt(p) * b.at(n + kk - p);
          r.expect_equal(IdentityId::ThmComb_2, {n, kk, p, {}}, lookup(t.a, std::pair{kk, p}, "a_kp").at(n), rhs);
        }
      }
    }
    // a(n) = b(n+1) + 2b(n) + b(n-1) needs a_1 and b_2.
    if (t.a.contains({1U, 0U}) && t.b.contains(2U)) {
      const auto& a1 = t.a.at({1U, 0U});
      const auto& b2 = t.b.at(2U);
      for (long long n = 1; n <= static_cast<long long>(n_max); ++n)
        r.expect_equal(IdentityId::ThmComb_3, {n, 1U, {}, {}}, a1.at(n),
                       b2.at(n + 1) + 2 * b2.at(n) + b2.at(n - 1));
    }
  });
}

VerificationReport verify_trunc(unsigned k, unsigned ell, std::size_t n_max) {
  const auto t = TableSet::build(n_max, {k, k}, {ell, ell});
  return verify_trunc(t, {k, k}, {ell, ell}, n_max);
}

VerificationReport verify_trunc(const TableSet& t, IntRange k, IntRange ell, std::size_t n_max) {
  return timed("trunc", {n_max, k, ell}, [&](VerificationReport& r) {
    require_order(t, n_max);
    for (unsigned kk : values_of(k)) {
      const auto& b = lookup(t.b, kk, "b_k");
      for (unsigned l : values_of(ell)) {
        const auto& M = lookup(t.M, l, "M_ell");
        for (long long n = 1; n <= static_cast<long long>(n_max); ++n)
          r.expect_equal(IdentityId::Trunc_eq, {n, kk, {}, l}, trunc_lhs(b, n, kk, l), trunc_rhs(M, n, kk));
      }
    }
  });
}

VerificationReport verify_trunc_corollaries(unsigned k, unsigned ell_max, std::size_t n_max) {
  const auto t = TableSet::build(n_max, {k, k}, {1, 0});
  return verify_trunc_corollaries(t, {k, k}, {1, ell_max}, n_max);
}

VerificationReport verify_trunc_corollaries(const TableSet& t, IntRange k, IntRange ell,
                                            std::size_t n_max) {
  return timed("trunc-cor", {n_max, k, ell}, [&](VerificationReport& r) {
    require_order(t, n_max);
    for (unsigned kk : values_of(k)) {
      const auto& b = lookup(t.b, kk, "b_k");
      for (unsigned l : values_of(ell))
        for (long long n = 1; n <= static_cast<long long>(n_max); ++n)
          r.expect_nonnegative(IdentityId::Trunc_nonneg, {n, kk, {}, l}, trunc_lhs(b, n, kk, l));
      for (long long n = 1; n <= static_cast<long long>(n_max); ++n)
        r.expect_equal(IdentityId::Trunc_infsum, {n, kk, {}, {}}, pentagonal_bilateral_sum(b, n),
                       divisor_indicator_term(n, kk));
    }
  });
}

VerificationReport verify_m_routes(IntRange ell, std::size_t n_max, unsigned enum_cap) {
  const auto t = TableSet::build(n_max, {1, 0}, ell);
  return verify_m_routes(t, ell, n_max, enum_cap);
}

VerificationReport verify_m_routes(const TableSet& t, IntRange ell, std::size_t n_max,
                                   unsigned enum_cap) {
  return timed("m-routes", {n_max, std::nullopt, ell}, [&](VerificationReport& r) {
    if (ell.empty()) return;
    require_order(t, n_max);
    const std::size_t enum_max = std::min<std::size_t>(n_max, enum_cap);
    std::vector<std::vector<BigInt>> enumerated(enum_max + 1);
    for (std::size_t n = 1; n <= enum_max; ++n)
      enumerated[n] = M_ell_enum_all(static_cast<unsigned>(n), ell.hi);
    for (unsigned l : values_of(ell)) {
      const auto& M = lookup(t.M, l, "M_ell");
      const auto gauss = M_ell_gaussian(l, n_max);
      const auto pdiff = M_ell_pdiff(l, n_max);
      for (long long n = 1; n <= static_cast<long long>(n_max); ++n) {
        r.expect_equal(IdentityId::M_gauss, {n, {}, {}, l}, M.at(n), gauss.at(n));
        r.expect_equal(IdentityId::PfT2, {n, {}, {}, l}, M.at(n), pdiff.at(n));
        if (static_cast<std::size_t>(n) <= enum_max)
          r.expect_equal(IdentityId::M_enum, {n, {}, {}, l}, M.at(n),
                         enumerated[static_cast<std::size_t>(n)][l]);
      }
    }
  });
}

VerificationReport verify_mp_enum(IntRange ell, std::size_t n_max) {
  const auto t = TableSet::build(n_max, {1, 0}, ell);
  return verify_mp_enum(t, ell, n_max);
}

VerificationReport verify_mp_enum(const TableSet& t, IntRange ell, std::size_t n_max) {
  return timed("mp-enum", {n_max, std::nullopt, ell}, [&](VerificationReport& r) {
    if (ell.empty()) return;
    require_order(t, n_max);
    for (long long n = 1; n <= static_cast<long long>(n_max); ++n) {
      const auto counts = MP_ell_enum_all(static_cast<unsigned>(n), ell.hi);
      for (unsigned l : values_of(ell))
        r.expect_equal(IdentityId::MP_enum, {n, {}, {}, l}, lookup(t.MP, l, "MP_ell").at(n), counts[l]);
    }
  });
}

VerificationReport verify_gen17(unsigned k, unsigned ell, std::size_t n_max, Gen17Form form) {
  const auto t = TableSet::build(n_max, {k, k}, {ell, ell});
  return verify_gen17(t, {k, k}, {ell, ell}, n_max, form);
}

VerificationReport verify_gen17(const TableSet& t, IntRange k, IntRange ell, std::size_t n_max,
                                Gen17Form form) {
  const bool derived = form == Gen17Form::Derived;
  return timed(derived ? "gen17" : "gen17-displayed", {n_max, k, ell}, [&](VerificationReport& r) {
    require_order(t, n_max);
    const auto eq_id = derived ? IdentityId::Gen17_eq : IdentityId::Gen17_displayed;
    const auto inf_id = derived ? IdentityId::Gen17_infsum : IdentityId::Gen17_displayed_infsum;
    for (unsigned kk : values_of(k)) {
      const auto& b = lookup(t.b, kk, "b_k");
      const auto& c = lookup(t.c, kk, "c_k");
      for (unsigned l : values_of(ell)) {
        const auto& MP = lookup(t.MP, l, "MP_ell");
        for (long long n = 1; n <= static_cast<long long>(n_max); ++n) {
          const BigInt lhs = gen17_lhs(b, c, n, kk, l, form);
          r.expect_equal(eq_id, {n, kk, {}, l}, lhs, gen17_rhs(c, MP, n));
          if (derived) r.expect_nonnegative(IdentityId::Gen17_nonneg, {n, kk, {}, l}, lhs);
        }
      }
      for (long long n = 1; n <= static_cast<long long>(n_max); ++n) {
        const BigInt expected = (derived || n % kk == 0) ? c.at(n) : BigInt(0);
        r.expect_equal(inf_id, {n, kk, {}, {}}, theta_infinite_sum(b, n), expected);
      }
    }
  });
}

VerificationReport find_gen17_displayed_discrepancies(IntRange k, IntRange ell, std::size_t n_max) {
  const auto t = TableSet::build(n_max, k, ell);
  return verify_gen17(t, k, ell, n_max, Gen17Form::Displayed);
}

BadExponentResult find_bad_exponent_counterexample(std::size_t n_max, IntRange ell) {
  const auto b = b_k_series(2, n_max);
  const auto c = c_table(n_max / 2 + 1);

  std::map<unsigned, StatTable> mp;
  for (unsigned l : values_of(ell)) mp.emplace(l, MP_ell_series(l, n_max));

  auto sweep = [&](ThetaSign sign, const char* name) {
    return timed(name, {n_max, IntRange{2, 2}, ell}, [&](VerificationReport& r) {
      for (unsigned l : values_of(ell)) {
        const auto& MP = mp.at(l);
        for (long long n = 1; n <= static_cast<long long>(n_max); ++n) {
          BigInt sum = 0;
          for (long long j = 0; j < 2 * static_cast<long long>(l); ++j) {
            const long long t = triangular(j);
            const long long exponent = sign == ThetaSign::Triangular ? t : j;
            if (exponent % 2 == 0)
              sum += b.at(n - t);
            else
              sum -= b.at(n - t);
          }
          if (n % 2 == 0) sum -= c.at(n / 2);
          BigInt rhs = 0;
          for (long long j = 1; j <= n / 2; ++j) rhs += c.at(j) * MP.at(n - 2 * j);
          r.expect_equal(IdentityId::BadExponent, {n, 2U, {}, l}, sign_of_ell(l) * sum, rhs);
        }
      }
    });
  };

  BadExponentResult out;
  out.uncorrected = sweep(ThetaSign::Plain, "bad-exponent");
  out.corrected = sweep(ThetaSign::Triangular, "bad-exponent-corrected");
  for (const auto& f : out.uncorrected.failures) {
    const unsigned l = *f.params.ell;
    const long long n = f.params.n;
    if (!out.first_failure_by_ell.contains(l) || n < out.first_failure_by_ell[l])
      out.first_failure_by_ell[l] = n;
    if (!out.witness || std::pair{n, l} < *out.witness) out.witness = std::pair{n, l};
  }
  return out;
}

VerificationReport verify_bridge(std::size_t n_max, unsigned subset_cap) {
  const std::size_t top = std::min<std::size_t>(n_max, subset_cap);
  return timed("bridge", {top, std::nullopt, std::nullopt}, [&](VerificationReport& r) {
    const auto c = c_table(top);
    for (std::size_t n = 1; n <= top; ++n)
      r.expect_equal(IdentityId::Bridge, {static_cast<long long>(n), 2U, {}, {}}, c.values[n],
                     c_subset_oracle(static_cast<unsigned>(n), subset_cap));
  });
}

VerificationReport verify_overpartition_identities(unsigned k, std::size_t n_max) {
  return overpartition_suite({k, k}, n_max, 1);
}

VerificationReport verify_overpartition_identities(IntRange k, std::size_t n_max, unsigned threads) {
  return overpartition_suite(k, n_max, threads);
}

VerificationReport verify_euler(std::size_t order) {
  return timed("euler", {order, std::nullopt, std::nullopt}, [&](VerificationReport& r) {
    const auto prod = euler_product(order);
    const auto sum = pentagonal_series(std::nullopt, order);
    for (std::size_t n = 0; n <= order; ++n)
      r.expect_equal(IdentityId::Euler, {static_cast<long long>(n), {}, {}, {}}, prod[n], sum[n]);
  });
}

std::vector<std::string> suite_names() {
  return {"euler",    "gf",      "comb",  "trunc",  "trunc-cor",
          "m-routes", "mp-enum", "gen17", "bridge", "overpartition"};
}

std::vector<VerificationReport> run_all(const VerifyConfig& config) {
  config.validate();
  const auto tables = TableSet::build(config.series_order(), config.k, config.ell, config.threads);
  return run_all(config, tables);
}

std::vector<VerificationReport> run_all(const VerifyConfig& config, const TableSet& t) {
  config.validate();
  const std::size_t n = config.n_max;
  const std::size_t enum_n = std::min<std::size_t>(n, config.enum_cap);
  const auto k = config.k;
  const auto ell = config.ell;

  std::vector<std::function<VerificationReport()>> suites{
      [&] { return verify_euler(n); },
      [&] { return verify_gf_tables(t, k, enum_n, 1); },
      [&] { return verify_comb(t, k, n); },
      [&] { return verify_trunc(t, k, ell, n); },
      [&] { return verify_trunc_corollaries(t, k, ell, n); },
      [&] { return verify_m_routes(t, ell, n, config.enum_cap); },
      [&] { return verify_mp_enum(t, ell, enum_n); },
      [&] { return verify_gen17(t, k, ell, n); },
      [&] { return verify_bridge(n, config.subset_cap); },
      [&] { return overpartition_suite(k, enum_n, 1); },
  };
  std::vector<VerificationReport> reports(suites.size());
  parallel_for(suites.size(), config.threads, [&](std::size_t i) { reports[i] = suites[i](); });
  return reports;
}

}  // namespace partlab
