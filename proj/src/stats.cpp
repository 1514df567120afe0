#include "partlab/stats.hpp"

#include <array>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace partlab {

namespace {

constexpr std::array<std::pair<StatId, std::string_view>, 9> kStatNames{{
    {StatId::a_k, "a_k"},
    {StatId::a_kp, "a_kp"},
    {StatId::b_k, "b_k"},
    {StatId::c_k, "c_k"},
    {StatId::M_ell, "M_ell"},
    {StatId::MP_ell, "MP_ell"},
    {StatId::Q, "Q"},
    {StatId::p, "p"},
    {StatId::c, "c"},
}};

StatTable make_table(StatId id, StatParams params, const TruncatedSeries& s) {
  return StatTable{id, params, {s.coeffs().begin(), s.coeffs().end()}};
}

TruncatedSeries partition_gf(std::size_t n) { return invert(euler_product(n)); }

// (1 - q^k)^2
TruncatedSeries squared_binomial(unsigned k, std::size_t n) {
  return make_one(n) - monomial(2, k, n) + monomial(1, 2 * static_cast<std::size_t>(k), n);
}

// s * q^e, dropping what falls past the order.
TruncatedSeries shifted(const TruncatedSeries& s, std::size_t e) {
  std::vector<BigInt> c(s.order() + 1);
  for (std::size_t i = 0; i + e <= s.order(); ++i) c[i + e] = s[i];
  return TruncatedSeries(std::move(c));
}

BigInt sign_of_ell(unsigned ell) { return (ell % 2 == 1) ? 1 : -1; }  // (-1)^(ell-1)

}  // namespace

std::string_view stat_name(StatId id) {
  for (const auto& [sid, name] : kStatNames)
    if (sid == id) return name;
  return "?";
}

std::optional<StatId> parse_stat_name(std::string_view name) {
  for (const auto& [sid, n] : kStatNames)
    if (n == name) return sid;
  return std::nullopt;
}

BigInt StatTable::at(long long n) const {
  if (n < 0) return 0;
  if (static_cast<std::size_t>(n) >= values.size())
    throw std::out_of_range(std::string(stat_name(id)) + ": index " + std::to_string(n) +
                            " beyond table end " + std::to_string(n_max()));
  return values[static_cast<std::size_t>(n)];
}

std::string StatTable::key() const {
  std::ostringstream os;
  os << stat_name(id);
  char sep = '/';
  auto put = [&](const char* name, const std::optional<unsigned>& v) {
    if (!v) return;
    os << sep << name << '=' << *v;
    sep = ',';
  };
  put("k", params.k);
  put("p", params.p);
  put("ell", params.ell);
  return os.str();
}

void validate_params(StatId id, const StatParams& params) {
  const bool wants_k = id == StatId::a_k || id == StatId::a_kp || id == StatId::b_k || id == StatId::c_k;
  const bool wants_p = id == StatId::a_kp;
  const bool wants_ell = id == StatId::M_ell || id == StatId::MP_ell;
  const std::string name(stat_name(id));
  if (wants_k && (!params.k || *params.k < 1)) throw std::invalid_argument(name + " requires k >= 1");
  if (!wants_k && params.k) throw std::invalid_argument(name + " takes no k parameter");
  if (wants_p && !params.p) throw std::invalid_argument(name + " requires p");
  if (wants_p && *params.p >= *params.k)
    throw std::invalid_argument(name + " requires 0 <= p <= k-1");
  if (!wants_p && params.p) throw std::invalid_argument(name + " takes no p parameter");
  if (wants_ell && (!params.ell || *params.ell < 1))
    throw std::invalid_argument(name + " requires ell >= 1");
  if (!wants_ell && params.ell) throw std::invalid_argument(name + " takes no ell parameter");
}

StatTable partition_table(std::size_t n_max) {
  return make_table(StatId::p, {}, partition_gf(n_max));
}

StatTable distinct_table(std::size_t n_max) {
  const ProductFactor f{{+1, 1, 1}, std::nullopt};
  return make_table(StatId::Q, {}, product(std::span(&f, 1), n_max));
}

StatTable b_k_series(unsigned k, std::size_t n_max) {
  validate_params(StatId::b_k, {k, {}, {}});
  return make_table(StatId::b_k, {k, {}, {}}, mul(partition_gf(n_max), geometric_kernel(k, n_max)));
}

StatTable a_kp_series(unsigned k, unsigned p, std::size_t n_max) {
  validate_params(StatId::a_kp, {k, p, {}});
  // (p q^p + (k-p) q^(p+k)) / (1-q^k)^2 / (q;q)_inf
  const auto numerator = monomial(p, p, n_max) + monomial(k - p, std::size_t{p} + k, n_max);
  const auto kernel = mul(numerator, invert(squared_binomial(k, n_max)));
  return make_table(StatId::a_kp, {k, p, {}}, mul(partition_gf(n_max), kernel));
}

StatTable a_k_series(unsigned k, std::size_t n_max) {
  auto t = a_kp_series(k, 0, n_max);
  t.id = StatId::a_k;
  t.params.p.reset();
  return t;
}

StatTable c_k_table(unsigned k, std::size_t n_max) {
  return c_k_table(k, n_max, distinct_table(n_max / 2));
}

StatTable c_k_table(unsigned k, std::size_t n_max, const StatTable& distinct) {
  validate_params(StatId::c_k, {k, {}, {}});
  if (distinct.n_max() < n_max / 2)
    throw std::invalid_argument("c_k_table: Q table too short for n_max");
  StatTable t{StatId::c_k, {k, {}, {}}, std::vector<BigInt>(n_max + 1)};
  for (std::size_t n = 0; n <= n_max; ++n) {
    BigInt sum = 0;
    for (std::size_t j = 1; j <= n / k; ++j) {
      const std::size_t rest = n - k * j;
      if (rest % 2 != 0) continue;
      sum += static_cast<unsigned long>(j) * distinct.values[rest / 2];
    }
    t.values[n] = std::move(sum);
  }
  return t;
}

StatTable c_table(std::size_t n_max) {
  const auto c2 = c_k_table(2, 2 * n_max);
  StatTable t{StatId::c, {}, std::vector<BigInt>(n_max + 1)};
  for (std::size_t n = 0; n <= n_max; ++n) t.values[n] = c2.values[2 * n];
  return t;
}

StatTable M_ell_series(unsigned ell, std::size_t n_max) {
  validate_params(StatId::M_ell, {{}, {}, ell});
  auto s = mul(partition_gf(n_max), pentagonal_series(ell, n_max)) - make_one(n_max);
  s = sign_of_ell(ell) * s;
  auto t = make_table(StatId::M_ell, {{}, {}, ell}, s);
  if (t != M_ell_gaussian(ell, n_max))
    throw std::logic_error("M_ell_series: pentagonal and Gaussian-binomial routes disagree");
  return t;
}

StatTable M_ell_gaussian(unsigned ell, std::size_t n_max) {
  validate_params(StatId::M_ell, {{}, {}, ell});
  const std::size_t base = std::size_t{ell} * (ell - 1) / 2;
  auto sum = make_zero(n_max);
  // 1/(q;q)_m, grown one factor at a time.
  std::vector<BigInt> recip(n_max + 1);
  recip[0] = 1;
  for (std::size_t m = 1;; ++m) {
    if (m <= n_max)
      for (std::size_t i = m; i <= n_max; ++i) recip[i] += recip[i - m];
    if (m < ell) continue;
    const std::size_t e = base + (std::size_t{ell} + 1) * m;
    if (e > n_max) break;
    const auto term = mul(TruncatedSeries(recip),
                          gaussian_binomial(static_cast<long long>(m) - 1, ell - 1, n_max));
    sum = sum + shifted(term, e);
  }
  return make_table(StatId::M_ell, {{}, {}, ell}, sum);
}

StatTable M_ell_pdiff(unsigned ell, std::size_t n_max) {
  validate_params(StatId::M_ell, {{}, {}, ell});
  const auto p = partition_table(n_max);
  StatTable t{StatId::M_ell, {{}, {}, ell}, std::vector<BigInt>(n_max + 1)};
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto nn = static_cast<long long>(n);
    BigInt sum = 0;
    for (long long j = 0; j < ell; ++j) {
      BigInt d = p.at(nn - j * (3 * j + 1) / 2) - p.at(nn - (j + 1) * (3 * j + 2) / 2);
      sum += (j % 2 == 0) ? d : BigInt(-d);
    }
    t.values[n] = sign_of_ell(ell) * sum;
  }
  return t;
}

StatTable MP_ell_series(unsigned ell, std::size_t n_max) {
  validate_params(StatId::MP_ell, {{}, {}, ell});
  const ProductFactor odd_distinct{{+1, 1, 2}, std::nullopt};  // (-q;q^2)_inf
  const ProductFactor even{{-1, 2, 2}, std::nullopt};           // (q^2;q^2)_inf
  const auto ratio =
      mul(product(std::span(&odd_distinct, 1), n_max), invert(product(std::span(&even, 1), n_max)));
  const auto s = sign_of_ell(ell) * (mul(ratio, theta_truncated(ell, n_max)) - make_one(n_max));
  auto t = make_table(StatId::MP_ell, {{}, {}, ell}, s);
  if (t.values[0] != 0) throw std::logic_error("MP_ell_series: nonzero constant term");
  for (const auto& v : t.values)
    if (v < 0) throw std::logic_error("MP_ell_series: negative coefficient");
  return t;
}

BigInt divisor_indicator_term(long long n, unsigned k) {
  if (k < 1) throw std::invalid_argument("divisor_indicator_term: k must be >= 1");
  if (n < 0 || n % k != 0) return 0;
  return BigInt(static_cast<long>(n / k));
}

}  // namespace partlab
