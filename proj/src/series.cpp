#include "partlab/series.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace partlab {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw OrderMismatch(a.order(), b.order());
}

// Multiplies `c` in place by (1 + sign q^e), e >= 1.
void mul_binomial_factor(std::vector<BigInt>& c, int sign, std::size_t e) {
  for (std::size_t i = c.size(); i-- > e;) {
    if (sign > 0)
      c[i] += c[i - e];
    else
      c[i] -= c[i - e];
  }
}

}  // namespace

OrderMismatch::OrderMismatch(std::size_t lhs, std::size_t rhs)
    : std::invalid_argument("truncation order mismatch: " + std::to_string(lhs) + " vs " +
                            std::to_string(rhs)) {}

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

BigInt TruncatedSeries::coeff(long long i) const {
  if (i < 0) return 0;
  if (static_cast<std::size_t>(i) > order())
    throw std::out_of_range("coefficient index " + std::to_string(i) + " beyond order " +
                            std::to_string(order()));
  return coeffs_[static_cast<std::size_t>(i)];
}

TruncatedSeries TruncatedSeries::operator-() const {
  std::vector<BigInt> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  std::vector<BigInt> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  std::vector<BigInt> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] - b.coeffs_[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const BigInt& s, const TruncatedSeries& a) {
  std::vector<BigInt> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a.coeffs_[i];
  return TruncatedSeries(std::move(c));
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ',';
    os << coeffs_[i].get_str();
  }
  os << ']';
  return os.str();
}

TruncatedSeries make_zero(std::size_t order) { return TruncatedSeries(order); }

TruncatedSeries make_one(std::size_t order) { return monomial(1, 0, order); }

TruncatedSeries monomial(const BigInt& c, std::size_t exponent, std::size_t order) {
  std::vector<BigInt> v(order + 1);
  if (exponent <= order) v[exponent] = c;
  return TruncatedSeries(std::move(v));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  const std::size_t n = a.order();
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  std::vector<BigInt> c(n + 1);
  // Row-wise schoolbook product; zero rows are skipped since most inputs
  // here are sparse q-products.
  for (std::size_t i = 0; i <= n; ++i) {
    if (sgn(ac[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (sgn(bc[j]) == 0) continue;
      mpz_addmul(c[i + j].get_mpz_t(), ac[i].get_mpz_t(), bc[j].get_mpz_t());
    }
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries invert(const TruncatedSeries& a) {
  const auto ac = a.coeffs();
  if (ac[0] == -1) return -invert(-a);
  if (ac[0] != 1)
    throw std::invalid_argument("invert: constant term must be +1 or -1, got " +
                                ac[0].get_str());
  const std::size_t n = a.order();
  std::vector<std::size_t> support;
  for (std::size_t i = 1; i <= n; ++i)
    if (sgn(ac[i]) != 0) support.push_back(i);

  std::vector<BigInt> b(n + 1);
  b[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    BigInt acc = 0;
    for (std::size_t i : support) {
      if (i > m) break;
      mpz_addmul(acc.get_mpz_t(), ac[i].get_mpz_t(), b[m - i].get_mpz_t());
    }
    b[m] = -acc;
  }
  return TruncatedSeries(std::move(b));
}

TruncatedSeries product(std::span<const ProductFactor> factors, std::size_t order) {
  std::vector<BigInt> c(order + 1);
  c[0] = 1;
  for (const auto& f : factors) {
    const auto& s = f.spec;
    if (s.offset < 1 || s.step < 1)
      throw std::invalid_argument("product: offset and step must be >= 1");
    if (s.sign != 1 && s.sign != -1) throw std::invalid_argument("product: sign must be +1 or -1");
    for (std::size_t j = 0; !f.count || j < *f.count; ++j) {
      const std::size_t e = s.offset + j * s.step;
      // Factors with exponent > order are 1 mod q^(order+1).
      if (e > order) break;
      mul_binomial_factor(c, s.sign, e);
    }
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries euler_product(std::size_t order) {
  const ProductFactor f{{-1, 1, 1}, std::nullopt};
  return product(std::span(&f, 1), order);
}

TruncatedSeries pentagonal_series(std::optional<std::size_t> ell, std::size_t order) {
  std::vector<BigInt> c(order + 1);
  auto add_term = [&](long long n) {
    const long long g = n * (3 * n - 1) / 2;
    if (g >= 0 && static_cast<std::size_t>(g) <= order) c[static_cast<std::size_t>(g)] += (n % 2 == 0) ? 1 : -1;
  };
  if (ell) {
    const auto l = static_cast<long long>(*ell);
    for (long long n = -(l - 1); n <= l; ++n) add_term(n);
  } else {
    add_term(0);
    for (long long n = 1;; ++n) {
      const long long lo = n * (3 * n - 1) / 2;  // the smaller of g_n, g_{-n}
      if (static_cast<std::size_t>(lo) > order) break;
      add_term(n);
      add_term(-n);
    }
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries geometric_kernel(std::size_t k, std::size_t order) {
  if (k == 0) throw std::invalid_argument("geometric_kernel: k must be >= 1");
  std::vector<BigInt> c(order + 1);
  for (std::size_t m = k, j = 1; m <= order; m += k, ++j) c[m] = static_cast<unsigned long>(j);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries gaussian_binomial(long long n, long long ell, std::size_t order) {
  if (ell < 0 || n < 0 || ell > n) return make_zero(order);
  // q-Pascal: [m, j] = [m-1, j-1] + q^j [m-1, j], row by row, kept exact
  // up to the full degree ell*(n-ell) before truncation.
  const auto top = static_cast<std::size_t>(ell);
  const std::size_t degree = static_cast<std::size_t>(ell * (n - ell));
  std::vector<std::vector<BigInt>> row(top + 1);
  row[0] = {1};
  for (long long m = 1; m <= n; ++m) {
    const auto jmax = static_cast<std::size_t>(std::min<long long>(m, ell));
    for (std::size_t j = jmax; j >= 1; --j) {
      const auto& left = row[j - 1];  // [m-1, j-1]
      const auto& up = row[j];        // [m-1, j], empty when j > m-1
      const std::size_t len = static_cast<std::size_t>(j * (m - static_cast<long long>(j))) + 1;
      std::vector<BigInt> next(len);
      for (std::size_t i = 0; i < left.size() && i < len; ++i) next[i] += left[i];
      for (std::size_t i = 0; i < up.size() && i + j < len; ++i) next[i + j] += up[i];
      row[j] = std::move(next);
    }
  }
  std::vector<BigInt> c(order + 1);
  const auto& poly = row[top];
  for (std::size_t i = 0; i <= degree && i <= order && i < poly.size(); ++i) c[i] = poly[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries theta_truncated(std::size_t ell, std::size_t order) {
  if (ell == 0) throw std::invalid_argument("theta_truncated: ell must be >= 1");
  std::vector<BigInt> c(order + 1);
  for (std::size_t j = 0; j < 2 * ell; ++j) {
    const std::size_t t = j * (j + 1) / 2;
    if (t > order) break;
    c[t] += (t % 2 == 0) ? 1 : -1;
  }
  return TruncatedSeries(std::move(c));
}

}  // namespace partlab
