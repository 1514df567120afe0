#pragma once

// Exact truncated formal power series over unbounded integers, together with
// the q-products and q-sums used throughout the library.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace partlab {

using BigInt = mpz_class;

/// Raised when two series of different truncation orders are combined.
class OrderMismatch : public std::invalid_argument {
 public:
  OrderMismatch(std::size_t lhs, std::size_t rhs);
};

/// A power series c_0 + c_1 q + ... + c_N q^N, understood modulo q^(N+1).
///
/// The coefficient vector always has exactly N+1 entries. Values are
/// immutable once built; every operation returns a fresh series.
class TruncatedSeries {
 public:
  /// Zero series of order `order`.
  explicit TruncatedSeries(std::size_t order);
  /// Takes ownership of `coeffs`; the order is `coeffs.size() - 1`.
  explicit TruncatedSeries(std::vector<BigInt> coeffs);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
  const BigInt& operator[](std::size_t i) const { return coeffs_.at(i); }

  /// Coefficient of q^i, with 0 for i < 0. Indices past the order throw.
  BigInt coeff(long long i) const;

  bool operator==(const TruncatedSeries&) const = default;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const BigInt& s, const TruncatedSeries& a);

  std::string to_string() const;

 private:
  std::vector<BigInt> coeffs_;
};

/// Factor family prod_j (1 + sign * q^(offset + j*step)).
struct ProductSpec {
  int sign = -1;
  std::size_t offset = 1;
  std::size_t step = 1;
};

/// One entry of a product: a factor family and how many factors to take
/// (`std::nullopt` for the infinite product).
struct ProductFactor {
  ProductSpec spec;
  std::optional<std::size_t> count;
};

TruncatedSeries make_zero(std::size_t order);
TruncatedSeries make_one(std::size_t order);
/// c * q^exponent, or the zero series when exponent exceeds the order.
TruncatedSeries monomial(const BigInt& c, std::size_t exponent, std::size_t order);

/// Cauchy product. Throws OrderMismatch on unequal orders.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse mod q^(N+1). Requires a_0 = +1 or -1.
TruncatedSeries invert(const TruncatedSeries& a);

/// Multiplies out every listed factor family. An empty list gives 1.
TruncatedSeries product(std::span<const ProductFactor> factors, std::size_t order);

/// (q;q)_inf truncated at `order`.
TruncatedSeries euler_product(std::size_t order);

/// sum_{n=-(l-1)}^{l} (-1)^n q^{n(3n-1)/2}; all n with g_n <= order when
/// `ell` is empty.
TruncatedSeries pentagonal_series(std::optional<std::size_t> ell, std::size_t order);

/// q^k / (1-q^k)^2 = sum_m m q^{km}.
TruncatedSeries geometric_kernel(std::size_t k, std::size_t order);

/// Gaussian binomial [n choose ell]_q; zero unless 0 <= ell <= n.
TruncatedSeries gaussian_binomial(long long n, long long ell, std::size_t order);

/// sum_{j=0}^{2l-1} (-q)^{j(j+1)/2}.
TruncatedSeries theta_truncated(std::size_t ell, std::size_t order);

}  // namespace partlab
