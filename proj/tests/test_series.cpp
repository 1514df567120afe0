#include <doctest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "partlab/series.hpp"

using namespace partlab;

namespace {

TruncatedSeries from(std::initializer_list<long> cs) {
  std::vector<BigInt> v;
  for (long c : cs) v.emplace_back(c);
  return TruncatedSeries(std::move(v));
}

TruncatedSeries random_series(std::mt19937& rng, std::size_t order, bool unit) {
  std::uniform_int_distribution<long> dist(-50, 50);
  std::vector<BigInt> v(order + 1);
  for (auto& c : v) c = dist(rng);
  if (unit) v[0] = (dist(rng) < 0) ? -1 : 1;
  return TruncatedSeries(std::move(v));
}

}  // namespace

TEST_CASE("zero and one") {
  CHECK(make_zero(3) == from({0, 0, 0, 0}));
  CHECK(make_zero(0) == from({0}));
  CHECK(make_zero(5) + make_one(5) == from({1, 0, 0, 0, 0, 0}));
  CHECK(monomial(7, 9, 4) == make_zero(4));
  CHECK(monomial(-2, 2, 3) == from({0, 0, -2, 0}));
}

TEST_CASE("coefficient access") {
  const auto s = from({4, 5, 6});
  CHECK(s.order() == 2);
  CHECK(s.coeff(-1) == 0);
  CHECK(s.coeff(2) == 6);
  CHECK_THROWS_AS(s.coeff(3), std::out_of_range);
  CHECK(s.to_string() == "[4,5,6]");
}

TEST_CASE("mul") {
  CHECK(mul(from({1, 1, 0}), from({1, -1, 0})) == from({1, 0, -1}));
  CHECK_THROWS_AS(mul(make_one(2), make_one(3)), OrderMismatch);
  CHECK_THROWS_AS(make_one(2) + make_one(3), OrderMismatch);

  const auto pent = pentagonal_series(std::nullopt, 10);
  CHECK(mul(pent, invert(pent)) == make_one(10));

  // p(n) from the recurrence times the pentagonal signs gives 1.
  std::vector<BigInt> p;
  for (const auto& v : oracle::partition_numbers(10)) p.push_back(v);
  CHECK(mul(TruncatedSeries(p), pent) == make_one(10));
}

TEST_CASE("mul is commutative and associative, invert is a two-sided inverse") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t order = static_cast<std::size_t>(trial % 13);
    const auto a = random_series(rng, order, false);
    const auto b = random_series(rng, order, false);
    const auto c = random_series(rng, order, false);
    CHECK(mul(a, b) == mul(b, a));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, b + c) == mul(a, b) + mul(a, c));

    const auto u = random_series(rng, order, true);
    CHECK(mul(u, invert(u)) == make_one(order));
    CHECK(invert(invert(u)) == u);
  }
}

TEST_CASE("invert") {
  CHECK(invert(from({1, -1, 0, 0, 0})) == from({1, 1, 1, 1, 1}));
  CHECK(invert(from({-1, 0, 0})) == from({-1, 0, 0}));
  CHECK_THROWS_AS(TruncatedSeries(std::vector<BigInt>{}), std::invalid_argument);
  CHECK_THROWS_AS(invert(from({0, 1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(invert(from({2, 1})), std::invalid_argument);

  const auto p = oracle::partition_numbers(80);
  const auto inv = invert(euler_product(80));
  for (std::size_t n = 0; n <= 80; ++n) CHECK(inv[n] == p[n]);
}

TEST_CASE("product") {
  const ProductFactor euler{{-1, 1, 1}, std::nullopt};
  // 6 is not pentagonal; the next nonzero term after q^5 is q^7.
  CHECK(product(std::span(&euler, 1), 6) == from({1, -1, -1, 0, 0, 1, 0}));

  const ProductFactor distinct{{+1, 1, 1}, std::nullopt};
  CHECK(product(std::span(&distinct, 1), 5) == from({1, 1, 1, 2, 2, 3}));

  CHECK(product({}, 4) == make_one(4));

  // (1-q)(1-q^3) from a finite family with step 2.
  const ProductFactor two{{-1, 1, 2}, 2};
  CHECK(product(std::span(&two, 1), 5) == from({1, -1, 0, -1, 1, 0}));

  const ProductFactor none{{-1, 1, 1}, 0};
  CHECK(product(std::span(&none, 1), 3) == make_one(3));

  const auto q = oracle::distinct_partition_numbers(60);
  const auto s = product(std::span(&distinct, 1), 60);
  for (std::size_t n = 0; n <= 60; ++n) CHECK(s[n] == q[n]);
}

TEST_CASE("pentagonal series") {
  CHECK(pentagonal_series(std::nullopt, 7) == from({1, -1, -1, 0, 0, 1, 0, 1}));
  // n in {0, 1}: exponents 0 and 1.
  CHECK(pentagonal_series(1, 5) == from({1, -1, 0, 0, 0, 0}));
  // n in {-1, 0, 1, 2}: exponents 2, 0, 1, 5.
  CHECK(pentagonal_series(2, 6) == from({1, -1, -1, 0, 0, 1, 0}));
  CHECK(pentagonal_series(std::nullopt, 50) == euler_product(50));
}

TEST_CASE("Euler product against the pentagonal signs at N=400") {
  const auto signs = oracle::euler_signs(400);
  const auto e = euler_product(400);
  for (std::size_t n = 0; n <= 400; ++n) CHECK(e[n] == signs[n]);
}

TEST_CASE("geometric kernel") {
  CHECK(geometric_kernel(2, 6) == from({0, 0, 1, 0, 2, 0, 3}));
  CHECK(geometric_kernel(1, 3) == from({0, 1, 2, 3}));
  CHECK(geometric_kernel(5, 4) == make_zero(4));
  CHECK_THROWS_AS(geometric_kernel(0, 4), std::invalid_argument);
  // q^k / (1-q^k)^2
  const auto k3 = mul(monomial(1, 3, 20), invert(make_one(20) - monomial(2, 3, 20) + monomial(1, 6, 20)));
  CHECK(geometric_kernel(3, 20) == k3);
}

TEST_CASE("gaussian binomial") {
  CHECK(gaussian_binomial(2, 1, 3) == from({1, 1, 0, 0}));
  CHECK(gaussian_binomial(4, 2, 5) == from({1, 1, 2, 1, 1, 0}));
  CHECK(gaussian_binomial(4, -1, 5) == make_zero(5));
  CHECK(gaussian_binomial(4, 5, 5) == make_zero(5));
  CHECK(gaussian_binomial(-1, 0, 2) == make_zero(2));
  CHECK(gaussian_binomial(0, 0, 2) == make_one(2));

  for (int n = 0; n <= 12; ++n)
    for (int l = 0; l <= n; ++l) {
      const auto expected = oracle::gaussian_by_subsets(n, l);
      const std::size_t degree = expected.size() - 1;
      const auto g = gaussian_binomial(n, l, degree + 2);
      for (std::size_t i = 0; i <= degree; ++i) CHECK(g[i] == expected[i]);
      CHECK(g[degree + 1] == 0);
      CHECK(g[degree + 2] == 0);
    }

  // At q=1 the coefficients sum to the ordinary binomial.
  const auto g = gaussian_binomial(10, 5, 25);
  BigInt sum = 0;
  for (const auto& c : g.coeffs()) sum += c;
  CHECK(sum == 252);
}

TEST_CASE("truncated theta") {
  CHECK(theta_truncated(1, 3) == from({1, -1, 0, 0}));
  CHECK(theta_truncated(2, 6) == from({1, -1, 0, -1, 0, 0, 1}));
  CHECK(theta_truncated(2, 2) == from({1, -1, 0}));
}
