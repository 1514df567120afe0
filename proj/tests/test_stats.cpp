#include <doctest.h>

#include "oracles.hpp"
#include "partlab/enumerate.hpp"
#include "partlab/stats.hpp"

using namespace partlab;

TEST_CASE("partition and distinct tables") {
  const auto p = partition_table(100);
  const auto po = oracle::partition_numbers(100);
  for (std::size_t n = 0; n <= 100; ++n) CHECK(p.values[n] == po[n]);
  CHECK(p.at(5) == 7);
  CHECK(p.at(-3) == 0);
  CHECK_THROWS_AS(p.at(101), std::out_of_range);

  const auto q = distinct_table(40);
  const auto qo = oracle::distinct_partition_numbers(40);
  for (std::size_t n = 0; n <= 40; ++n) CHECK(q.values[n] == qo[n]);
}

TEST_CASE("b_k series") {
  CHECK(b_k_series(3, 10).at(5) == 2);
  for (unsigned k = 1; k <= 6; ++k) {
    const auto b = b_k_series(k, 30);
    for (long long n = 0; n < k; ++n) CHECK(b.at(n) == 0);
  }
  const auto b2 = b_k_series(2, 30);
  for (unsigned n = 1; n <= 30; ++n) CHECK(b2.at(n) == b_k_enum(n, 2));
  CHECK_THROWS_AS(b_k_series(0, 5), std::invalid_argument);
}

TEST_CASE("a_k and a_kp series") {
  CHECK(a_k_series(3, 5).at(5) == 6);
  CHECK(a_kp_series(3, 0, 5).at(5) == 6);
  CHECK(a_kp_series(3, 1, 5).at(5) == 9);
  CHECK(a_kp_series(3, 2, 5).at(5) == 11);
  CHECK_THROWS_AS(a_kp_series(3, 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(a_kp_series(0, 0, 5), std::invalid_argument);

  const auto a1 = a_k_series(1, 25);
  for (unsigned n = 1; n <= 25; ++n) CHECK(a1.at(n) == a_k_enum(n, 1));

  // 2q^2/(1-q^2)^2 and q(1+q^2)/(1-q^2)^2, each over (q;q)_inf.
  const std::size_t N = 40;
  const auto P = invert(euler_product(N));
  const auto sq = invert(make_one(N) - monomial(2, 2, N) + monomial(1, 4, N));
  const auto even = mul(P, mul(monomial(2, 2, N), sq));
  const auto odd = mul(P, mul(monomial(1, 1, N) + monomial(1, 3, N), sq));
  const auto a20 = a_kp_series(2, 0, N);
  const auto a21 = a_kp_series(2, 1, N);
  for (std::size_t n = 0; n <= N; ++n) {
    CHECK(a20.values[n] == even[n]);
    CHECK(a21.values[n] == odd[n]);
  }
}

TEST_CASE("c_k table") {
  const long c3[] = {0, 0, 0, 1, 0, 1, 2, 1, 2, 5, 2, 5, 8};
  const auto t = c_k_table(3, 12);
  for (std::size_t n = 0; n <= 12; ++n) CHECK(t.values[n] == c3[n]);
  CHECK(c_k_table(2, 6).at(6) == 6);
  for (unsigned k = 1; k <= 5; ++k) {
    const auto c = c_k_table(k, 20);
    for (long long n = 0; n < k; ++n) CHECK(c.at(n) == 0);
  }
  CHECK_THROWS_AS(c_k_table(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(c_k_table(2, 20, distinct_table(5)), std::invalid_argument);

  // Q from the enumeration oracle gives the same table.
  StatTable q{StatId::Q, {}, {}};
  for (unsigned n = 0; n <= 15; ++n) q.values.push_back(Q_enum(n));
  CHECK(c_k_table(4, 30, q).values == c_k_table(4, 30).values);
}

TEST_CASE("c(n) against subset enumeration") {
  const auto c = c_table(20);
  for (unsigned n = 1; n <= 20; ++n) CHECK(c.at(n) == c_subset_oracle(n));
}

TEST_CASE("M_ell routes") {
  CHECK(M_ell_series(3, 5).at(5) == 0);
  for (unsigned l = 1; l <= 4; ++l) {
    const auto s = M_ell_series(l, 40);
    const auto g = M_ell_gaussian(l, 40);
    const auto d = M_ell_pdiff(l, 40);
    CHECK(s.values == g.values);
    for (long long n = 1; n <= 40; ++n) {
      CHECK(s.at(n) == d.at(n));
      CHECK(s.at(n) >= 0);
      CHECK(s.at(n) == M_ell_enum(static_cast<unsigned>(n), l));
    }
    CHECK(d.at(0) == 0);
  }
  CHECK_THROWS_AS(M_ell_series(0, 5), std::invalid_argument);
}

TEST_CASE("MP_ell series") {
  CHECK(MP_ell_series(3, 5).at(5) == 0);  // support of MP_3 starts at 21
  const auto mp1 = MP_ell_series(1, 200);
  CHECK(mp1.at(0) == 0);
  CHECK(mp1.at(3) == 1);
  for (long long n = 0; n < 3; ++n) CHECK(mp1.at(n) == 0);
  for (const auto& v : mp1.values) CHECK(v >= 0);
  for (unsigned n = 1; n <= 15; ++n) CHECK(mp1.at(n) == MP_ell_enum(n, 1));
  for (unsigned l = 1; l <= 3; ++l) {
    const auto s = MP_ell_series(l, 30);
    for (unsigned n = 0; n <= 30; ++n) CHECK(s.at(n) == MP_ell_enum(n, l));
  }
}

TEST_CASE("divisor indicator term") {
  CHECK(divisor_indicator_term(6, 3) == 2);
  CHECK(divisor_indicator_term(5, 3) == 0);
  CHECK(divisor_indicator_term(0, 4) == 0);
  CHECK_THROWS_AS(divisor_indicator_term(4, 0), std::invalid_argument);
}

TEST_CASE("names, keys and parameter validation") {
  for (auto id : {StatId::a_k, StatId::a_kp, StatId::b_k, StatId::c_k, StatId::M_ell, StatId::MP_ell,
                  StatId::Q, StatId::p, StatId::c})
    CHECK(parse_stat_name(stat_name(id)) == id);
  CHECK_FALSE(parse_stat_name("nope"));
  CHECK(a_kp_series(3, 1, 4).key() == "a_kp/k=3,p=1");
  CHECK(M_ell_series(2, 4).key() == "M_ell/ell=2");
  CHECK(partition_table(3).key() == "p");

  CHECK_THROWS_AS(validate_params(StatId::p, {3, {}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_params(StatId::b_k, {}), std::invalid_argument);
  CHECK_THROWS_AS(validate_params(StatId::a_kp, {3, {}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_params(StatId::M_ell, {{}, {}, 0}), std::invalid_argument);
  CHECK_THROWS_AS(validate_params(StatId::b_k, {3, 1, {}}), std::invalid_argument);
  CHECK_NOTHROW(validate_params(StatId::a_kp, {3, 2, {}}));
}
