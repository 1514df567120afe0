#include <doctest.h>

#include "partlab/io.hpp"

using namespace partlab;

TEST_CASE("CSV round trip") {
  for (const auto& t : {partition_table(300), a_kp_series(4, 3, 120), MP_ell_series(2, 80), c_table(15)}) {
    const auto back = table_from_csv(table_to_csv(t), t.id, t.params);
    CHECK(back == t);
  }
  CHECK(table_to_csv(distinct_table(2)) == "n,value\n0,1\n1,1\n2,1\n");
  CHECK_THROWS_AS(table_from_csv("x,y\n0,1\n", StatId::p, {}), std::invalid_argument);
  CHECK_THROWS_AS(table_from_csv("n,value\n1,1\n", StatId::p, {}), std::invalid_argument);
  CHECK_THROWS_AS(table_from_csv("n,value\n", StatId::p, {}), std::invalid_argument);
}

TEST_CASE("large values are written as strings") {
  const BigInt limit("9007199254740992");
  CHECK(bigint_to_json(limit).is_number_integer());
  CHECK(bigint_to_json(-limit).is_number_integer());
  CHECK(bigint_to_json(limit + 1).is_string());
  CHECK(bigint_to_json(limit + 1) == "9007199254740993");

  const auto p = partition_table(400);
  const auto j = table_to_json(p);
  CHECK(j["stat"] == "p");
  CHECK(j["n_max"] == 400);
  CHECK(j["params"].empty());
  for (std::size_t n = 0; n <= 400; ++n) CHECK(bigint_from_json(j["values"][n]) == p.values[n]);
  CHECK(j["values"][400].is_string());
  CHECK_THROWS_AS(bigint_from_json(ordered_json(1.5)), std::invalid_argument);
}

TEST_CASE("report JSON layout") {
  VerificationReport r;
  r.suite = "demo";
  r.range = {12, IntRange{2, 3}, std::nullopt};
  r.expect_equal(IdentityId::Trunc_eq, {7, 2U, {}, 1U}, 3, 4);
  r.expect_equal(IdentityId::Trunc_eq, {3, 2U, {}, 1U}, 1, 1);
  r.finalize();
  const auto j = report_to_json(r);
  CHECK(j.dump() ==
        R"({"suite":"demo","range":{"n_max":12,"k":[2,3]},"total":2,"failed":1,"passed":false,)"
        R"("failures":[{"identity":"Trunc-eq","n":7,"k":2,"ell":1,"lhs":3,"rhs":4}]})");
  const auto doc = ordered_json::parse(reports_to_json({r}));
  CHECK(doc["passed"] == false);
  CHECK(reports_to_csv({r}) == "suite,range,total,failed,status\ndemo,n<=12 k=2..3,2,1,FAIL\n");
  CHECK(reports_to_text({r}).find("demo: first failure Trunc-eq n=7 k=2 ell=1 lhs=3 rhs=4") !=
        std::string::npos);
}
