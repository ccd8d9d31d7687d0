#include "isocubic/json_io.hpp"

#include "isocubic/cubic_form.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

using namespace isocubic;
using isocubic::testing::random_scalar;

TEST_CASE("scalar json round trip is exact") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 100; ++t) {
    ScalarQ3 x = random_scalar(rng);
    CHECK(scalar_from_json(scalar_to_json(x)) == x);
  }
  Json j = scalar_to_json(ScalarQ3::of(0, 1, 1, 2));
  CHECK(j["p"] == "0");
  CHECK(j["q"] == "1/2");
  // the num/den form parses as well
  CHECK(scalar_from_json(Json{{"p", "0/1"}, {"q", "2/4"}}) == ScalarQ3::of(0, 1, 1, 2));
}

TEST_CASE("upsilon json schema and round trip") {
  UpsilonTensor u = upsilon_from_cubic(5);
  Json j = upsilon_to_json(u);
  CHECK(j["n"] == 5);
  CHECK(j["normalization"] == "iii-exact");
  CHECK(j["entries"].is_array());
  for (const auto& e : j["entries"]) {
    REQUIRE(e["ijk"].size() == 3);
    CHECK(e["ijk"][0].get<int>() <= e["ijk"][1].get<int>());
    CHECK(e["ijk"][1].get<int>() <= e["ijk"][2].get<int>());
  }
  UpsilonTensor back = upsilon_from_json(j);
  CHECK(back.n == u.n);
  CHECK(back.entries == u.entries);
}

TEST_CASE("connection element json round trip") {
  std::mt19937_64 rng(62);
  std::normal_distribution<double> gauss;
  ConnElement c = ConnElement::zero(5);
  for (int i = 0; i < c.comps.size(); ++i) c.comps[i] = gauss(rng);
  Json j = conn_to_json(c);
  ConnElement back = conn_from_json(j);
  CHECK(back.n == 5);
  CHECK((back.comps - c.comps).norm() == 0.0);

  // malformed input: pair not strictly increasing
  Json bad{{"n", 5},
           {"comps", Json::array({Json{{"pair", Json::array({3, 2})},
                                       {"frame", 1},
                                       {"value", 1.0}}})}};
  CHECK_THROWS_AS(conn_from_json(bad), std::invalid_argument);
}

TEST_CASE("reports serialize deterministically") {
  IdentityReport rep = verify_identities(upsilon_from_cubic(5));
  Json j1 = identity_report_to_json(rep);
  CHECK(j1["all_pass"] == true);
  REQUIRE(j1["checks"].size() == 5);
  // stable key order and stable dump for identical content
  Json j2 = identity_report_to_json(rep);
  CHECK(j1.dump() == j2.dump());

  auto table = model_table();
  CHECK(model_table_to_json(table).size() == 14);
  CHECK(model_table_to_table(table).find("E8/(E7xSU(2))") != std::string::npos);
}

TEST_CASE("subspace json carries mode and basis") {
  Subspace s = stabilizer_sym3(upsilon_from_cubic(5), Mode::Exact);
  Json j = subspace_to_json(s);
  CHECK(j["mode"] == "exact");
  CHECK(j["ambient"] == 10);
  CHECK(j["dim"] == 3);
  CHECK(j["basis"].size() == 3);

  Subspace f = stabilizer_sym3(upsilon_from_cubic(5), Mode::Float);
  Json jf = subspace_to_json(f);
  CHECK(jf["mode"] == "float");
  CHECK(jf["rank_tol"].get<double>() == kDefaultRankTol);
}
