#include "fermimap/io.hpp"
#include "fermimap/verify.hpp"

#include <doctest.h>

#include <sstream>

using namespace fermimap;
using nlohmann::json;

namespace {
double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }
}  // namespace

TEST_CASE("matrix JSON round trip is exact") {
  Rng rng(51);
  const Matrix m = haar_unitary(4, rng);
  const Matrix back = matrix_from_json(matrix_to_json(m));
  CHECK(max_abs(m - back) == 0.0);

  // Round trip survives serialization to text.
  const std::string text = matrix_to_json(m).dump();
  const Matrix reparsed = matrix_from_json(json::parse(text));
  CHECK(max_abs(m - reparsed) == 0.0);

  CHECK_THROWS_AS(matrix_from_json(json::array()), std::invalid_argument);
}

TEST_CASE("basis JSON shape") {
  const json j = basis_to_json(FockBasis::enumerate(2, 3));
  CHECK(j.at("N") == 2);
  CHECK(j.at("L_plus_1") == 3);
  CHECK(j.at("states").size() == 3);
  CHECK(j.at("states").at(1) == json::array({0, 2}));
}

TEST_CASE("domain spec JSON round trip for each variant") {
  const DomainSpec p2{Pure2Spec{1}, 3, 2};
  const DomainSpec p2_back = domain_spec_from_json(domain_spec_to_json(p2));
  CHECK(std::get<Pure2Spec>(p2_back.variant).reference_mode == 1);
  CHECK(p2_back.num_modes == 3);

  const DomainSpec m2{Mixed2Spec{{0, 1}, {0.3, 0.7}, {2, 3}, {0.5, 0.5}}, 4, 2};
  const DomainSpec m2_back = domain_spec_from_json(domain_spec_to_json(m2));
  const auto& m2v = std::get<Mixed2Spec>(m2_back.variant);
  CHECK(m2v.sigma == std::vector<int>{0, 1});
  CHECK(m2v.p == std::vector<double>{0.3, 0.7});
  CHECK(m2v.q == std::vector<double>{0.5, 0.5});

  const DomainSpec g3{GeneralNSpec{{{0, 1}, {2}}, {{{0, 2}, 0.4}, {{1, 2}, 0.6}}, {3, 4},
                                   {0.5, 0.5}},
                      5, 3};
  const DomainSpec g3_back = domain_spec_from_json(domain_spec_to_json(g3));
  const auto& g3v = std::get<GeneralNSpec>(g3_back.variant);
  CHECK(g3v.p.size() == 2);
  CHECK(g3v.p[1].first == ModeTuple{1, 2});
  CHECK(g3v.p[1].second == 0.6);

  json bad = domain_spec_to_json(p2);
  bad["variant"] = "bogus";
  CHECK_THROWS_AS(domain_spec_from_json(bad), std::invalid_argument);

  // Deserialization revalidates.
  json invalid = domain_spec_to_json(m2);
  invalid["p"] = std::vector<double>{0.9, 0.9};
  CHECK_THROWS_AS(domain_spec_from_json(invalid), std::invalid_argument);
}

TEST_CASE("Kraus set JSON round trip preserves operators and domain") {
  Rng rng(52);
  const FermionOperator u = random_sector_unitary(FockBasis::enumerate(2, 3), rng);
  const KrausSet ks = kraus_pure2(u, 2, std::nullopt, 1.5);
  const KrausSet back = kraus_set_from_json(kraus_set_to_json(ks));
  REQUIRE(back.operators.size() == ks.operators.size());
  for (std::size_t i = 0; i < ks.operators.size(); ++i)
    CHECK(max_abs(back.operators[i] - ks.operators[i]) == 0.0);
  CHECK(back.time == 1.5);
  CHECK(std::get<Pure2Spec>(back.domain.variant).reference_mode == 2);
}

TEST_CASE("verification reports serialize one per line") {
  VerificationReport r1;
  r1.scenario = "demo/one";
  r1.num_cases = 3;
  r1.passed = true;
  VerificationReport r2;
  r2.scenario = "demo/two";
  r2.passed = false;
  const std::string jsonl = reports_to_jsonl({r1, r2});

  std::istringstream is(jsonl);
  std::string line;
  int lines = 0;
  while (std::getline(is, line)) {
    const json j = json::parse(line);
    CHECK(j.contains("scenario"));
    CHECK(j.contains("tolerance"));
    CHECK(j.contains("passed"));
    ++lines;
  }
  CHECK(lines == 2);
}

TEST_CASE("bound report JSON carries both sides of the inequality") {
  BoundReport r;
  r.lhs = 0.25;
  r.rhs = 1.5;
  r.satisfied = true;
  r.parameters = "mu=0,nu=1,modes=3";
  const json j = bound_report_to_json(r);
  CHECK(j.at("lhs") == 0.25);
  CHECK(j.at("rhs") == 1.5);
  CHECK(j.at("satisfied") == true);
  CHECK(j.at("parameters") == "mu=0,nu=1,modes=3");
}
