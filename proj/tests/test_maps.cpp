#include "fermimap/maps.hpp"
#include "fermimap/reduce.hpp"
#include "fermimap/verify.hpp"

#include <doctest.h>

using namespace fermimap;

namespace {
double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }
}  // namespace

TEST_CASE("domain spec validation") {
  DomainSpec bad_mode{Pure2Spec{5}, 3, 2};
  CHECK_THROWS_AS(bad_mode.validate(), std::invalid_argument);

  DomainSpec overlap{Mixed2Spec{{0, 1}, {0.5, 0.5}, {1, 2}, {0.5, 0.5}}, 4, 2};
  CHECK_THROWS_AS(overlap.validate(), std::invalid_argument);

  DomainSpec bad_p{Mixed2Spec{{0, 1}, {0.6, 0.6}, {2, 3}, {0.5, 0.5}}, 4, 2};
  CHECK_THROWS_AS(bad_p.validate(), std::invalid_argument);

  // Tuples with repeated modes have vanishing creation strings; reject them.
  DomainSpec collide{GeneralNSpec{{{0, 1}, {0, 1}}, {{{0, 0}, 1.0}}, {2, 3}, {0.5, 0.5}}, 4, 3};
  CHECK_THROWS_AS(collide.validate(), std::invalid_argument);

  DomainSpec ok{Mixed2Spec{{0, 1}, {0.3, 0.7}, {2, 3}, {0.5, 0.5}}, 4, 2};
  CHECK_NOTHROW(ok.validate());
  CHECK(ok.sigma_union() == std::vector<int>{0, 1});
}

TEST_CASE("pure2 domain states are half-half occupation mixtures") {
  const DomainSpec spec{Pure2Spec{0}, 3, 2};
  const auto pairs = domain_states(spec);
  REQUIRE(pairs.size() == 2);
  Matrix r1 = Matrix::Zero(3, 3);
  r1(0, 0) = r1(1, 1) = 0.5;
  Matrix r2 = Matrix::Zero(3, 3);
  r2(0, 0) = r2(2, 2) = 0.5;
  CHECK(max_abs(pairs[0].reduced.matrix - r1) < 1e-12);
  CHECK(max_abs(pairs[1].reduced.matrix - r2) < 1e-12);
  for (const auto& pr : pairs)
    CHECK(max_abs(trace_to_single(pr.global).matrix - pr.reduced.matrix) < 1e-12);
}

TEST_CASE("mixed2 domain state with concentrated p") {
  const DomainSpec spec{Mixed2Spec{{0}, {1.0}, {1, 2}, {0.5, 0.5}}, 3, 2};
  const auto pairs = domain_states(spec);
  REQUIRE(!pairs.empty());
  // The given-q member comes last; reduced = ¼ diag(2,1,1).
  Matrix expected = Matrix::Zero(3, 3);
  expected(0, 0) = 0.5;
  expected(1, 1) = expected(2, 2) = 0.25;
  CHECK(max_abs(pairs.back().reduced.matrix - expected) < 1e-12);
  for (const auto& pr : pairs) {
    CHECK_NOTHROW(pr.global.validate());
    CHECK(max_abs(trace_to_single(pr.global).matrix - pr.reduced.matrix) < 1e-12);
    CHECK(in_domain(spec, pr.reduced));
  }
}

TEST_CASE("general_n with N=2 matches mixed2 domain states") {
  const DomainSpec m{Mixed2Spec{{0, 1}, {0.4, 0.6}, {2, 3}, {0.5, 0.5}}, 4, 2};
  const DomainSpec g{GeneralNSpec{{{0, 1}}, {{{0}, 0.4}, {{1}, 0.6}}, {2, 3}, {0.5, 0.5}}, 4, 2};
  const auto mp = domain_states(m);
  const auto gp = domain_states(g);
  REQUIRE(mp.size() == gp.size());
  for (std::size_t i = 0; i < mp.size(); ++i) {
    CHECK(max_abs(mp[i].global.matrix - gp[i].global.matrix) < 1e-12);
    CHECK(max_abs(mp[i].reduced.matrix - gp[i].reduced.matrix) < 1e-12);
  }
}

TEST_CASE("exclusion projector") {
  const FockBasis f1 = FockBasis::enumerate(1, 2);
  CHECK(max_abs(exclusion_projector({}, f1).matrix - Matrix::Identity(2, 2)) == 0.0);

  Matrix expected = Matrix::Zero(2, 2);
  expected(1, 1) = 1.0;
  CHECK(max_abs(exclusion_projector({0}, f1).matrix - expected) == 0.0);

  const FockBasis f1of3 = FockBasis::enumerate(1, 3);
  const Matrix pi = exclusion_projector({0, 1}, f1of3).matrix;
  for (int j : {0, 1}) {
    const Vector s = slater_vector({j}, f1of3);
    CHECK(max_abs(pi * s * s.adjoint() * pi.adjoint()) == 0.0);
  }
}

TEST_CASE("pure2 identity-evolution Kraus operators frozen by hand") {
  const FockBasis f2 = FockBasis::enumerate(2, 2);
  const KrausSet ks = kraus_pure2(identity_on(f2), 0);
  REQUIRE(ks.operators.size() == 2);

  Matrix k0 = Matrix::Zero(2, 2);
  k0(1, 1) = 1.0;  // a_0 a†_0 fixes |1⟩, kills |0⟩
  Matrix k1 = Matrix::Zero(2, 2);
  k1(0, 1) = -1.0;  // a_1 a†_0 |1⟩ = -|0⟩
  CHECK(max_abs(ks.operators[0] - k0) < 1e-12);
  CHECK(max_abs(ks.operators[1] - k1) < 1e-12);

  const Matrix defect = tp_defect(ks);
  Matrix expected = Matrix::Zero(2, 2);
  expected(1, 1) = 2.0;
  CHECK(max_abs(defect - expected) < 1e-12);
}

TEST_CASE("pure2 TP-defect structure for random evolutions") {
  Rng rng(5);
  for (int modes : {3, 4}) {
    const FockBasis f2 = FockBasis::enumerate(2, modes);
    for (int trial = 0; trial < 5; ++trial) {
      const FermionOperator u_t = random_sector_unitary(f2, rng);
      for (int mu = 0; mu < modes; ++mu) {
        const Matrix defect = tp_defect(kraus_pure2(u_t, mu));
        Matrix expected = 2.0 * Matrix::Identity(modes, modes);
        expected(mu, mu) = 0.0;
        CHECK(max_abs(defect - expected) < 1e-10);
      }
    }
  }
}

TEST_CASE("mixed2 TP-defect: zero on sigma, two on the rest") {
  Rng rng(6);
  const DomainSpec spec{Mixed2Spec{{0, 1}, {0.5, 0.5}, {2, 3}, {0.5, 0.5}}, 4, 2};
  const FermionOperator u_t = random_sector_unitary(FockBasis::enumerate(2, 4), rng);
  const Matrix defect = tp_defect(kraus_mixed2(u_t, spec));
  Matrix expected = 2.0 * Matrix::Identity(4, 4);
  expected(0, 0) = expected(1, 1) = 0.0;
  CHECK(max_abs(defect - expected) < 1e-10);
}

TEST_CASE("general_n TP-defect: zero on the sigma union, N elsewhere") {
  Rng rng(7);
  const DomainSpec spec{GeneralNSpec{{{0, 1}, {2}}, {{{0, 2}, 0.4}, {{1, 2}, 0.6}}, {3, 4},
                                     {0.5, 0.5}},
                        5, 3};
  const FermionOperator u_t = random_sector_unitary(FockBasis::enumerate(3, 5), rng);
  const KrausSet ks = kraus_general_n(u_t, spec);
  // C(5,2)=10 sorted pairs l⃗, two support tuples.
  CHECK(ks.operators.size() == 20);
  const Matrix defect = tp_defect(ks);
  Matrix expected = 3.0 * Matrix::Identity(5, 5);
  expected(0, 0) = expected(1, 1) = expected(2, 2) = 0.0;
  CHECK(max_abs(defect - expected) < 1e-10);
}

TEST_CASE("apply_map is the identity channel on domain states at U=I") {
  for (int mu = 0; mu < 3; ++mu) {
    const DomainSpec spec{Pure2Spec{mu}, 3, 2};
    const KrausSet ks = kraus_pure2(identity_on(FockBasis::enumerate(2, 3)), mu);
    for (const auto& pr : domain_states(spec)) {
      const DensityMatrix out = apply_map(ks, pr.reduced);
      CHECK(max_abs(out.matrix - pr.reduced.matrix) < 1e-12);
    }
  }
}

TEST_CASE("apply_map preserves trace on the domain, kills the reference mode") {
  Rng rng(8);
  const int modes = 3;
  const FermionOperator u_t = random_sector_unitary(FockBasis::enumerate(2, modes), rng);
  const KrausSet ks = kraus_pure2(u_t, 0);
  const DomainSpec spec{Pure2Spec{0}, modes, 2};
  for (const auto& pr : domain_states(spec)) {
    CHECK(std::abs(apply_map(ks, pr.reduced).trace_real() - 1.0) < 1e-10);
  }

  // P_μ itself is annihilated: every Kraus operator starts with a†_μ.
  Matrix pmu = Matrix::Zero(modes, modes);
  pmu(0, 0) = 1.0;
  CHECK(max_abs(apply_map_raw(ks, pmu)) < 1e-12);
}

TEST_CASE("apply_map is linear") {
  Rng rng(9);
  const FermionOperator u_t = random_sector_unitary(FockBasis::enumerate(2, 3), rng);
  const KrausSet ks = kraus_pure2(u_t, 1);
  const Matrix r1 = Matrix::Identity(3, 3) / 3.0;
  Matrix r2 = Matrix::Zero(3, 3);
  r2(0, 0) = r2(2, 2) = 0.5;
  r2(0, 2) = r2(2, 0) = 0.25;
  const double alpha = 0.6;
  const Matrix lhs = apply_map_raw(ks, alpha * r1 + (1 - alpha) * r2);
  const Matrix rhs = alpha * apply_map_raw(ks, r1) + (1 - alpha) * apply_map_raw(ks, r2);
  CHECK(max_abs(lhs - rhs) < 1e-12);
}

TEST_CASE("single-mode sigma with p=1 reproduces the pure2 channel on its domain") {
  Rng rng(10);
  const FermionOperator u_t = random_sector_unitary(FockBasis::enumerate(2, 3), rng);
  const DomainSpec spec{Mixed2Spec{{0}, {1.0}, {1, 2}, {0.5, 0.5}}, 3, 2};
  const KrausSet mixed = kraus_mixed2(u_t, spec);
  const KrausSet pure = kraus_pure2(u_t, 0);
  for (const auto& pr : domain_states(spec)) {
    CHECK(max_abs(apply_map(mixed, pr.reduced).matrix - apply_map(pure, pr.reduced).matrix) <
          1e-12);
  }

  // States supported inside Σ are killed by the projector.
  Matrix sigma_state = Matrix::Zero(3, 3);
  sigma_state(0, 0) = 1.0;
  CHECK(max_abs(apply_map_raw(mixed, sigma_state)) < 1e-12);
}

TEST_CASE("channel action is independent of the annihilator basis choice") {
  Rng rng(11);
  const int modes = 3;
  const FermionOperator u_t = random_sector_unitary(FockBasis::enumerate(2, modes), rng);
  const DomainSpec spec{Pure2Spec{1}, modes, 2};
  const KrausSet plain = kraus_pure2(u_t, 1);
  const KrausSet rotated = kraus_pure2(u_t, 1, haar_unitary(modes, rng));
  for (const auto& pr : domain_states(spec)) {
    CHECK(max_abs(apply_map(plain, pr.reduced).matrix - apply_map(rotated, pr.reduced).matrix) <
          1e-10);
  }
}

TEST_CASE("in_domain accepts the family and rejects outsiders") {
  const DomainSpec spec{Pure2Spec{0}, 3, 2};
  for (const auto& pr : domain_states(spec)) CHECK(in_domain(spec, pr.reduced));

  DensityMatrix outside{FockBasis::enumerate(1, 3), Matrix::Zero(3, 3)};
  outside.matrix(1, 1) = outside.matrix(2, 2) = 0.5;  // no weight on μ=0
  CHECK_FALSE(in_domain(spec, outside));
}

TEST_CASE("non-unitary or number-violating evolutions are rejected") {
  const FockBasis f2 = FockBasis::enumerate(2, 3);
  FermionOperator bad = identity_on(f2);
  bad.matrix(0, 0) = 2.0;
  CHECK_THROWS_AS(kraus_pure2(bad, 0), std::logic_error);
}
