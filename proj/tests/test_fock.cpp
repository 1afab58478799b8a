#include "fermimap/fock.hpp"
#include "fermimap/verify.hpp"

#include <doctest.h>

using namespace fermimap;

namespace {
double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }
}  // namespace

TEST_CASE("basis enumeration is lexicographic with binomial size") {
  const FockBasis b = FockBasis::enumerate(2, 3);
  REQUIRE(b.dim() == 3);
  CHECK(b.state(0) == ModeTuple{0, 1});
  CHECK(b.state(1) == ModeTuple{0, 2});
  CHECK(b.state(2) == ModeTuple{1, 2});
  CHECK(b.index_of({0, 2}) == 1);

  CHECK(FockBasis::enumerate(0, 5).dim() == 1);
  CHECK(FockBasis::enumerate(0, 5).state(0).empty());
  CHECK(FockBasis::enumerate(2, 4).dim() == 6);
  CHECK(FockBasis::enumerate(3, 6).dim() == 20);
}

TEST_CASE("enumeration rejects overfilled sectors") {
  CHECK_THROWS_WITH_AS(FockBasis::enumerate(5, 3),
                       "exclusion violation: more particles than modes", std::invalid_argument);
}

TEST_CASE("creation operator signs follow anticommutation") {
  const FockBasis vac = FockBasis::enumerate(0, 2);
  const FockBasis f1 = FockBasis::enumerate(1, 2);

  // a†_0 |0> = |(0)> with amplitude +1.
  const FermionOperator c0 = creation(0, vac);
  CHECK(c0.matrix(0, 0) == Complex(1.0, 0.0));

  // a†_1 a†_0 |0> = -|(0,1)>.
  const FermionOperator c1 = creation(1, f1);
  const Matrix prod = c1.matrix * c0.matrix;
  CHECK(prod(0, 0) == Complex(-1.0, 0.0));

  // (a†_k)² = 0.
  const FockBasis f1of3 = FockBasis::enumerate(1, 3);
  const FockBasis f2of3 = FockBasis::enumerate(2, 3);
  const Matrix twice = creation(0, f1of3).matrix * creation(0, FockBasis::enumerate(0, 3)).matrix;
  CHECK(max_abs(creation(0, f2of3).matrix * creation(0, f1of3).matrix) == 0.0);
  (void)twice;
}

TEST_CASE("annihilation is the adjoint with swapped tags") {
  const FockBasis f1 = FockBasis::enumerate(1, 2);
  const FockBasis vac = FockBasis::enumerate(0, 2);

  // a_0 on the vacuum sector vanishes.
  CHECK(max_abs(annihilation(0, vac).matrix + Matrix::Zero(1, 1)) == 0.0);

  // {a_0, a†_0} restricted to F_1 = I.
  const Matrix anti = creation(0, vac).matrix * annihilation(0, f1).matrix +
                      annihilation(0, FockBasis::enumerate(2, 2)).matrix *
                          creation(0, f1).matrix;
  CHECK(max_abs(anti - Matrix::Identity(2, 2)) < 1e-12);

  // {a_0, a_1} = 0 on F_2.
  const FockBasis f2 = FockBasis::enumerate(2, 2);
  const Matrix anti2 = annihilation(0, f1).matrix * annihilation(1, f2).matrix +
                       annihilation(1, f1).matrix * annihilation(0, f2).matrix;
  CHECK(max_abs(anti2) == 0.0);
}

TEST_CASE("creation strings order and exclusion") {
  const FockBasis vac = FockBasis::enumerate(0, 3);
  const FockBasis f2 = FockBasis::enumerate(2, 3);

  CHECK(creation_string({0, 1}, vac).matrix(f2.index_of({0, 1}), 0) == Complex(1.0, 0.0));
  CHECK(creation_string({1, 0}, vac).matrix(f2.index_of({0, 1}), 0) == Complex(-1.0, 0.0));
  CHECK_THROWS_AS(creation_string({0, 0}, vac), std::invalid_argument);
}

TEST_CASE("number operators are occupation projectors") {
  const FockBasis f1 = FockBasis::enumerate(1, 2);
  const Matrix n0 = number_operator(0, f1).matrix;
  CHECK(n0(0, 0) == Complex(1.0, 0.0));
  CHECK(n0(1, 1) == Complex(0.0, 0.0));
  CHECK(max_abs(n0 * n0 - n0) == 0.0);

  const FockBasis f2 = FockBasis::enumerate(2, 4);
  Matrix total = Matrix::Zero(f2.dim(), f2.dim());
  for (int k = 0; k < 4; ++k) total += number_operator(k, f2).matrix;
  CHECK(max_abs(total - 2.0 * Matrix::Identity(f2.dim(), f2.dim())) == 0.0);
}

TEST_CASE("induced unitary equals the operator-product construction") {
  Rng rng(1234);
  const int modes = 3;
  const FockBasis f2 = FockBasis::enumerate(2, modes);
  const Matrix v = haar_unitary(modes, rng);
  const FermionOperator w = induced_unitary(v, f2);

  // Independent oracle: build f†_k = Σ_l V_{lk} a†_l as explicit operators
  // and apply the string f†_{k_1} f†_{k_2} to the vacuum for each column.
  const FockBasis vac = FockBasis::enumerate(0, modes);
  const FockBasis f1 = FockBasis::enumerate(1, modes);
  for (Eigen::Index col = 0; col < f2.dim(); ++col) {
    const ModeTuple& kvec = f2.state(col);
    // W |k⃗> = f†_{k_1} f†_{k_2} |0>, so apply k_2 first.
    Matrix fd_k2 = Matrix::Zero(f1.dim(), 1);
    for (int l = 0; l < modes; ++l) fd_k2 += v(l, kvec[1]) * creation(l, vac).matrix;
    Matrix fd_k1 = Matrix::Zero(f2.dim(), f1.dim());
    for (int l = 0; l < modes; ++l) fd_k1 += v(l, kvec[0]) * creation(l, f1).matrix;
    const Matrix column = fd_k1 * fd_k2;
    CHECK(max_abs(w.matrix.col(col) - column.col(0)) < 1e-12);
  }

  CHECK(w.is_unitary());
  CHECK(max_abs(induced_unitary(Matrix::Identity(modes, modes), f2).matrix -
                Matrix::Identity(f2.dim(), f2.dim())) == 0.0);

  // N = 1 reduces to V itself; composition is a homomorphism.
  CHECK(max_abs(induced_unitary(v, f1).matrix - v) < 1e-12);
  const Matrix v2 = haar_unitary(modes, rng);
  CHECK(max_abs(induced_unitary(v * v2, f2).matrix -
                induced_unitary(v, f2).matrix * induced_unitary(v2, f2).matrix) < 1e-10);
}

TEST_CASE("induced unitary rejects non-unitary input") {
  const FockBasis f2 = FockBasis::enumerate(2, 3);
  Matrix bad = Matrix::Identity(3, 3);
  bad(0, 0) = 2.0;
  CHECK_THROWS_AS(induced_unitary(bad, f2), std::invalid_argument);
}

TEST_CASE("density matrix validation") {
  const FockBasis f1 = FockBasis::enumerate(1, 2);
  DensityMatrix ok{f1, Matrix::Identity(2, 2) / 2.0};
  CHECK_NOTHROW(ok.validate());

  DensityMatrix bad_trace{f1, Matrix::Identity(2, 2)};
  CHECK_THROWS_AS(bad_trace.validate(), std::invalid_argument);

  Matrix neg = Matrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  DensityMatrix not_psd{f1, neg};
  CHECK_THROWS_AS(not_psd.validate(), std::invalid_argument);
}
