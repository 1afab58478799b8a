#include "fermimap/fock.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fermimap {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

FockBasis::FockBasis(int num_particles, int num_modes)
    : num_particles_(num_particles), num_modes_(num_modes) {}

FockBasis FockBasis::enumerate(int num_particles, int num_modes) {
  if (num_modes <= 0) throw std::invalid_argument("mode count must be positive");
  if (num_particles < 0) throw std::invalid_argument("particle count must be non-negative");
  if (num_particles > num_modes)
    throw std::invalid_argument("exclusion violation: more particles than modes");

  FockBasis basis(num_particles, num_modes);
  ModeTuple current(static_cast<std::size_t>(num_particles));
  // Lexicographic enumeration of strictly increasing tuples.
  auto recurse = [&](auto&& self, int depth, int first) -> void {
    if (depth == num_particles) {
      basis.index_[current] = static_cast<Eigen::Index>(basis.states_.size());
      basis.states_.push_back(current);
      return;
    }
    for (int k = first; k < num_modes; ++k) {
      current[static_cast<std::size_t>(depth)] = k;
      self(self, depth + 1, k + 1);
    }
  };
  recurse(recurse, 0, 0);
  return basis;
}

Eigen::Index FockBasis::index_of(const ModeTuple& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) {
    std::ostringstream os;
    os << "tuple not in basis: (";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << ")";
    throw std::invalid_argument(os.str());
  }
  return it->second;
}

bool FockBasis::contains(const ModeTuple& t) const { return index_.count(t) > 0; }

FermionOperator FermionOperator::operator*(const FermionOperator& rhs) const {
  if (domain != rhs.codomain)
    throw std::invalid_argument("operator composition: inner bases disagree");
  return {rhs.domain, codomain, matrix * rhs.matrix};
}

FermionOperator FermionOperator::operator+(const FermionOperator& rhs) const {
  if (domain != rhs.domain || codomain != rhs.codomain)
    throw std::invalid_argument("operator sum: bases disagree");
  return {domain, codomain, matrix + rhs.matrix};
}

FermionOperator FermionOperator::operator-(const FermionOperator& rhs) const {
  if (domain != rhs.domain || codomain != rhs.codomain)
    throw std::invalid_argument("operator difference: bases disagree");
  return {domain, codomain, matrix - rhs.matrix};
}

bool FermionOperator::is_hermitian(double tol) const {
  if (domain != codomain) return false;
  return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double FermionOperator::unitarity_defect() const {
  if (domain != codomain) return std::numeric_limits<double>::infinity();
  const Matrix id = Matrix::Identity(matrix.rows(), matrix.cols());
  return (matrix.adjoint() * matrix - id).cwiseAbs().maxCoeff();
}

bool FermionOperator::is_unitary(double tol) const { return unitarity_defect() <= tol; }

void DensityMatrix::validate(double structural_tol, double psd_tol) const {
  if (matrix.rows() != basis.dim() || matrix.cols() != basis.dim())
    throw std::invalid_argument("density matrix shape does not match basis");
  const double herm = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
  if (herm > structural_tol)
    throw std::invalid_argument("density matrix not Hermitian, deviation " + std::to_string(herm));
  const double tr = std::abs(matrix.trace() - Complex(1.0, 0.0));
  if (tr > structural_tol)
    throw std::invalid_argument("density matrix trace deviates from 1 by " + std::to_string(tr));
  Eigen::SelfAdjointEigenSolver<Matrix> es(matrix, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -psd_tol)
    throw std::invalid_argument("density matrix not PSD, min eigenvalue " +
                                std::to_string(min_eig));
}

FermionOperator identity_on(const FockBasis& basis) {
  return {basis, basis, Matrix::Identity(basis.dim(), basis.dim())};
}

FermionOperator zero_operator(const FockBasis& from, const FockBasis& to) {
  return {from, to, Matrix::Zero(to.dim(), from.dim())};
}

FermionOperator creation(int mode, const FockBasis& from) {
  if (mode < 0 || mode >= from.num_modes())
    throw std::invalid_argument("mode index out of range");
  const FockBasis to = FockBasis::enumerate(from.num_particles() + 1, from.num_modes());
  Matrix m = Matrix::Zero(to.dim(), from.dim());
  for (Eigen::Index c = 0; c < from.dim(); ++c) {
    const ModeTuple& t = from.state(c);
    if (std::binary_search(t.begin(), t.end(), mode)) continue;  // Pauli exclusion
    ModeTuple target = t;
    const auto pos = std::lower_bound(target.begin(), target.end(), mode);
    const auto below = static_cast<int>(pos - target.begin());
    target.insert(pos, mode);
    const double sign = (below % 2 == 0) ? 1.0 : -1.0;
    m(to.index_of(target), c) = sign;
  }
  return {from, to, m};
}

FermionOperator annihilation(int mode, const FockBasis& from) {
  if (mode < 0 || mode >= from.num_modes())
    throw std::invalid_argument("mode index out of range");
  if (from.num_particles() == 0) return zero_operator(from, from);  // a_k|0> = 0
  const FockBasis to = FockBasis::enumerate(from.num_particles() - 1, from.num_modes());
  return creation(mode, to).adjoint();
}

FermionOperator creation_string(const ModeTuple& modes, const FockBasis& from) {
  std::set<int> seen(modes.begin(), modes.end());
  if (seen.size() != modes.size())
    throw std::invalid_argument("exclusion violation: repeated mode in creation string");
  FermionOperator op = identity_on(from);
  // Rightmost operator in a†_{μ_1}···a†_{μ_n} acts first.
  for (auto it = modes.rbegin(); it != modes.rend(); ++it) op = creation(*it, op.codomain) * op;
  return op;
}

FermionOperator annihilation_string(const ModeTuple& modes, const FockBasis& from) {
  FockBasis target = FockBasis::enumerate(
      from.num_particles() - static_cast<int>(modes.size()), from.num_modes());
  return creation_string(modes, target).adjoint();
}

FermionOperator induced_unitary(const Matrix& sp_unitary, const FockBasis& basis) {
  if (sp_unitary.rows() != basis.num_modes() || sp_unitary.cols() != basis.num_modes())
    throw std::invalid_argument("single-particle unitary dimension mismatch");
  const Matrix id = Matrix::Identity(sp_unitary.rows(), sp_unitary.cols());
  const double defect = (sp_unitary.adjoint() * sp_unitary - id).cwiseAbs().maxCoeff();
  if (defect > kSpectralTol)
    throw std::invalid_argument("matrix is not unitary, defect " + std::to_string(defect));

  const int n = basis.num_particles();
  Matrix w = Matrix::Zero(basis.dim(), basis.dim());
  Matrix sub(n, n);
  for (Eigen::Index col = 0; col < basis.dim(); ++col) {
    const ModeTuple& kvec = basis.state(col);
    for (Eigen::Index row = 0; row < basis.dim(); ++row) {
      const ModeTuple& mvec = basis.state(row);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sub(i, j) = sp_unitary(mvec[static_cast<std::size_t>(i)],
                                                           kvec[static_cast<std::size_t>(j)]);
      w(row, col) = (n == 0) ? Complex(1.0, 0.0) : sub.determinant();
    }
  }
  return {basis, basis, w};
}

FermionOperator number_operator(int mode, const FockBasis& basis) {
  if (mode < 0 || mode >= basis.num_modes())
    throw std::invalid_argument("mode index out of range");
  Matrix m = Matrix::Zero(basis.dim(), basis.dim());
  for (Eigen::Index i = 0; i < basis.dim(); ++i) {
    const ModeTuple& t = basis.state(i);
    if (std::binary_search(t.begin(), t.end(), mode)) m(i, i) = 1.0;
  }
  return {basis, basis, m};
}

Vector slater_vector(const ModeTuple& modes, const FockBasis& basis) {
  const FockBasis vac = FockBasis::enumerate(0, basis.num_modes());
  const FermionOperator op = creation_string(modes, vac);
  if (op.codomain != basis) throw std::invalid_argument("slater_vector: basis mismatch");
  return op.matrix.col(0);
}

DensityMatrix slater_state(const ModeTuple& modes, const FockBasis& basis) {
  const Vector v = slater_vector(modes, basis);
  return {basis, v * v.adjoint()};
}

}  // namespace fermimap
