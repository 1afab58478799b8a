#include "fermimap/choi.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fermimap {

Vector vec_row_major(const Matrix& m) {
  Vector v(m.rows() * m.cols());
  for (Eigen::Index x = 0; x < m.rows(); ++x)
    for (Eigen::Index y = 0; y < m.cols(); ++y) v(x * m.cols() + y) = m(x, y);
  return v;
}

ChoiMatrix choi_from_kraus(const std::vector<Matrix>& operators) {
  if (operators.empty()) throw std::invalid_argument("empty Kraus set");
  const Eigen::Index d2 = operators.front().rows() * operators.front().cols();
  Matrix d = Matrix::Zero(d2, d2);
  for (const Matrix& k : operators) {
    const Vector v = vec_row_major(k);
    d += v * v.adjoint();
  }
  return {d};
}

ChoiMatrix choi_from_kraus(const KrausSet& ks) { return choi_from_kraus(ks.operators); }

CpReport is_cp(const ChoiMatrix& d, double tol) {
  const double herm = (d.matrix - d.matrix.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kSpectralTol)
    throw std::invalid_argument("Choi matrix not Hermitian, deviation " + std::to_string(herm));
  Eigen::SelfAdjointEigenSolver<Matrix> es(d.matrix, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  return {min_eig >= -tol, min_eig};
}

double trace_norm(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

double trace_norm_distance(const ChoiMatrix& d1, const ChoiMatrix& d2) {
  if (d1.matrix.rows() != d2.matrix.rows() || d1.matrix.cols() != d2.matrix.cols())
    throw std::invalid_argument("Choi matrix dimension mismatch");
  return trace_norm(d1.matrix - d2.matrix);
}

FermionOperator mode_swap_unitary(int mu, int nu, const FockBasis& basis) {
  if (mu == nu) throw std::invalid_argument("mode swap requires distinct modes");
  const int modes = basis.num_modes();
  Matrix perm = Matrix::Identity(modes, modes);
  perm(mu, mu) = 0.0;
  perm(nu, nu) = 0.0;
  perm(mu, nu) = 1.0;
  perm(nu, mu) = 1.0;
  return induced_unitary(perm, basis);
}

BoundReport fermionic_bound_check(const FermionOperator& u_t, int mu, int nu,
                                  const std::optional<Matrix>& sp_basis,
                                  const std::optional<Matrix>& v_override) {
  if (!v_override && mu == nu)
    throw std::invalid_argument("reference modes must be distinct");
  const FockBasis f2 = u_t.domain;
  const Matrix v = v_override ? *v_override : mode_swap_unitary(mu, nu, f2).matrix;

  const KrausSet phi = kraus_pure2(u_t, mu, sp_basis);
  const FermionOperator uv{f2, f2, u_t.matrix * v};
  const KrausSet lambda = kraus_pure2(uv, mu, sp_basis);

  const double lhs = trace_norm_distance(choi_from_kraus(phi), choi_from_kraus(lambda));

  // rhs: d²L²·sup over Slater dyads; L counts 2-fermion basis states with
  // mode μ occupied.
  const double d = static_cast<double>(f2.dim());
  double occupied = 0.0;
  for (const ModeTuple& t : f2.states())
    if (std::binary_search(t.begin(), t.end(), mu)) occupied += 1.0;
  double sup = 0.0;
  for (Eigen::Index r = 0; r < f2.dim(); ++r) {
    for (Eigen::Index c = 0; c < f2.dim(); ++c) {
      Matrix dyad = Matrix::Zero(f2.dim(), f2.dim());
      dyad(r, c) = 1.0;
      const Matrix diff = dyad - v.transpose() * dyad * v.conjugate();
      sup = std::max(sup, trace_norm(diff));
    }
  }
  const double rhs = d * d * occupied * occupied * sup;

  BoundReport report;
  report.lhs = lhs;
  report.rhs = rhs;
  report.satisfied = lhs <= rhs + 1e-9;
  std::ostringstream os;
  os << "mu=" << mu << ",nu=" << nu << ",modes=" << f2.num_modes();
  report.parameters = os.str();
  return report;
}

BoundReport distinguishable_bound_check(const Matrix& u_se, const Matrix& v_e, int d_s, int d_e) {
  const Eigen::Index dim = static_cast<Eigen::Index>(d_s) * d_e;
  if (u_se.rows() != dim || u_se.cols() != dim)
    throw std::invalid_argument("global unitary does not factor as d_S*d_E");
  if (v_e.rows() != d_e || v_e.cols() != d_e)
    throw std::invalid_argument("environment unitary dimension mismatch");

  // Kraus operators K_a = <a|_E U |0>_E on the S ⊗ E ordering.
  auto environment_slices = [&](const Matrix& u) {
    std::vector<Matrix> ops;
    for (int a = 0; a < d_e; ++a) {
      Matrix k(d_s, d_s);
      for (int i = 0; i < d_s; ++i)
        for (int j = 0; j < d_s; ++j) k(i, j) = u(i * d_e + a, j * d_e + 0);
      ops.push_back(std::move(k));
    }
    return ops;
  };

  // U (I_S ⊗ V_E), blockwise.
  Matrix u2(dim, dim);
  for (int bi = 0; bi < d_s; ++bi)
    for (int bj = 0; bj < d_s; ++bj)
      u2.block(bi * d_e, bj * d_e, d_e, d_e) = u_se.block(bi * d_e, bj * d_e, d_e, d_e) * v_e;

  const double lhs = trace_norm_distance(choi_from_kraus(environment_slices(u_se)),
                                         choi_from_kraus(environment_slices(u2)));
  Vector e0 = Vector::Zero(d_e);
  e0(0) = 1.0;
  const Vector w = v_e * e0;
  const double rhs = static_cast<double>(d_s) * d_s *
                     trace_norm(e0 * e0.adjoint() - w * w.adjoint());

  BoundReport report;
  report.lhs = lhs;
  report.rhs = rhs;
  report.satisfied = lhs <= rhs + 1e-9;
  std::ostringstream os;
  os << "d_S=" << d_s << ",d_E=" << d_e;
  report.parameters = os.str();
  return report;
}

}  // namespace fermimap
