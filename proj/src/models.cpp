#include "fermimap/models.hpp"

#include "fermimap/reduce.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fermimap {

namespace {

void check_hermitian(const Matrix& m, double tol, const std::string& what) {
  const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tol)
    throw std::invalid_argument(what + " is not Hermitian, deviation " + std::to_string(dev));
}

}  // namespace

FermionOperator quadratic_many_body(const Matrix& m, int num_particles) {
  check_hermitian(m, kStructuralTol, "single-particle matrix");
  const int modes = static_cast<int>(m.rows());
  const FockBasis fn = FockBasis::enumerate(num_particles, modes);
  if (num_particles == 0) return zero_operator(fn, fn);

  const FockBasis lower = FockBasis::enumerate(num_particles - 1, modes);
  Matrix h = Matrix::Zero(fn.dim(), fn.dim());
  for (int i = 0; i < modes; ++i) {
    const Matrix ci = creation(i, lower).matrix;
    for (int j = 0; j < modes; ++j) {
      if (m(i, j) == Complex(0.0, 0.0)) continue;
      h += m(i, j) * (ci * annihilation(j, fn).matrix);
    }
  }
  return {fn, fn, h};
}

FermionOperator unitary_at_time(const FermionOperator& h, double t) {
  if (h.domain != h.codomain) throw std::invalid_argument("Hamiltonian must be square");
  check_hermitian(h.matrix, kSpectralTol, "Hamiltonian");
  Eigen::SelfAdjointEigenSolver<Matrix> es((h.matrix + h.matrix.adjoint()) / 2.0);
  const Eigen::VectorXd evals = es.eigenvalues();
  Vector phases(evals.size());
  for (Eigen::Index i = 0; i < evals.size(); ++i)
    phases(i) = std::exp(Complex(0.0, -evals(i) * t));
  const Matrix u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  return {h.domain, h.codomain, u};
}

KrausSet noninteracting_kraus_closed_form(const Matrix& m, int mu, double t) {
  check_hermitian(m, kStructuralTol, "single-particle matrix");
  const int modes = static_cast<int>(m.rows());
  if (mu < 0 || mu >= modes) throw std::invalid_argument("reference mode out of range");

  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  const Eigen::VectorXd lambda = es.eigenvalues();
  // b†_k = Σ_i V_{ki} a†_i with V the transpose of the eigenvector matrix.
  const Matrix v = es.eigenvectors().transpose();

  KrausSet ks{{}, DomainSpec{Pure2Spec{mu}, modes, 2}, t};
  for (int l = 0; l < modes; ++l) {
    Matrix kb = Matrix::Zero(modes, modes);
    for (int mm = 0; mm < modes; ++mm) {
      const Complex phase = std::exp(Complex(0.0, -t * (lambda(l) + lambda(mm))));
      kb(mm, mm) += phase * std::conj(v(l, mu));
      kb(mm, l) -= phase * std::conj(v(mm, mu));
    }
    // Convert from eigenmode coordinates to the mode basis.
    ks.operators.push_back(v.transpose() * kb * v.conjugate());
  }
  return ks;
}

UnitarityReport noninteracting_unitarity_check(const Matrix& m, int mu, double t, double tol) {
  const FermionOperator h2 = quadratic_many_body(m, 2);
  const FermionOperator u2 = unitary_at_time(h2, t);
  const KrausSet ks = kraus_pure2(u2, mu, std::nullopt, t);

  // Single-particle evolution exp(-iMt).
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  Vector phases(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    phases(i) = std::exp(Complex(0.0, -es.eigenvalues()(i) * t));
  const Matrix usp = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();

  UnitarityReport report;
  const auto states = domain_states(ks.domain);
  for (const auto& pair : states) {
    const Matrix mapped = apply_map_raw(ks, pair.reduced.matrix);
    const Matrix expected = usp * pair.reduced.matrix * usp.adjoint();
    Eigen::JacobiSVD<Matrix> svd(mapped - expected);
    report.max_trace_norm_deviation =
        std::max(report.max_trace_norm_deviation, svd.singularValues().sum());
    const double purity_in = (pair.reduced.matrix * pair.reduced.matrix).trace().real();
    const double purity_out = (mapped * mapped).trace().real();
    report.max_purity_deviation =
        std::max(report.max_purity_deviation, std::abs(purity_in - purity_out));
  }
  report.passed = report.max_trace_norm_deviation < tol && report.max_purity_deviation < tol;
  return report;
}

FermionOperator dimer_interaction_only(double u, double v) {
  const FockBasis f2 = FockBasis::enumerate(2, 4);
  const Matrix n0 = number_operator(0, f2).matrix;
  const Matrix n1 = number_operator(1, f2).matrix;
  const Matrix n2 = number_operator(2, f2).matrix;
  const Matrix n3 = number_operator(3, f2).matrix;
  const Matrix h = u * (n0 * n1 + n2 * n3) + v * (n0 + n1) * (n2 + n3);
  return {f2, f2, h};
}

FermionOperator dimer_hamiltonian(double u, double v) {
  const FockBasis f2 = FockBasis::enumerate(2, 4);
  const FockBasis f1 = FockBasis::enumerate(1, 4);
  auto hop = [&](int i, int j) -> Matrix {
    return creation(i, f1).matrix * annihilation(j, f2).matrix;
  };
  // Spin-preserving hopping between the sites: modes (0,2) are up, (1,3) down.
  Matrix h = -(hop(0, 2) + hop(2, 0) + hop(1, 3) + hop(3, 1));
  h += dimer_interaction_only(u, v).matrix;
  return {f2, f2, h};
}

Matrix dimer_tabulated_hamiltonian(double u, double v) {
  Matrix h(6, 6);
  h << u, 0, -1, 1, 0, 0,
       0, v, 0, 0, 0, 0,
       -1, 0, v, 0, 0, -1,
       1, 0, 0, v, 0, 1,
       0, v, 0, 0, v, 0,
       0, 0, -1, 1, 0, u;
  return h;
}

DimerDiagonalization dimer_analytic_diag(double u, double v) {
  const double delta = v - u;
  const double s = std::sqrt(delta * delta + 16.0);
  const double denom = std::sqrt(2.0 * ((delta + s) * (delta + s) + 16.0));
  const double a = (delta + s) / denom;
  const double b = 4.0 / denom;
  const double r = 1.0 / std::sqrt(2.0);

  DimerDiagonalization out;
  out.a = a;
  out.b = b;
  out.normalization_defect = std::abs(a * a + b * b - 0.5);

  Matrix vm(6, 6);
  vm << -r, 0, 0, 0, 0, r,
        0, 0, 0, 0, 1, 0,
        0, 0, r, r, 0, 0,
        0, 1, 0, 0, 0, 0,
        a, 0, b, -b, 0, a,
        b, 0, -a, a, 0, b;
  out.v = vm;

  Eigen::VectorXd d(6);
  d << u, v, v, v, 0.5 * ((u + v) - s), 0.5 * ((u + v) + s);
  out.d = d;

  const Matrix h = dimer_hamiltonian(u, v).matrix;
  const Matrix dm = d.cast<Complex>().asDiagonal();
  out.residual_v_h_vdag = (vm * h * vm.adjoint() - dm).cwiseAbs().maxCoeff();
  out.residual_vdag_h_v = (vm.adjoint() * h * vm - dm).cwiseAbs().maxCoeff();
  return out;
}

KrausSet dimer_kraus(double u, double v, double t, int mu) {
  const FermionOperator h = dimer_hamiltonian(u, v);
  return kraus_pure2(unitary_at_time(h, t), mu, std::nullopt, t);
}

}  // namespace fermimap
