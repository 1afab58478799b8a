#include "fermimap/reduce.hpp"

#include <stdexcept>
#include <string>

namespace fermimap {

DensityMatrix trace_out_one(const DensityMatrix& rho, const std::optional<Matrix>& sp_basis) {
  const int n = rho.basis.num_particles();
  const int modes = rho.basis.num_modes();
  if (n == 0) throw std::invalid_argument("cannot trace vacuum");
  if (sp_basis) {
    if (sp_basis->rows() != modes || sp_basis->cols() != modes)
      throw std::invalid_argument("sp_basis dimension mismatch");
    const Matrix id = Matrix::Identity(modes, modes);
    const double defect = (sp_basis->adjoint() * (*sp_basis) - id).cwiseAbs().maxCoeff();
    if (defect > kSpectralTol)
      throw std::invalid_argument("sp_basis is not unitary, defect " + std::to_string(defect));
  }

  const FockBasis target = FockBasis::enumerate(n - 1, modes);
  std::vector<Matrix> ann(static_cast<std::size_t>(modes));
  for (int l = 0; l < modes; ++l) ann[static_cast<std::size_t>(l)] = annihilation(l, rho.basis).matrix;

  Matrix out = Matrix::Zero(target.dim(), target.dim());
  for (int k = 0; k < modes; ++k) {
    Matrix fk;
    if (sp_basis) {
      // f†_k = Σ_l V_{kl} a†_l  =>  f_k = Σ_l conj(V_{kl}) a_l.
      fk = Matrix::Zero(target.dim(), rho.basis.dim());
      for (int l = 0; l < modes; ++l) fk += std::conj((*sp_basis)(k, l)) * ann[static_cast<std::size_t>(l)];
    } else {
      fk = ann[static_cast<std::size_t>(k)];
    }
    out += fk * rho.matrix * fk.adjoint();
  }
  out /= static_cast<double>(n);
  return {target, out};
}

DensityMatrix trace_to_single(const DensityMatrix& rho) {
  const int n = rho.basis.num_particles();
  if (n == 0) throw std::invalid_argument("cannot trace vacuum");
  DensityMatrix reduced = rho;
  for (int step = n; step > 1; --step) reduced = trace_out_one(reduced);

  // Sign-bookkeeping guard: (ρ_r)_{ij} = (1/N) Tr(a†_j a_i ρ).
  const int modes = rho.basis.num_modes();
  const FockBasis lower = FockBasis::enumerate(n - 1, modes);
  Matrix cross = Matrix::Zero(modes, modes);
  for (int i = 0; i < modes; ++i) {
    const Matrix ci = creation(i, lower).matrix;
    for (int j = 0; j < modes; ++j) {
      const Matrix aj = annihilation(j, rho.basis).matrix;
      cross(i, j) = ((ci * aj).transpose().cwiseProduct(rho.matrix)).sum() /
                    static_cast<double>(n);
    }
  }
  // cross(i,j) = (1/N) Tr(a†_i a_j ρ); the reduced matrix is its transpose.
  const double dev = (reduced.matrix - cross.transpose()).cwiseAbs().maxCoeff();
  if (dev > 1e-10)
    throw std::logic_error("partial trace cross-check failed, deviation " + std::to_string(dev));
  return reduced;
}

}  // namespace fermimap
