#pragma once

#include "fermimap/fock.hpp"
#include "fermimap/maps.hpp"

namespace fermimap {

/// Quadratic (non-interacting) model H = Σ_{ij} M_{ij} a†_i a_j.
struct QuadraticModel {
  Matrix single_particle;  // Hermitian (L+1)x(L+1)
};

/// Two-site dimer of spin-1/2 fermions at half filling. Hopping amplitude is
/// fixed at 1; u is the on-site and v the intersite interaction. Mode order:
/// (1↑, 1↓, 2↑, 2↓) -> (0, 1, 2, 3).
struct DimerModel {
  double u = 0.0;
  double v = 0.0;
};

/// Assembles Σ_{ij} M_{ij} a†_i a_j on the N-particle sector.
FermionOperator quadratic_many_body(const Matrix& m, int num_particles);

/// exp(-iHt) via Hermitian eigendecomposition.
FermionOperator unitary_at_time(const FermionOperator& h, double t);

/// Closed-form Kraus set for the quadratic model, assembled directly from
/// the eigendata of M and expressed in the mode basis. Matches the generic
/// construction at the Choi level.
KrausSet noninteracting_kraus_closed_form(const Matrix& m, int mu, double t);

struct UnitarityReport {
  double max_trace_norm_deviation = 0.0;
  double max_purity_deviation = 0.0;
  bool passed = false;
};

/// Verifies that the quadratic-model map acts on its domain as conjugation
/// by the single-particle unitary exp(-iMt).
UnitarityReport noninteracting_unitarity_check(const Matrix& m, int mu, double t,
                                               double tol = kSpectralTol);

/// H = -Σ_σ(a†_{1σ}a_{2σ} + h.c.) + u Σ_j n_{j↑}n_{j↓} + v n_1 n_2 on F_2^4.
FermionOperator dimer_hamiltonian(double u, double v);

/// Same model with the hopping term switched off (test hook).
FermionOperator dimer_interaction_only(double u, double v);

/// Hand-tabulated 6x6 matrix form of the dimer Hamiltonian kept for
/// comparison; entry (4,1) is v here while the operator assembly gives 0.
Matrix dimer_tabulated_hamiltonian(double u, double v);

struct DimerDiagonalization {
  Matrix v;                       // 6x6 analytic eigenvector rows
  Eigen::VectorXd d;              // diag(u, v, v, v, E-, E+)
  double a = 0.0;                 // amplitudes entering the last two rows
  double b = 0.0;
  double normalization_defect = 0.0;   // |a² + b² - 1/2|
  double residual_v_h_vdag = 0.0;      // ‖V H V† - D‖_max
  double residual_vdag_h_v = 0.0;      // ‖V† H V - D‖_max
};

/// Analytic diagonalization of the dimer Hamiltonian.
DimerDiagonalization dimer_analytic_diag(double u, double v);

/// Pure2 Kraus set for the dimer at time t with reference mode μ.
KrausSet dimer_kraus(double u, double v, double t, int mu);

}  // namespace fermimap
