#pragma once

#include "fermimap/fock.hpp"
#include "fermimap/maps.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace fermimap {

/// Dynamical matrix D = Σ_j vec(K_j)vec(K_j)† with the convention
/// vec(|x⟩⟨y|) = |x⟩⊗|y⟩ (row-major stacking of K).
struct ChoiMatrix {
  Matrix matrix;
  static constexpr const char* kVecConvention = "ket-tensor-ket";
};

struct CpReport {
  bool completely_positive = false;
  double min_eigenvalue = 0.0;
};

struct BoundReport {
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
  std::uint64_t seed = 0;
  std::string parameters;
};

Vector vec_row_major(const Matrix& m);

ChoiMatrix choi_from_kraus(const KrausSet& ks);
ChoiMatrix choi_from_kraus(const std::vector<Matrix>& operators);

/// CP iff the minimum eigenvalue of the (Hermitian) Choi matrix is >= -tol.
CpReport is_cp(const ChoiMatrix& d, double tol = kSpectralTol);

double trace_norm(const Matrix& m);
double trace_norm_distance(const ChoiMatrix& d1, const ChoiMatrix& d2);

/// Builds the two-fermion unitary V with a†_ν a†_k|0⟩ = V a†_μ a†_k|0⟩,
/// realized as the induced unitary of the mode transposition μ↔ν (identity
/// on states occupying neither mode).
FermionOperator mode_swap_unitary(int mu, int nu, const FockBasis& basis);

/// Checks ‖D_Φ - D_Λ‖₁ ≤ d²L²·sup‖dyad - Vᵀ dyad V*‖₁ for the maps with
/// Kraus operators f_j U a†_μ and f_j U V a†_μ. `v_override` substitutes an
/// explicit V on F_2 (test hook); by default V = mode_swap_unitary(μ, ν).
BoundReport fermionic_bound_check(const FermionOperator& u_t, int mu, int nu,
                                  const std::optional<Matrix>& sp_basis = std::nullopt,
                                  const std::optional<Matrix>& v_override = std::nullopt);

/// Checks ‖D_Φ - D_Λ‖₁ ≤ d_S²·‖|0⟩⟨0| - V_E|0⟩⟨0|V_E†‖₁ for the
/// distinguishable-particle maps K_a = ⟨a|U_SE|0⟩ and E_a = ⟨a|U_SE(I⊗V_E)|0⟩.
BoundReport distinguishable_bound_check(const Matrix& u_se, const Matrix& v_e, int d_s, int d_e);

}  // namespace fermimap
