#pragma once

#include "fermimap/fock.hpp"

#include <optional>

namespace fermimap {

/// Fermionic partial trace over one particle, (1/N) Σ_k f_k ρ f†_k mapping
/// F_N to F_{N-1}. When sp_basis is given it defines the orthonormal set
/// f†_k = Σ_l V_{kl} a†_l; the result is independent of that choice.
DensityMatrix trace_out_one(const DensityMatrix& rho,
                            const std::optional<Matrix>& sp_basis = std::nullopt);

/// Iterated partial trace down to the one-particle sector. Cross-checked
/// internally against (ρ_r)_{ij} = (1/N) Tr(a†_j a_i ρ).
DensityMatrix trace_to_single(const DensityMatrix& rho);

}  // namespace fermimap
