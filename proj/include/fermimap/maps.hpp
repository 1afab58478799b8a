#pragma once

#include "fermimap/fock.hpp"

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace fermimap {

/// Pure two-fermion family with a fixed reference mode μ:
/// global states a†_μ a†_k |0⟩⟨0| a_k a_μ for k ≠ μ.
struct Pure2Spec {
  int reference_mode = 0;
};

/// Mixed two-fermion family: Σ carries a fixed distribution p, Γ a free
/// distribution q, Σ ∩ Γ = ∅.
struct Mixed2Spec {
  std::vector<int> sigma;
  std::vector<double> p;
  std::vector<int> gamma;
  std::vector<double> q;
};

/// N-fermion family: N-1 mode sets Σ_i with a fixed joint distribution p on
/// pairwise-distinct tuples, plus Γ with a free distribution q.
struct GeneralNSpec {
  std::vector<std::vector<int>> sigma;                  // Σ_1, …, Σ_{N-1}
  std::vector<std::pair<ModeTuple, double>> p;          // support of p(μ⃗)
  std::vector<int> gamma;
  std::vector<double> q;
};

struct DomainSpec {
  std::variant<Pure2Spec, Mixed2Spec, GeneralNSpec> variant;
  int num_modes = 0;      // L+1
  int num_particles = 2;  // N

  void validate() const;  // throws std::invalid_argument on violation
  std::vector<int> sigma_union() const;  // {μ} for Pure2, ∪Σ_i otherwise
};

/// Ordered list of single-particle Kraus operators with the domain they are
/// guaranteed on. Operators are (L+1) x (L+1) matrices in the mode basis.
struct KrausSet {
  std::vector<Matrix> operators;
  DomainSpec domain;
  double time = 0.0;
};

struct DomainStatePair {
  DensityMatrix global;   // N-fermion state
  DensityMatrix reduced;  // its single-particle reduction
};

/// Representative (global, reduced) pairs of the family described by `spec`.
/// For Pure2 one pair per k ≠ μ; for Mixed2/GeneralN the q-simplex corners
/// plus the given q.
std::vector<DomainStatePair> domain_states(const DomainSpec& spec);

/// Π_{m∈Σ}(1 - n_m): diagonal projector onto states with no occupation in Σ.
FermionOperator exclusion_projector(const std::vector<int>& sigma, const FockBasis& basis);

/// Kraus operators K_l = f_l U_t a†_μ for the pure two-fermion family.
/// sp_basis, when given, defines f†_l = Σ_m V_{lm} a†_m (default f = a).
KrausSet kraus_pure2(const FermionOperator& u_t, int reference_mode,
                     const std::optional<Matrix>& sp_basis = std::nullopt, double time = 0.0);

/// Kraus operators K_{l,μ} = f_l U_t a†_μ √p(μ) Π_Σ, indexed row-major with
/// l outer.
KrausSet kraus_mixed2(const FermionOperator& u_t, const DomainSpec& spec,
                      const std::optional<Matrix>& sp_basis = std::nullopt, double time = 0.0);

/// Kraus operators K_{l⃗,μ⃗} = √p(μ⃗) f_{l⃗} U a†_{μ⃗} Π_{∪Σ}, with l⃗ running
/// over sorted (N-1)-tuples and μ⃗ over the support of p.
KrausSet kraus_general_n(const FermionOperator& u_t, const DomainSpec& spec,
                         const std::optional<Matrix>& sp_basis = std::nullopt, double time = 0.0);

/// Operator-sum action Σ_j K_j ρ K†_j. Total on all inputs; trace is
/// preserved only on the declared domain.
DensityMatrix apply_map(const KrausSet& ks, const DensityMatrix& rho_r);
Matrix apply_map_raw(const KrausSet& ks, const Matrix& rho_r);

/// Σ_j K†_j K_j. Diagonal in the mode basis for all constructed sets.
Matrix tp_defect(const KrausSet& ks);

/// Membership predicate for the reduced-state family of `spec`.
bool in_domain(const DomainSpec& spec, const DensityMatrix& rho_r, double tol = kSpectralTol);

}  // namespace fermimap
