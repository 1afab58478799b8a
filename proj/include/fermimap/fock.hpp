#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fermimap {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Tolerances used across the library: structural identities (Hermiticity,
// trace, exact algebra) at 1e-12; spectral/unitarity/PSD checks at 1e-10.
inline constexpr double kStructuralTol = 1e-12;
inline constexpr double kSpectralTol = 1e-10;

// Occupied modes of a Slater determinant, strictly increasing.
using ModeTuple = std::vector<int>;

/// Ordered enumeration of the N-fermion occupation basis over L+1 modes.
/// States are strictly increasing mode tuples in lexicographic order; the
/// reference ket convention is |k⃗⟩ = a†_{k_1}···a†_{k_N}|0⟩ with k_1<…<k_N.
class FockBasis {
 public:
  static FockBasis enumerate(int num_particles, int num_modes);

  int num_particles() const { return num_particles_; }
  int num_modes() const { return num_modes_; }
  Eigen::Index dim() const { return static_cast<Eigen::Index>(states_.size()); }

  const std::vector<ModeTuple>& states() const { return states_; }
  const ModeTuple& state(Eigen::Index i) const { return states_[static_cast<std::size_t>(i)]; }

  // Position of a sorted tuple in the basis; throws if absent.
  Eigen::Index index_of(const ModeTuple& t) const;
  bool contains(const ModeTuple& t) const;

  bool operator==(const FockBasis& other) const {
    return num_particles_ == other.num_particles_ && num_modes_ == other.num_modes_;
  }
  bool operator!=(const FockBasis& other) const { return !(*this == other); }

 private:
  FockBasis(int num_particles, int num_modes);

  int num_particles_ = 0;
  int num_modes_ = 0;
  std::vector<ModeTuple> states_;
  std::map<ModeTuple, Eigen::Index> index_;
};

/// Dense operator between two fermionic sectors. The matrix has shape
/// codomain.dim() x domain.dim(); composition checks that inner bases agree.
struct FermionOperator {
  FockBasis domain;
  FockBasis codomain;
  Matrix matrix;

  FermionOperator adjoint() const { return {codomain, domain, matrix.adjoint()}; }

  // Operator composition (*this) ∘ rhs.
  FermionOperator operator*(const FermionOperator& rhs) const;
  FermionOperator operator+(const FermionOperator& rhs) const;
  FermionOperator operator-(const FermionOperator& rhs) const;
  FermionOperator operator*(Complex scale) const { return {domain, codomain, scale * matrix}; }

  bool is_hermitian(double tol = kStructuralTol) const;
  bool is_unitary(double tol = kSpectralTol) const;
  double unitarity_defect() const;
};

/// Hermitian, unit-trace, PSD matrix over a FockBasis.
struct DensityMatrix {
  FockBasis basis;
  Matrix matrix;

  // Throws std::invalid_argument if Hermiticity/trace/PSD are violated.
  void validate(double structural_tol = kStructuralTol, double psd_tol = kSpectralTol) const;
  double trace_real() const { return matrix.trace().real(); }
};

FermionOperator identity_on(const FockBasis& basis);
FermionOperator zero_operator(const FockBasis& from, const FockBasis& to);

/// a†_k : F_N -> F_{N+1}. Matrix element rule: tuple t without k maps to
/// sorted(t ∪ {k}) with sign (-1)^{#{j in t : j < k}}; zero if k occupied.
FermionOperator creation(int mode, const FockBasis& from);

/// a_k : F_N -> F_{N-1}; adjoint of creation with swapped basis tags.
FermionOperator annihilation(int mode, const FockBasis& from);

/// Left-to-right product a†_{μ_1}···a†_{μ_n} acting on `from`.
/// Throws on repeated modes ("exclusion violation").
FermionOperator creation_string(const ModeTuple& modes, const FockBasis& from);

/// Annihilation string a_{μ_n}···a_{μ_1} adjoint-ordered: the adjoint of
/// creation_string with the same tuple.
FermionOperator annihilation_string(const ModeTuple& modes, const FockBasis& from);

/// Many-body unitary W on F_N induced by a single-particle unitary V: the
/// N-fold antisymmetric compound of V, W a†_{k⃗}|0⟩ = f†_{k_1}···f†_{k_N}|0⟩
/// with f†_k = Σ_l V_{lk} a†_l. Entries are N x N minors of V; W(V1 V2) =
/// W(V1) W(V2) and W = V for N = 1. Throws if V is not unitary.
FermionOperator induced_unitary(const Matrix& sp_unitary, const FockBasis& basis);

/// n_k = a†_k a_k as a diagonal 0/1 matrix on the given sector.
FermionOperator number_operator(int mode, const FockBasis& basis);

/// Slater dyad a†_{k⃗}|0⟩⟨0|a_{k⃗} as a DensityMatrix (pure state).
DensityMatrix slater_state(const ModeTuple& modes, const FockBasis& basis);

/// Column vector of a†_{μ_1}···a†_{μ_n}|0⟩ in the target basis.
Vector slater_vector(const ModeTuple& modes, const FockBasis& basis);

double binomial(int n, int k);

}  // namespace fermimap
