#pragma once

#include "fermimap/choi.hpp"
#include "fermimap/fock.hpp"
#include "fermimap/maps.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace fermimap {

struct VerificationReport {
  std::string scenario;
  int num_cases = 0;
  double max_trace_norm_deviation = 0.0;
  double tp_defect_deviation = 0.0;
  double cp_min_eigenvalue = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::uint64_t seed = 0;
};

using Rng = std::mt19937_64;

/// Haar-like random unitary via QR of a complex Gaussian matrix, with the
/// diagonal of R phase-fixed for determinism.
Matrix haar_unitary(Eigen::Index dim, Rng& rng);
Matrix random_hermitian(Eigen::Index dim, Rng& rng);

/// Random unitary restricted to the N-particle sector, i.e. a
/// number-preserving evolution.
FermionOperator random_sector_unitary(const FockBasis& basis, Rng& rng);

/// Kraus set appropriate to the spec variant.
KrausSet build_kraus(const FermionOperator& u_t, const DomainSpec& spec,
                     const std::optional<Matrix>& sp_basis = std::nullopt, double time = 0.0);

/// Max trace-norm deviation between apply_map on the reduced domain states
/// and global-evolve-then-trace.
double oracle_deviation(const KrausSet& ks, const FermionOperator& u_t, const DomainSpec& spec);

/// Compares the reduced map against the brute-force oracle on every domain
/// state; also records the TP-defect structure deviation and the Choi
/// minimum eigenvalue.
VerificationReport oracle_compare(const FermionOperator& u_t, const DomainSpec& spec,
                                  const std::optional<Matrix>& sp_basis = std::nullopt,
                                  std::uint64_t seed = 0);

/// Expected TP-defect diagonal: 0 on ∪Σ, N elsewhere (2 off-μ for Pure2).
double tp_defect_structure_deviation(const KrausSet& ks);

struct ProbeCandidate {
  std::string description;
  double deviation = 0.0;
};

struct ProbeReport {
  bool found = false;
  double worst_deviation = 0.0;
  Matrix witness;  // reduced state achieving the worst deviation
  std::vector<ProbeCandidate> candidates;
};

/// Searches a fixed family of out-of-domain global states (coherent
/// superpositions of Slater states and Slaters avoiding μ) for map-vs-oracle
/// disagreement beyond 1e-6.
ProbeReport out_of_domain_probe(const FermionOperator& u_t, const DomainSpec& spec,
                                double threshold = 1e-6);

/// Runs the whole battery: algebra and completeness identities, TP-defect
/// structure, CP checks, oracle sweeps for all three domain variants, the
/// non-interacting unitarity check, the dimer diagonalization grid, and both
/// norm-bound sweeps. Deterministic for a given seed.
std::vector<VerificationReport> full_suite(std::uint64_t seed);

/// Subsets of full_suite, selectable from the CLI.
std::vector<VerificationReport> algebra_suite();
std::vector<VerificationReport> oracle_suite(std::uint64_t seed);
std::vector<VerificationReport> model_suite(std::uint64_t seed);
std::vector<VerificationReport> bound_suite(std::uint64_t seed);

}  // namespace fermimap
