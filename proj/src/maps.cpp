#include "fermimap/maps.hpp"

#include "fermimap/reduce.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace fermimap {

namespace {

void check_probability(const std::vector<double>& p, std::size_t expected,
                       const std::string& name) {
  if (p.size() != expected)
    throw std::invalid_argument(name + " weight count does not match its mode set");
  double sum = 0.0;
  for (double w : p) {
    if (w < 0.0) throw std::invalid_argument(name + " has a negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kStructuralTol)
    throw std::invalid_argument(name + " does not sum to 1, got " + std::to_string(sum));
}

void check_mode_set(const std::vector<int>& s, int num_modes, const std::string& name) {
  std::set<int> seen;
  for (int m : s) {
    if (m < 0 || m >= num_modes) throw std::invalid_argument(name + " mode index out of range");
    if (!seen.insert(m).second) throw std::invalid_argument(name + " has a repeated mode");
  }
}

// Annihilation operators f_l on the given sector, rotated by sp_basis when
// present: f_l = Σ_m conj(V_{lm}) a_m.
std::vector<Matrix> rotated_annihilators(const FockBasis& sector,
                                         const std::optional<Matrix>& sp_basis) {
  const int modes = sector.num_modes();
  std::vector<Matrix> ann(static_cast<std::size_t>(modes));
  for (int m = 0; m < modes; ++m) ann[static_cast<std::size_t>(m)] = annihilation(m, sector).matrix;
  if (!sp_basis) return ann;
  if (sp_basis->rows() != modes || sp_basis->cols() != modes)
    throw std::invalid_argument("sp_basis dimension mismatch");
  const Matrix id = Matrix::Identity(modes, modes);
  const double defect = (sp_basis->adjoint() * (*sp_basis) - id).cwiseAbs().maxCoeff();
  if (defect > kSpectralTol)
    throw std::invalid_argument("sp_basis is not unitary, defect " + std::to_string(defect));
  std::vector<Matrix> rotated(static_cast<std::size_t>(modes));
  for (int l = 0; l < modes; ++l) {
    Matrix f = Matrix::Zero(ann[0].rows(), ann[0].cols());
    for (int m = 0; m < modes; ++m) f += std::conj((*sp_basis)(l, m)) * ann[static_cast<std::size_t>(m)];
    rotated[static_cast<std::size_t>(l)] = f;
  }
  return rotated;
}

void check_evolution(const FermionOperator& u_t, const DomainSpec& spec) {
  const FockBasis expected = FockBasis::enumerate(spec.num_particles, spec.num_modes);
  if (u_t.domain != expected || u_t.codomain != expected)
    throw std::invalid_argument("evolution operator does not act on the expected sector");
  const double defect = u_t.unitarity_defect();
  if (defect > kSpectralTol)
    throw std::invalid_argument("evolution operator is not unitary, defect " +
                                std::to_string(defect));
}

void check_tp_defect_diagonal(const KrausSet& ks) {
  const Matrix d = tp_defect(ks);
  Matrix off = d;
  off.diagonal().setZero();
  const double dev = off.cwiseAbs().maxCoeff();
  if (dev > kSpectralTol)
    throw std::logic_error("trace-preservation defect is not diagonal, deviation " +
                           std::to_string(dev));
}

DensityMatrix diagonal_single_particle(const std::vector<double>& weights, int num_modes) {
  const FockBasis f1 = FockBasis::enumerate(1, num_modes);
  Matrix m = Matrix::Zero(f1.dim(), f1.dim());
  for (int k = 0; k < num_modes; ++k) m(k, k) = weights[static_cast<std::size_t>(k)];
  return {f1, m};
}

}  // namespace

std::vector<int> DomainSpec::sigma_union() const {
  std::set<int> u;
  if (const auto* p2 = std::get_if<Pure2Spec>(&variant)) {
    u.insert(p2->reference_mode);
  } else if (const auto* m2 = std::get_if<Mixed2Spec>(&variant)) {
    u.insert(m2->sigma.begin(), m2->sigma.end());
  } else {
    const auto& gn = std::get<GeneralNSpec>(variant);
    for (const auto& s : gn.sigma) u.insert(s.begin(), s.end());
  }
  return {u.begin(), u.end()};
}

void DomainSpec::validate() const {
  if (num_modes <= 0) throw std::invalid_argument("mode count must be positive");
  if (const auto* p2 = std::get_if<Pure2Spec>(&variant)) {
    if (num_particles != 2) throw std::invalid_argument("Pure2 requires N = 2");
    if (p2->reference_mode < 0 || p2->reference_mode >= num_modes)
      throw std::invalid_argument("reference mode out of range");
  } else if (const auto* m2 = std::get_if<Mixed2Spec>(&variant)) {
    if (num_particles != 2) throw std::invalid_argument("Mixed2 requires N = 2");
    if (m2->sigma.empty()) throw std::invalid_argument("Sigma must be non-empty");
    if (m2->gamma.empty()) throw std::invalid_argument("Gamma must be non-empty");
    check_mode_set(m2->sigma, num_modes, "Sigma");
    check_mode_set(m2->gamma, num_modes, "Gamma");
    for (int g : m2->gamma)
      if (std::find(m2->sigma.begin(), m2->sigma.end(), g) != m2->sigma.end())
        throw std::invalid_argument("Sigma and Gamma must be disjoint");
    check_probability(m2->p, m2->sigma.size(), "p");
    check_probability(m2->q, m2->gamma.size(), "q");
  } else {
    const auto& gn = std::get<GeneralNSpec>(variant);
    if (num_particles < 2) throw std::invalid_argument("GeneralN requires N >= 2");
    if (gn.sigma.size() != static_cast<std::size_t>(num_particles - 1))
      throw std::invalid_argument("GeneralN requires N-1 Sigma sets");
    for (const auto& s : gn.sigma) {
      if (s.empty()) throw std::invalid_argument("each Sigma_i must be non-empty");
      check_mode_set(s, num_modes, "Sigma_i");
    }
    const std::vector<int> su = sigma_union();
    if (static_cast<int>(su.size()) < num_particles - 1)
      throw std::invalid_argument("union of Sigma sets smaller than N-1");
    if (gn.gamma.empty()) throw std::invalid_argument("Gamma must be non-empty");
    check_mode_set(gn.gamma, num_modes, "Gamma");
    for (int g : gn.gamma)
      if (std::find(su.begin(), su.end(), g) != su.end())
        throw std::invalid_argument("Sigma and Gamma must be disjoint");
    check_probability(gn.q, gn.gamma.size(), "q");
    double sum = 0.0;
    for (const auto& [tuple, w] : gn.p) {
      if (tuple.size() != static_cast<std::size_t>(num_particles - 1))
        throw std::invalid_argument("p support tuple has wrong length");
      std::set<int> distinct(tuple.begin(), tuple.end());
      if (distinct.size() != tuple.size())
        throw std::invalid_argument("p support tuple has colliding modes");
      for (std::size_t j = 0; j < tuple.size(); ++j) {
        const auto& sj = gn.sigma[j];
        if (std::find(sj.begin(), sj.end(), tuple[j]) == sj.end())
          throw std::invalid_argument("p support tuple leaves its Sigma_j");
      }
      if (w < 0.0) throw std::invalid_argument("p has a negative weight");
      sum += w;
    }
    if (std::abs(sum - 1.0) > kStructuralTol)
      throw std::invalid_argument("p does not sum to 1, got " + std::to_string(sum));
  }
}

FermionOperator exclusion_projector(const std::vector<int>& sigma, const FockBasis& basis) {
  FermionOperator proj = identity_on(basis);
  for (int m : sigma) {
    if (m < 0 || m >= basis.num_modes())
      throw std::invalid_argument("projector mode index out of range");
    proj.matrix = proj.matrix * (Matrix::Identity(basis.dim(), basis.dim()) -
                                 number_operator(m, basis).matrix);
  }
  return proj;
}

std::vector<DomainStatePair> domain_states(const DomainSpec& spec) {
  spec.validate();
  const int modes = spec.num_modes;
  const int n = spec.num_particles;
  const FockBasis fn = FockBasis::enumerate(n, modes);

  std::vector<DomainStatePair> out;
  if (const auto* p2 = std::get_if<Pure2Spec>(&spec.variant)) {
    const int mu = p2->reference_mode;
    for (int k = 0; k < modes; ++k) {
      if (k == mu) continue;
      DensityMatrix global = slater_state({mu, k}, fn);
      std::vector<double> w(static_cast<std::size_t>(modes), 0.0);
      w[static_cast<std::size_t>(k)] += 0.5;
      w[static_cast<std::size_t>(mu)] += 0.5;
      out.push_back({std::move(global), diagonal_single_particle(w, modes)});
    }
    return out;
  }

  // Mixed2 / GeneralN: assemble the family for each q choice (corners of the
  // Gamma simplex plus the spec's own q).
  std::vector<int> gamma;
  std::vector<double> q_given;
  std::vector<std::pair<ModeTuple, double>> support;  // (μ⃗, p(μ⃗))
  if (const auto* m2 = std::get_if<Mixed2Spec>(&spec.variant)) {
    gamma = m2->gamma;
    q_given = m2->q;
    for (std::size_t i = 0; i < m2->sigma.size(); ++i)
      support.push_back({{m2->sigma[i]}, m2->p[i]});
  } else {
    const auto& gn = std::get<GeneralNSpec>(spec.variant);
    gamma = gn.gamma;
    q_given = gn.q;
    support = gn.p;
  }

  std::vector<std::vector<double>> q_choices;
  for (std::size_t c = 0; c < gamma.size(); ++c) {
    std::vector<double> corner(gamma.size(), 0.0);
    corner[c] = 1.0;
    q_choices.push_back(std::move(corner));
  }
  q_choices.push_back(q_given);

  for (const auto& q : q_choices) {
    Matrix global = Matrix::Zero(fn.dim(), fn.dim());
    std::vector<double> w(static_cast<std::size_t>(modes), 0.0);
    for (const auto& [mu_tuple, pw] : support) {
      for (std::size_t gi = 0; gi < gamma.size(); ++gi) {
        const double weight = pw * q[gi];
        if (weight == 0.0) continue;
        ModeTuple full = mu_tuple;
        full.push_back(gamma[gi]);
        global += weight * slater_state(full, fn).matrix;
      }
      for (int m : mu_tuple) w[static_cast<std::size_t>(m)] += pw / n;
    }
    for (std::size_t gi = 0; gi < gamma.size(); ++gi)
      w[static_cast<std::size_t>(gamma[gi])] += q[gi] / n;
    out.push_back({{fn, std::move(global)}, diagonal_single_particle(w, modes)});
  }
  return out;
}

KrausSet kraus_pure2(const FermionOperator& u_t, int reference_mode,
                     const std::optional<Matrix>& sp_basis, double time) {
  DomainSpec spec{Pure2Spec{reference_mode}, u_t.domain.num_modes(), 2};
  spec.validate();
  check_evolution(u_t, spec);

  const int modes = spec.num_modes;
  const FockBasis f1 = FockBasis::enumerate(1, modes);
  const Matrix ad_mu = creation(reference_mode, f1).matrix;
  const std::vector<Matrix> f = rotated_annihilators(u_t.domain, sp_basis);

  KrausSet ks{{}, spec, time};
  ks.operators.reserve(static_cast<std::size_t>(modes));
  for (int l = 0; l < modes; ++l)
    ks.operators.push_back(f[static_cast<std::size_t>(l)] * u_t.matrix * ad_mu);
  check_tp_defect_diagonal(ks);
  return ks;
}

KrausSet kraus_mixed2(const FermionOperator& u_t, const DomainSpec& spec,
                      const std::optional<Matrix>& sp_basis, double time) {
  spec.validate();
  const auto* m2 = std::get_if<Mixed2Spec>(&spec.variant);
  if (!m2) throw std::invalid_argument("kraus_mixed2 requires a Mixed2 domain");
  check_evolution(u_t, spec);

  const int modes = spec.num_modes;
  const FockBasis f1 = FockBasis::enumerate(1, modes);
  const Matrix proj = exclusion_projector(m2->sigma, f1).matrix;
  const std::vector<Matrix> f = rotated_annihilators(u_t.domain, sp_basis);

  KrausSet ks{{}, spec, time};
  for (int l = 0; l < modes; ++l) {
    for (std::size_t si = 0; si < m2->sigma.size(); ++si) {
      const Matrix ad_mu = creation(m2->sigma[si], f1).matrix;
      ks.operators.push_back(std::sqrt(m2->p[si]) * f[static_cast<std::size_t>(l)] *
                             u_t.matrix * ad_mu * proj);
    }
  }
  check_tp_defect_diagonal(ks);
  return ks;
}

KrausSet kraus_general_n(const FermionOperator& u_t, const DomainSpec& spec,
                         const std::optional<Matrix>& sp_basis, double time) {
  spec.validate();
  const auto* gn = std::get_if<GeneralNSpec>(&spec.variant);
  if (!gn) throw std::invalid_argument("kraus_general_n requires a GeneralN domain");
  check_evolution(u_t, spec);

  const int modes = spec.num_modes;
  const int n = spec.num_particles;
  const FockBasis f1 = FockBasis::enumerate(1, modes);
  const Matrix proj = exclusion_projector(spec.sigma_union(), f1).matrix;

  // Single annihilators per sector, rotated once.
  std::vector<std::vector<Matrix>> f_by_sector(static_cast<std::size_t>(n + 1));
  for (int sector = 2; sector <= n; ++sector)
    f_by_sector[static_cast<std::size_t>(sector)] =
        rotated_annihilators(FockBasis::enumerate(sector, modes), sp_basis);

  const FockBasis lbasis = FockBasis::enumerate(n - 1, modes);
  KrausSet ks{{}, spec, time};
  for (Eigen::Index li = 0; li < lbasis.dim(); ++li) {
    const ModeTuple& lvec = lbasis.state(li);
    // f_{l⃗} = f_{l_1}···f_{l_{N-1}} mapping F_N to F_1.
    Matrix fstring = f_by_sector[2][static_cast<std::size_t>(lvec[0])];
    for (int j = 1; j < n - 1; ++j)
      fstring = fstring * f_by_sector[static_cast<std::size_t>(j + 2)]
                                     [static_cast<std::size_t>(lvec[static_cast<std::size_t>(j)])];
    for (const auto& [mu_tuple, pw] : gn->p) {
      const Matrix ad_mu = creation_string(mu_tuple, f1).matrix;
      ks.operators.push_back(std::sqrt(pw) * fstring * u_t.matrix * ad_mu * proj);
    }
  }
  check_tp_defect_diagonal(ks);
  return ks;
}

Matrix apply_map_raw(const KrausSet& ks, const Matrix& rho_r) {
  if (ks.operators.empty()) throw std::invalid_argument("empty Kraus set");
  const Eigen::Index d = ks.operators.front().rows();
  if (rho_r.rows() != d || rho_r.cols() != d)
    throw std::invalid_argument("state dimension does not match Kraus operators");
  Matrix out = Matrix::Zero(d, d);
  for (const Matrix& k : ks.operators) out += k * rho_r * k.adjoint();
  return out;
}

DensityMatrix apply_map(const KrausSet& ks, const DensityMatrix& rho_r) {
  return {rho_r.basis, apply_map_raw(ks, rho_r.matrix)};
}

Matrix tp_defect(const KrausSet& ks) {
  if (ks.operators.empty()) throw std::invalid_argument("empty Kraus set");
  const Eigen::Index d = ks.operators.front().cols();
  Matrix out = Matrix::Zero(d, d);
  for (const Matrix& k : ks.operators) out += k.adjoint() * k;
  return out;
}

bool in_domain(const DomainSpec& spec, const DensityMatrix& rho_r, double tol) {
  spec.validate();
  const int modes = spec.num_modes;
  if (rho_r.basis != FockBasis::enumerate(1, modes)) return false;
  Matrix off = rho_r.matrix;
  off.diagonal().setZero();
  if (off.cwiseAbs().maxCoeff() > tol) return false;
  const Eigen::VectorXd diag = rho_r.matrix.diagonal().real();

  if (const auto* p2 = std::get_if<Pure2Spec>(&spec.variant)) {
    if (std::abs(diag(p2->reference_mode) - 0.5) > tol) return false;
    int halves = 0;
    for (int m = 0; m < modes; ++m) {
      if (m == p2->reference_mode) continue;
      if (std::abs(diag(m) - 0.5) <= tol)
        ++halves;
      else if (std::abs(diag(m)) > tol)
        return false;
    }
    return halves == 1;
  }

  const int n = spec.num_particles;
  std::vector<double> expected_sigma(static_cast<std::size_t>(modes), 0.0);
  std::vector<int> gamma;
  if (const auto* m2 = std::get_if<Mixed2Spec>(&spec.variant)) {
    gamma = m2->gamma;
    for (std::size_t i = 0; i < m2->sigma.size(); ++i)
      expected_sigma[static_cast<std::size_t>(m2->sigma[i])] += m2->p[i] / n;
  } else {
    const auto& gn = std::get<GeneralNSpec>(spec.variant);
    gamma = gn.gamma;
    for (const auto& [tuple, w] : gn.p)
      for (int m : tuple) expected_sigma[static_cast<std::size_t>(m)] += w / n;
  }
  const std::vector<int> su = spec.sigma_union();
  double gamma_sum = 0.0;
  for (int m = 0; m < modes; ++m) {
    const bool in_sigma = std::find(su.begin(), su.end(), m) != su.end();
    const bool in_gamma = std::find(gamma.begin(), gamma.end(), m) != gamma.end();
    if (in_sigma) {
      if (std::abs(diag(m) - expected_sigma[static_cast<std::size_t>(m)]) > tol) return false;
    } else if (in_gamma) {
      if (diag(m) < -tol) return false;
      gamma_sum += diag(m);
    } else {
      if (std::abs(diag(m)) > tol) return false;
    }
  }
  return std::abs(gamma_sum - 1.0 / n) <= tol;
}

}  // namespace fermimap
