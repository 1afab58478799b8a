#include "fermimap/io.hpp"
#include "fermimap/models.hpp"
#include "fermimap/reduce.hpp"
#include "fermimap/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace fermimap;
using nlohmann::json;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsageError = 2;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
  f << text;
}

json load_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open file: " + path);
  json j;
  f >> j;
  return j;
}

int parse_thread_cap() {
  const char* env = std::getenv("FERMIMAP_THREADS");
  if (!env) return 1;
  const int n = std::atoi(env);
  if (n <= 0) throw std::invalid_argument("FERMIMAP_THREADS must be a positive integer");
  return n;
}

int run_basis(int n, int l) {
  const FockBasis basis = FockBasis::enumerate(n, l + 1);
  std::cout << basis_to_json(basis).dump() << "\n";
  return 0;
}

struct MapOptions {
  std::string model = "dimer";
  double u = 0.0;
  double v = 0.0;
  double t = 0.0;
  int mu = 0;
  int particles = 2;
  std::string matrix_path;
  std::string domain_path;
  std::string out_path;
};

int run_map(const MapOptions& opt) {
  FermionOperator u_t = [&] {
    if (opt.model == "dimer") {
      return unitary_at_time(dimer_hamiltonian(opt.u, opt.v), opt.t);
    }
    if (opt.model == "quadratic") {
      if (opt.matrix_path.empty())
        throw std::invalid_argument("quadratic model requires --matrix");
      const Matrix m = matrix_from_json(load_json_file(opt.matrix_path));
      return unitary_at_time(quadratic_many_body(m, opt.particles), opt.t);
    }
    throw std::invalid_argument("unknown model: " + opt.model);
  }();

  DomainSpec spec;
  if (!opt.domain_path.empty()) {
    spec = domain_spec_from_json(load_json_file(opt.domain_path));
  } else {
    spec = DomainSpec{Pure2Spec{opt.mu}, u_t.domain.num_modes(), 2};
  }
  spec.validate();
  if (spec.num_particles != u_t.domain.num_particles())
    throw std::invalid_argument("domain particle count does not match the model");

  const KrausSet ks = build_kraus(u_t, spec, std::nullopt, opt.t);
  write_output(kraus_set_to_json(ks).dump(), opt.out_path);

  const Matrix defect = tp_defect(ks);
  json diag = json::array();
  for (Eigen::Index i = 0; i < defect.rows(); ++i) diag.push_back(defect(i, i).real());
  const CpReport cp = is_cp(choi_from_kraus(ks));
  json summary{{"operator_count", ks.operators.size()},
               {"min_choi_eigenvalue", cp.min_eigenvalue},
               {"tp_defect_diagonal", std::move(diag)}};
  std::cout << summary.dump() << "\n";
  return 0;
}

struct VerifyOptions {
  bool all = false;
  bool algebra = false;
  bool oracles = false;
  bool models = false;
  bool bounds = false;
  std::uint64_t seed = 42;
  std::string out_path;
};

int run_verify(const VerifyOptions& opt) {
  std::vector<VerificationReport> reports;
  const bool any_selector = opt.algebra || opt.oracles || opt.models || opt.bounds;
  if (opt.all || !any_selector) {
    reports = full_suite(opt.seed);
  } else {
    if (opt.algebra)
      for (auto& r : algebra_suite()) reports.push_back(std::move(r));
    if (opt.oracles)
      for (auto& r : oracle_suite(opt.seed)) reports.push_back(std::move(r));
    if (opt.models)
      for (auto& r : model_suite(opt.seed)) reports.push_back(std::move(r));
    if (opt.bounds)
      for (auto& r : bound_suite(opt.seed)) reports.push_back(std::move(r));
  }
  write_output(reports_to_jsonl(reports), opt.out_path);
  for (const auto& r : reports)
    if (!r.passed) return kExitVerifyFailure;
  return 0;
}

struct ExampleOptions {
  std::string name;
  std::uint64_t seed = 1;
  double u = 0.0;
  double v = 0.0;
  std::string out_path;
};

int run_example(const ExampleOptions& opt) {
  if (opt.name == "noninteracting") {
    Rng rng(opt.seed);
    std::uniform_real_distribution<double> time_dist(-3.0, 3.0);
    double worst = 0.0;
    const int modes = 4;
    for (int mi = 0; mi < 5; ++mi) {
      const Matrix m = random_hermitian(modes, rng);
      for (int ti = 0; ti < 5; ++ti) {
        const double t = time_dist(rng);
        for (int mu = 0; mu < modes; ++mu) {
          const UnitarityReport r = noninteracting_unitarity_check(m, mu, t);
          worst = std::max(worst, std::max(r.max_trace_norm_deviation, r.max_purity_deviation));
        }
      }
    }
    json out{{"example", "noninteracting"},
             {"seed", opt.seed},
             {"max_deviation_from_unitary_action", worst},
             {"tolerance", 1e-10},
             {"passed", worst < 1e-10}};
    write_output(out.dump(), opt.out_path);
    return (worst < 1e-10) ? 0 : kExitVerifyFailure;
  }
  if (opt.name == "dimer") {
    const DimerDiagonalization diag = dimer_analytic_diag(opt.u, opt.v);
    Eigen::SelfAdjointEigenSolver<Matrix> es(dimer_hamiltonian(opt.u, opt.v).matrix);
    json numeric = json::array();
    for (Eigen::Index i = 0; i < 6; ++i) numeric.push_back(es.eigenvalues()(i));
    json analytic = json::array();
    Eigen::VectorXd sorted = diag.d;
    std::sort(sorted.data(), sorted.data() + sorted.size());
    for (Eigen::Index i = 0; i < 6; ++i) analytic.push_back(sorted(i));

    // Elementwise diff between the assembled operator and the tabulated form.
    const Matrix assembled = dimer_hamiltonian(opt.u, opt.v).matrix;
    const Matrix tabulated = dimer_tabulated_hamiltonian(opt.u, opt.v);
    json diffs = json::array();
    for (Eigen::Index r = 0; r < 6; ++r)
      for (Eigen::Index c = 0; c < 6; ++c) {
        const double dv = std::abs(assembled(r, c) - tabulated(r, c));
        if (dv > 1e-12)
          diffs.push_back(json{{"row", r},
                               {"col", c},
                               {"assembled", assembled(r, c).real()},
                               {"tabulated", tabulated(r, c).real()}});
      }
    json out{{"example", "dimer"},
             {"u", opt.u},
             {"v", opt.v},
             {"numeric_eigenvalues", std::move(numeric)},
             {"analytic_eigenvalues", std::move(analytic)},
             {"a", diag.a},
             {"b", diag.b},
             {"normalization_defect", diag.normalization_defect},
             {"residual_v_h_vdag", diag.residual_v_h_vdag},
             {"residual_vdag_h_v", diag.residual_vdag_h_v},
             {"tabulated_matrix_diffs", std::move(diffs)}};
    write_output(out.dump(), opt.out_path);
    return 0;
  }
  throw std::invalid_argument("unknown example: " + opt.name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Completely positive reduced maps for indistinguishable fermions"};
  app.require_subcommand(1);

  int basis_n = 0;
  int basis_l = 0;
  auto* basis_cmd = app.add_subcommand("basis", "Enumerate an N-fermion occupation basis");
  basis_cmd->add_option("-N,--particles", basis_n, "particle count")->required();
  basis_cmd->add_option("-L,--max-mode", basis_l, "highest mode index (L+1 modes)")->required();

  MapOptions map_opt;
  auto* map_cmd = app.add_subcommand("map", "Construct a Kraus set and report its structure");
  map_cmd->add_option("--model", map_opt.model, "dimer or quadratic");
  map_cmd->add_option("--u", map_opt.u, "on-site interaction");
  map_cmd->add_option("--v", map_opt.v, "intersite interaction");
  map_cmd->add_option("--t", map_opt.t, "evolution time");
  map_cmd->add_option("--mu", map_opt.mu, "reference mode");
  map_cmd->add_option("--particles", map_opt.particles, "particle count (quadratic model)");
  map_cmd->add_option("--matrix", map_opt.matrix_path, "single-particle matrix JSON file");
  map_cmd->add_option("--domain", map_opt.domain_path, "domain spec JSON file");
  map_cmd->add_option("--out", map_opt.out_path, "Kraus set output file");

  VerifyOptions verify_opt;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites, emit JSONL reports");
  verify_cmd->add_flag("--all", verify_opt.all, "run every suite");
  verify_cmd->add_flag("--algebra", verify_opt.algebra, "operator algebra identities");
  verify_cmd->add_flag("--oracles", verify_opt.oracles, "map-vs-oracle sweeps");
  verify_cmd->add_flag("--models", verify_opt.models, "worked-model reproductions");
  verify_cmd->add_flag("--bounds", verify_opt.bounds, "Choi norm-bound sweeps");
  verify_cmd->add_option("--seed", verify_opt.seed, "random seed");
  verify_cmd->add_option("--out", verify_opt.out_path, "JSONL output file");

  ExampleOptions example_opt;
  auto* example_cmd = app.add_subcommand("example", "Reproduce a worked example");
  example_cmd->add_option("name", example_opt.name, "noninteracting or dimer")->required();
  example_cmd->add_option("--seed", example_opt.seed, "random seed");
  example_cmd->add_option("--u", example_opt.u, "on-site interaction");
  example_cmd->add_option("--v", example_opt.v, "intersite interaction");
  example_cmd->add_option("--out", example_opt.out_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsageError;
  }

  try {
    parse_thread_cap();  // validated; execution is sequential and deterministic
    if (basis_cmd->parsed()) return run_basis(basis_n, basis_l);
    if (map_cmd->parsed()) return run_map(map_opt);
    if (verify_cmd->parsed()) return run_verify(verify_opt);
    if (example_cmd->parsed()) return run_example(example_opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsageError;
  }
  return kExitUsageError;
}
