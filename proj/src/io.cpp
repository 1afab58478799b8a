#include "fermimap/io.hpp"

#include <sstream>
#include <stdexcept>

namespace fermimap {

using nlohmann::json;

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix JSON must be a nested array");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j.at(0).size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j.at(static_cast<std::size_t>(r));
    if (static_cast<Eigen::Index>(row.size()) != cols)
      throw std::invalid_argument("ragged matrix JSON");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& cell = row.at(static_cast<std::size_t>(c));
      m(r, c) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
    }
  }
  return m;
}

json basis_to_json(const FockBasis& basis) {
  json states = json::array();
  for (const ModeTuple& t : basis.states()) states.push_back(t);
  return json{{"N", basis.num_particles()},
              {"L_plus_1", basis.num_modes()},
              {"states", std::move(states)}};
}

json domain_spec_to_json(const DomainSpec& spec) {
  json j{{"num_modes", spec.num_modes}, {"num_particles", spec.num_particles}};
  if (const auto* p2 = std::get_if<Pure2Spec>(&spec.variant)) {
    j["variant"] = "pure2";
    j["mu"] = p2->reference_mode;
  } else if (const auto* m2 = std::get_if<Mixed2Spec>(&spec.variant)) {
    j["variant"] = "mixed2";
    j["sigma"] = m2->sigma;
    j["p"] = m2->p;
    j["gamma"] = m2->gamma;
    j["q"] = m2->q;
  } else {
    const auto& gn = std::get<GeneralNSpec>(spec.variant);
    j["variant"] = "general_n";
    j["sigma"] = gn.sigma;
    json support = json::array();
    for (const auto& [tuple, w] : gn.p) support.push_back(json{{"mu", tuple}, {"weight", w}});
    j["p"] = std::move(support);
    j["gamma"] = gn.gamma;
    j["q"] = gn.q;
  }
  return j;
}

DomainSpec domain_spec_from_json(const json& j) {
  DomainSpec spec;
  spec.num_modes = j.at("num_modes").get<int>();
  spec.num_particles = j.value("num_particles", 2);
  const std::string variant = j.at("variant").get<std::string>();
  if (variant == "pure2") {
    spec.variant = Pure2Spec{j.at("mu").get<int>()};
  } else if (variant == "mixed2") {
    Mixed2Spec m2;
    m2.sigma = j.at("sigma").get<std::vector<int>>();
    m2.p = j.at("p").get<std::vector<double>>();
    m2.gamma = j.at("gamma").get<std::vector<int>>();
    m2.q = j.at("q").get<std::vector<double>>();
    spec.variant = std::move(m2);
  } else if (variant == "general_n") {
    GeneralNSpec gn;
    gn.sigma = j.at("sigma").get<std::vector<std::vector<int>>>();
    for (const auto& entry : j.at("p"))
      gn.p.push_back({entry.at("mu").get<ModeTuple>(), entry.at("weight").get<double>()});
    gn.gamma = j.at("gamma").get<std::vector<int>>();
    gn.q = j.at("q").get<std::vector<double>>();
    spec.variant = std::move(gn);
  } else {
    throw std::invalid_argument("unknown domain variant: " + variant);
  }
  spec.validate();
  return spec;
}

json kraus_set_to_json(const KrausSet& ks) {
  json ops = json::array();
  for (const Matrix& k : ks.operators) ops.push_back(matrix_to_json(k));
  return json{{"domain_spec", domain_spec_to_json(ks.domain)},
              {"time", ks.time},
              {"operators", std::move(ops)}};
}

KrausSet kraus_set_from_json(const json& j) {
  KrausSet ks;
  ks.domain = domain_spec_from_json(j.at("domain_spec"));
  ks.time = j.at("time").get<double>();
  for (const auto& op : j.at("operators")) ks.operators.push_back(matrix_from_json(op));
  return ks;
}

json bound_report_to_json(const BoundReport& r) {
  return json{{"lhs", r.lhs},
              {"rhs", r.rhs},
              {"satisfied", r.satisfied},
              {"seed", r.seed},
              {"parameters", r.parameters}};
}

json verification_report_to_json(const VerificationReport& r) {
  return json{{"scenario", r.scenario},
              {"num_cases", r.num_cases},
              {"max_trace_norm_deviation", r.max_trace_norm_deviation},
              {"tp_defect_deviation", r.tp_defect_deviation},
              {"cp_min_eigenvalue", r.cp_min_eigenvalue},
              {"tolerance", r.tolerance},
              {"passed", r.passed},
              {"seed", r.seed}};
}

std::string reports_to_jsonl(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) os << verification_report_to_json(r).dump() << "\n";
  return os.str();
}

}  // namespace fermimap
