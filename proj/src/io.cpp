#include "wmink/io.hpp"

#include <fstream>

#include "wmink/integrate.hpp"

namespace wmink {

namespace {

[[noreturn]] void schema_error(const std::string& pointer,
                               const std::string& message) {
  throw DomainError("schema violation at " + pointer + ": " + message);
}

Vector vector_at(const Json& j, const std::string& pointer) {
  const Json& node = j.at(Json::json_pointer(pointer));
  if (!node.is_array() || node.empty())
    schema_error(pointer, "expected a nonempty number array");
  Vector out(node.size());
  for (std::size_t k = 0; k < node.size(); ++k) {
    if (!node[k].is_number())
      schema_error(pointer + "/" + std::to_string(k), "expected a number");
    out[static_cast<Index>(k)] = node[k].get<double>();
  }
  return out;
}

Matrix matrix_at(const Json& j, const std::string& pointer) {
  const Json& node = j.at(Json::json_pointer(pointer));
  if (!node.is_array() || node.empty())
    schema_error(pointer, "expected a nonempty array of rows");
  Matrix out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    const Vector row = vector_at(j, pointer + "/" + std::to_string(i));
    if (i == 0)
      out.resize(static_cast<Index>(node.size()), row.size());
    else if (row.size() != out.cols())
      schema_error(pointer + "/" + std::to_string(i), "ragged row length");
    out.row(static_cast<Index>(i)) = row.transpose();
  }
  return out;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i)
    out.push_back(vector_to_json(m.row(i).transpose()));
  return out;
}

}  // namespace

WeightedDensity density_from_json(const Json& j) {
  if (!j.contains("kind") || !j["kind"].is_string())
    schema_error("/kind", "expected a string");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "lebesgue") return WeightedDensity::lebesgue();
  if (kind == "gaussian") return WeightedDensity::gaussian();
  if (kind == "abs_linear") {
    if (!j.contains("theta")) schema_error("/theta", "required for abs_linear");
    return WeightedDensity::abs_linear(vector_at(j, "/theta"));
  }
  if (kind == "power_cone") {
    if (!j.contains("theta")) schema_error("/theta", "required for power_cone");
    if (!j.contains("inv_p") || !j["inv_p"].is_number())
      schema_error("/inv_p", "required positive number for power_cone");
    return WeightedDensity::power_cone(vector_at(j, "/theta"),
                                       j["inv_p"].get<double>());
  }
  schema_error("/kind", "unknown density kind '" + kind + "'");
}

Json density_to_json(const WeightedDensity& d) {
  Json out;
  switch (d.kind()) {
    case DensityKind::lebesgue:
      out["kind"] = "lebesgue";
      break;
    case DensityKind::gaussian:
      out["kind"] = "gaussian";
      break;
    case DensityKind::abs_linear:
      out["kind"] = "abs_linear";
      out["theta"] = vector_to_json(*d.direction());
      break;
    case DensityKind::power_cone:
      out["kind"] = "power_cone";
      out["theta"] = vector_to_json(*d.direction());
      out["inv_p"] = d.homogeneity_degree();
      break;
    case DensityKind::custom:
      throw DomainError("custom densities have no JSON form");
  }
  if (auto v = d.half_space_normal(); v && d.kind() != DensityKind::lebesgue)
    out["half_space_normal"] = vector_to_json(*v);
  return out;
}

SymmetricPolytope body_from_json(const Json& j) {
  if (j.contains("generators")) {
    const Zonotope z(matrix_at(j, "/generators"));
    return z.realize();
  }
  if (!j.contains("normals")) schema_error("/normals", "missing");
  if (!j.contains("offsets")) schema_error("/offsets", "missing");
  return SymmetricPolytope::from_halfspaces(matrix_at(j, "/normals"),
                                            vector_at(j, "/offsets"));
}

Json body_to_json(const SymmetricPolytope& P) {
  Json out;
  out["normals"] = matrix_to_json(P.normals());
  out["offsets"] = vector_to_json(P.offsets());
  return out;
}

MinkowskiProblem problem_from_json(const Json& j) {
  if (!j.contains("density")) schema_error("/density", "missing");
  MinkowskiProblem problem;
  problem.density = density_from_json(j["density"]);
  problem.normals = matrix_at(j, "/normals");
  problem.targets = vector_at(j, "/targets");
  problem.validate();
  return problem;
}

Json to_json(const MCOracle& oracle) {
  return Json{{"estimate", oracle.estimate},
              {"se", oracle.se},
              {"samples", oracle.samples},
              {"seed", oracle.seed}};
}

Json to_json(const SphericalAtomicMeasure& sigma) {
  Json atoms = Json::array();
  for (Index i = 0; i < sigma.size(); ++i)
    atoms.push_back(Json{{"u", vector_to_json(sigma.directions.row(i).transpose())},
                         {"weight", sigma.weights[i]}});
  return Json{{"atoms", atoms}, {"total_mass", sigma.total_mass()}};
}

Json to_json(const SolverReport& report) {
  Json out;
  out["offsets"] = vector_to_json(report.offsets);
  out["residuals"] = vector_to_json(report.residuals);
  out["max_residual"] = report.max_residual();
  out["iterations"] = report.iterations;
  out["scale_m"] = report.scale_m;
  switch (report.status) {
    case SolverStatus::converged:
      out["status"] = "converged";
      break;
    case SolverStatus::face_collapsed:
      out["status"] = "face_collapsed";
      break;
    case SolverStatus::no_convergence:
      out["status"] = "no_convergence";
      break;
  }
  Json gaps = Json::array();
  for (Index i : report.hypothesis_gap_normals) gaps.push_back(i);
  out["hypothesis_gap_normals"] = gaps;
  return out;
}

Json to_json(const ComparisonReport& report) {
  Json out;
  out["delta"] = report.delta;
  out["argmin"] = vector_to_json(report.argmin);
  out["directions"] = report.directions;
  out["l_is_zonotope"] = report.l_is_zonotope;
  if (!report.zonotope_certificate.empty())
    out["zonotope_certificate"] = report.zonotope_certificate;
  out["mu_k"] = report.mu_k;
  out["mu_l"] = report.mu_l;
  switch (report.verdict) {
    case ComparisonVerdict::theorem_consistent:
      out["verdict"] = "theorem-consistent";
      break;
    case ComparisonVerdict::hypotheses_not_met:
      out["verdict"] = "hypotheses not met - no assertion";
      break;
    case ComparisonVerdict::violated:
      out["verdict"] = "violated";
      break;
  }
  return out;
}

Json to_json(const StabilityReport& report) {
  return Json{{"eps", report.eps},
              {"lhs", report.lhs},
              {"rhs", report.rhs},
              {"slack", report.slack},
              {"passed", report.passed},
              {"constant",
               Json{{"value", report.constant.value},
                    {"circumradius", report.constant.circumradius},
                    {"nu_n", report.constant.nu_n},
                    {"nu_n_minus_1", report.constant.nu_n_minus_1},
                    {"q", report.constant.q}}}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open input file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& err) {
    throw DomainError("parse error in " + path + ": " + err.what());
  }
  return j;
}

}  // namespace wmink
