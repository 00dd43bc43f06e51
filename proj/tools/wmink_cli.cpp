// Command-line front end: weighted surface measures, mixed measures,
// projection profiles, the discrete weighted Minkowski solver, and the
// comparison/stability harnesses. All stochastic commands take an explicit
// seed (WMINK_SEED overrides the default); identical configuration and seed
// produce byte-identical output.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wmink/density.hpp"
#include "wmink/integrate.hpp"
#include "wmink/io.hpp"
#include "wmink/minkowski_solver.hpp"
#include "wmink/mixed.hpp"
#include "wmink/projection.hpp"
#include "wmink/sample_bodies.hpp"
#include "wmink/shephard.hpp"
#include "wmink/surface_measure.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using OrderedJson = nlohmann::ordered_json;
using wmink::Index;
using wmink::Matrix;
using wmink::Vector;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("WMINK_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 1;
}

OrderedJson metadata(const std::string& command, std::uint64_t seed,
                     const OrderedJson& extra = OrderedJson::object()) {
  OrderedJson meta;
  meta["version"] = kVersion;
  meta["command"] = command;
  meta["seed"] = seed;
  for (auto it = extra.begin(); it != extra.end(); ++it)
    meta[it.key()] = it.value();
  return meta;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw wmink::DomainError("cannot open output file: " + output_path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

void emit_json(const OrderedJson& j, const std::string& output_path) {
  emit(j.dump(2), output_path);
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

wmink::WeightedDensity load_density(const std::string& path) {
  return wmink::density_from_json(wmink::load_json_file(path));
}

wmink::SymmetricPolytope load_body(const std::string& path) {
  return wmink::body_from_json(wmink::load_json_file(path));
}

// ---------------------------------------------------------------------------
// density validate

int run_density_validate(const std::string& file, long samples,
                         std::uint64_t seed, int dim,
                         const std::string& output) {
  const auto d = load_density(file);
  OrderedJson out;
  out["metadata"] = metadata("density validate", seed,
                             {{"samples", samples},
                              {"input", file},
                              {"tolerances",
                               {{"homogeneity", 1e-9},
                                {"concavity", 1e-10},
                                {"evenness", 1e-12}}}});
  bool ok = true;

  if (d.is_homogeneous()) {
    const auto h = wmink::check_homogeneity(d, samples, seed, dim);
    out["homogeneity"] = {{"max_relative_deviation", h.max_relative_deviation},
                          {"passed", h.passed}};
    ok = ok && h.passed;
  }
  if (d.concavity_degree()) {
    const auto c = wmink::check_p_concavity(d, samples, seed, dim);
    out["p_concavity"] = {{"worst_violation", c.worst_violation},
                          {"passed", c.passed}};
    ok = ok && c.passed;
  }
  if (d.is_homogeneous() && d.homogeneity_degree() > 0.0 &&
      d.concavity_degree() && *d.concavity_degree() > 0.0 &&
      !std::isinf(*d.concavity_degree())) {
    const auto ic = wmink::check_implied_concavity(d, samples, seed, dim);
    out["implied_concavity"] = {{"worst_violation", ic.worst_violation},
                                {"passed", ic.passed}};
    ok = ok && ic.passed;
  }
  const auto e = wmink::check_evenness(d, samples, seed, dim);
  out["evenness"] = {{"max_deviation", e.max_deviation},
                     {"declared_even", d.is_even()},
                     {"passed", e.passed}};
  ok = ok && e.passed;
  if (d.is_homogeneous() && dim > 0) {
    const auto profile = wmink::ConcavityProfile::of(d, dim);
    out["concavity_profile"] = {{"n", profile.n}, {"r", profile.r},
                                {"q", profile.q}};
  }
  out["passed"] = ok;
  emit_json(out, output);
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// body info / is-zonotope

int run_body_info(const std::string& file, const std::string& output) {
  const auto P = load_body(file);
  OrderedJson out;
  out["metadata"] = metadata("body info", 0, {{"input", file}});
  out["dim"] = P.dim();
  out["facets"] = P.facet_count();
  out["vertices"] = P.vertices().size();
  out["circumradius"] = P.circumradius();
  OrderedJson faces = OrderedJson::array();
  for (Index i = 0; i < P.facet_count(); ++i) {
    const auto& F = P.faces()[i];
    faces.push_back({{"offset", F.offset},
                     {"area", F.area},
                     {"vertices", F.vertices.size()}});
  }
  out["faces"] = faces;
  out["volume"] =
      wmink::body_measure_cone(P, wmink::WeightedDensity::lebesgue());
  emit_json(out, output);
  return 0;
}

int run_body_is_zonotope(const std::string& file, const std::string& output) {
  const auto P = load_body(file);
  const auto check = wmink::is_zonotope(P);
  OrderedJson out;
  out["metadata"] = metadata("body is-zonotope", 0, {{"input", file}});
  out["is_zonotope"] = check.zonotope;
  if (!check.zonotope) out["certificate"] = check.certificate;
  emit_json(out, output);
  return 0;
}

// ---------------------------------------------------------------------------
// sigma

int run_sigma(const std::string& body_file, const std::string& density_file,
              const std::string& format, const std::string& output) {
  const auto P = load_body(body_file);
  const auto d = load_density(density_file);
  auto sig = wmink::sigma(P, d);
  sig.body_id = body_file;

  if (format == "csv") {
    std::ostringstream csv;
    for (int k = 0; k < P.dim(); ++k) csv << "u" << k + 1 << ",";
    csv << "weight\n";
    for (Index i = 0; i < sig.size(); ++i) {
      for (int k = 0; k < P.dim(); ++k)
        csv << format_double(sig.directions(i, k)) << ",";
      csv << format_double(sig.weights[i]) << "\n";
    }
    emit(csv.str(), output);
    return 0;
  }
  OrderedJson out;
  out["metadata"] =
      metadata("sigma", 0, {{"body", body_file}, {"density", density_file}});
  out["sigma"] = wmink::to_json(sig);
  emit_json(out, output);
  return 0;
}

// ---------------------------------------------------------------------------
// measure

int run_measure(const std::string& body_file, const std::string& density_file,
                long mc_samples, std::uint64_t seed,
                const std::string& output) {
  const auto P = load_body(body_file);
  const auto d = load_density(density_file);
  OrderedJson out;
  out["metadata"] = metadata("measure", seed,
                             {{"body", body_file},
                              {"density", density_file},
                              {"mc_samples", mc_samples}});
  if (d.is_homogeneous())
    out["cone"] = wmink::body_measure_cone(P, d);
  else
    out["cone"] = nullptr;
  if (d.kind() == wmink::DensityKind::gaussian) {
    if (P.dim() == 2)
      out["plane_quadrature"] = wmink::gaussian_polytope_measure_2d(P);
    if (mc_samples > 0)
      out["mc"] =
          wmink::to_json(wmink::gaussian_body_measure(P, mc_samples, seed));
  } else if (mc_samples > 0) {
    out["mc"] = wmink::to_json(wmink::body_measure_mc(P, d, mc_samples, seed));
  }
  emit_json(out, output);
  return 0;
}

// ---------------------------------------------------------------------------
// mixed

int run_mixed(const std::string& k_file, const std::string& l_file,
              const std::string& density_file, bool with_oracle,
              long mc_samples, std::uint64_t seed, const std::string& output) {
  const auto K = load_body(k_file);
  const auto L = load_body(l_file);
  const auto d = load_density(density_file);
  OrderedJson out;
  out["metadata"] = metadata(
      "mixed", seed,
      {{"K", k_file}, {"L", l_file}, {"density", density_file}});
  const auto direct = wmink::mixed_measure(K, L, d);
  out["mu1"] = direct.value;
  out["route"] = "surface-integral";
  if (direct.v_mu1) out["v_mu1"] = *direct.v_mu1;
  if (with_oracle) {
    const auto oracle = wmink::mixed_measure_oracle(
        K, L, d, {0.04, 0.02, 0.01}, mc_samples, seed);
    out["oracle"] = {{"value", oracle.value},
                     {"se", oracle.se},
                     {"raw_differences", oracle.raw_differences}};
  }
  emit_json(out, output);
  return 0;
}

// ---------------------------------------------------------------------------
// project

int run_project(const std::string& body_file, const std::string& density_file,
                int directions, const std::vector<double>& t_grid,
                std::uint64_t seed, const std::string& output) {
  const auto P = load_body(body_file);
  const auto d = load_density(density_file);
  const auto profile = wmink::projection_profile(P, d, directions, seed, t_grid);

  std::ostringstream csv;
  const int n = P.dim();
  if (t_grid.empty()) {
    for (int k = 0; k < n; ++k) csv << "theta" << k + 1 << ",";
    csv << "P\n";
    for (Index i = 0; i < profile.directions.rows(); ++i) {
      for (int k = 0; k < n; ++k)
        csv << format_double(profile.directions(i, k)) << ",";
      csv << format_double(profile.values[i]) << "\n";
    }
  } else {
    for (int k = 0; k < n; ++k) csv << "theta" << k + 1 << ",";
    csv << "t,p\n";
    for (Index i = 0; i < profile.directions.rows(); ++i) {
      for (std::size_t j = 0; j < t_grid.size(); ++j) {
        for (int k = 0; k < n; ++k)
          csv << format_double(profile.directions(i, k)) << ",";
        csv << format_double(t_grid[j]) << ","
            << format_double(profile.p_values(i, static_cast<Index>(j)))
            << "\n";
      }
    }
  }
  emit(csv.str(), output);
  return 0;
}

// ---------------------------------------------------------------------------
// solve-minkowski

int run_solve(const std::string& problem_file, double tol, int max_iter,
              int starts, std::uint64_t seed, const std::string& output) {
  const auto problem =
      wmink::problem_from_json(wmink::load_json_file(problem_file));
  OrderedJson out;
  out["metadata"] = metadata("solve-minkowski", seed,
                             {{"input", problem_file},
                              {"tolerances", {{"tol", tol}}},
                              {"max_iter", max_iter},
                              {"starts", starts}});
  int status = 0;
  try {
    if (starts > 1) {
      const auto probe = wmink::uniqueness_probe(problem, starts, tol, seed);
      out["report"] = wmink::to_json(probe.runs.front());
      out["uniqueness"] = {
          {"starts", starts},
          {"max_pairwise_distance", probe.max_pairwise_distance},
          {"passed", probe.passed}};
      status = probe.passed ? 0 : 1;
    } else {
      const auto report = wmink::solve(problem, tol, max_iter, seed);
      out["report"] = wmink::to_json(report);
      status = report.max_residual() < 10.0 * tol ? 0 : 1;
    }
  } catch (const wmink::FaceCollapsed& err) {
    out["report"] = {{"status", "face_collapsed"}, {"error", err.what()}};
    status = 1;
  } catch (const wmink::NoConvergence& err) {
    out["report"] = {{"status", "no_convergence"}, {"error", err.what()}};
    status = 1;
  }
  emit_json(out, output);
  return status;
}

// ---------------------------------------------------------------------------
// shephard check / stability / batch

int run_shephard_check(const std::string& k_file, const std::string& l_file,
                       const std::string& density_file, int directions,
                       std::uint64_t seed, const std::string& output) {
  const auto K = load_body(k_file);
  const auto L = load_body(l_file);
  const auto d = load_density(density_file);
  const auto report = wmink::shephard_verify(K, L, d, directions, seed);
  OrderedJson out;
  out["metadata"] = metadata("shephard check", seed,
                             {{"K", k_file},
                              {"L", l_file},
                              {"density", density_file},
                              {"directions", directions}});
  out["report"] = wmink::to_json(report);
  emit_json(out, output);
  return report.verdict == wmink::ComparisonVerdict::violated ? 1 : 0;
}

int run_shephard_stability(const std::string& k_file,
                           const std::string& l_file,
                           const std::string& density_file, int directions,
                           std::uint64_t seed, const std::string& output) {
  const auto K = load_body(k_file);
  const auto L = load_body(l_file);
  const auto d = load_density(density_file);
  const auto report = wmink::stability_check(K, L, d, directions, seed);
  OrderedJson out;
  out["metadata"] = metadata("shephard stability", seed,
                             {{"K", k_file},
                              {"L", l_file},
                              {"density", density_file},
                              {"directions", directions}});
  out["report"] = wmink::to_json(report);
  emit_json(out, output);
  return report.passed ? 0 : 1;
}

int run_shephard_batch(int trials, int dim, const std::string& density_file,
                       int directions, std::uint64_t seed,
                       const std::string& output) {
  const auto d = density_file.empty() ? wmink::axis_density(dim)
                                      : load_density(density_file);
  wmink::RngSequence rng(seed, /*stream=*/60);
  OrderedJson cases = OrderedJson::array();
  int violations = 0;
  for (int trial = 0; trial < trials; ++trial) {
    const auto L = wmink::random_zonotope(dim, dim + 2, rng);
    auto K = wmink::random_symmetric_polytope(dim, dim + 2, rng);
    // Rescale K until its profile is dominated on samples.
    const auto dom0 = wmink::dominance(K, L, d, directions, seed);
    if (dom0.delta < 0.0) {
      double worst = 0.0;
      const Matrix dirs = wmink::sample_directions(dim, directions, seed);
      for (Index i = 0; i < dirs.rows(); ++i) {
        const Vector theta = dirs.row(i).transpose();
        worst =
            std::max(worst, wmink::P_mu(K, d, theta) / wmink::P_mu(L, d, theta));
      }
      const double power =
          static_cast<double>(dim) + d.homogeneity_degree() - 1.0;
      K = K.scaled(0.999 * std::pow(1.0 / worst, 1.0 / power));
    }
    const auto report = wmink::shephard_verify(K, L, d, directions, seed);
    if (report.verdict == wmink::ComparisonVerdict::violated) ++violations;
    cases.push_back({{"case", trial},
                     {"delta", report.delta},
                     {"mu_k", report.mu_k},
                     {"mu_l", report.mu_l},
                     {"verdict", wmink::to_json(report)["verdict"]}});
  }
  OrderedJson out;
  out["metadata"] = metadata(
      "shephard batch", seed,
      {{"trials", trials}, {"dim", dim}, {"directions", directions}});
  out["cases"] = cases;
  out["violations"] = violations;
  emit_json(out, output);
  return violations == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verify first-inequality

int run_verify_first_inequality(int trials, std::uint64_t seed,
                                const std::string& density_file, int dim,
                                const std::string& output) {
  const auto d = density_file.empty() ? wmink::axis_density(dim)
                                      : load_density(density_file);
  wmink::RngSequence rng(seed, /*stream=*/61);
  std::ostringstream csv;
  csv << "trial,n,lhs,rhs,slack,v_lhs,v_rhs,v_slack\n";
  bool all_passed = true;
  for (int trial = 0; trial < trials; ++trial) {
    const auto K = wmink::random_symmetric_polytope(dim, dim + 2, rng);
    const auto L = wmink::random_symmetric_polytope(dim, dim + 2, rng);
    const auto report = wmink::first_inequality_check(K, L, d);
    all_passed = all_passed && report.passed;
    csv << trial << "," << dim << "," << format_double(report.lhs) << ","
        << format_double(report.rhs) << "," << format_double(report.slack)
        << "," << format_double(report.v_lhs) << ","
        << format_double(report.v_rhs) << "," << format_double(report.v_slack)
        << "\n";
  }
  emit(csv.str(), output);
  return all_passed ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verify-suite

struct SuiteCase {
  std::string id;
  bool passed;
  std::string detail;
};

int run_verify_suite(std::uint64_t seed, const std::string& output) {
  using namespace wmink;
  std::vector<SuiteCase> cases;
  auto record = [&](const std::string& id, bool passed,
                    const std::string& detail) {
    cases.push_back({id, passed, detail});
  };
  const auto sq2 = unit_square();
  const auto cu3 = unit_cube();
  const auto dia2 = cross_polytope_2d();
  const auto x1_2 = axis_density(2);
  const auto x1_3 = axis_density(3);
  const auto leb = WeightedDensity::lebesgue();

  {  // Closed-form fixtures.
    const bool ok =
        std::abs(body_measure_cone(sq2, x1_2) - 2.0) < 1e-9 &&
        std::abs(body_measure_cone(cu3, x1_3) - 4.0) < 1e-9 &&
        std::abs(body_measure_cone(dia2, leb) - 2.0) < 1e-9 &&
        std::abs(mixed_measure(sq2, sq2, x1_2).value - 6.0) < 1e-9 &&
        std::abs(P_mu(sq2, x1_2, Vector::Unit(2, 0)) - 4.0 / 3.0) < 1e-9 &&
        std::abs(cosine_transform(sigma(sq2, x1_2), Vector::Unit(2, 0)) -
                 4.0) < 1e-9;
    record("01-fixture-exactness", ok, "closed forms on SQ2/CU3/DIA2");
  }
  {  // Cone formula vs Monte Carlo.
    bool ok = true;
    RngSequence rng(seed, 70);
    for (int trial = 0; trial < 4; ++trial) {
      const int n = 2 + trial % 2;
      const auto P = random_symmetric_polytope(n, n + 2, rng);
      const auto d = trial % 2 == 0 ? leb : axis_density(n);
      const auto mc = body_measure_mc(P, d, 200000, seed + trial);
      ok = ok && std::abs(body_measure_cone(P, d) - mc.estimate) <=
                     3.0 * mc.se + 1e-12;
    }
    record("02-measure-oracle", ok, "cone formula vs rejection sampling");
  }
  {  // Mixed-measure route agreement.
    bool ok = true;
    RngSequence rng(seed, 71);
    for (int trial = 0; trial < 4; ++trial) {
      const auto K = random_symmetric_polytope(2, 4, rng);
      const auto L = random_symmetric_polytope(2, 4, rng);
      const auto d = trial % 2 == 0 ? leb : x1_2;
      const double direct = mixed_measure(K, L, d).value;
      const auto oracle =
          mixed_measure_oracle(K, L, d, {0.04, 0.02, 0.01}, 0, seed);
      ok = ok && std::abs(direct - oracle.value) <= 0.02 * std::abs(direct);
    }
    record("03-mixed-routes", ok, "surface integral vs finite differences");
  }
  {  // Minkowski solver.
    MinkowskiProblem problem;
    problem.density = x1_2;
    problem.normals = sq2.normals();
    problem.targets.resize(4);
    problem.targets << 2, 1, 2, 1;
    bool ok = true;
    const auto report = solve(problem);
    ok = ok && report.max_residual() < 1e-6;
    for (Index i = 0; i < 4; ++i)
      ok = ok && std::abs(report.offsets[i] - 1.0) < 1e-6;
    const auto probe = uniqueness_probe(problem, 3, 1e-7, seed);
    ok = ok && probe.passed;
    RngSequence rng(seed, 72);
    for (int trial = 0; trial < 3; ++trial) {
      const int n = 2 + trial % 2;
      const auto P = random_symmetric_polytope(n, n + 2, rng);
      ok = ok && round_trip(P, trial % 2 == 0 ? leb : axis_density(n)).passed;
    }
    record("04-minkowski-solver", ok, "square data, round trips, multistart");
  }
  {  // First inequality sweep.
    bool ok = true;
    RngSequence rng(seed, 73);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 2 + trial % 2;
      const auto K = random_symmetric_polytope(n, n + 2, rng);
      const auto L = random_symmetric_polytope(n, n + 2, rng);
      ok = ok &&
           first_inequality_check(K, L,
                                  trial % 2 == 0 ? leb : axis_density(n))
               .passed;
    }
    ok = ok &&
         std::abs(first_inequality_check(sq2, sq2.scaled(2.0), x1_2).slack) <
             1e-8;
    record("05-first-inequality", ok, "random pairs and dilate equality");
  }
  {  // Gaussian corollaries.
    const auto gauss = WeightedDensity::gaussian();
    const bool ok =
        f_concave_first_check(sq2, dia2, gauss, FConcavity::log(), 0, seed)
            .passed &&
        f_concave_first_check(sq2, dia2, gauss, FConcavity::ehrhard(), 0, seed)
            .passed &&
        isoperimetric_check(sq2, dia2, 0, seed).passed;
    record("06-gaussian-corollaries", ok, "log, Ehrhard, isoperimetric");
  }
  {  // Projection comparison.
    bool ok = true;
    RngSequence rng(seed, 74);
    for (int trial = 0; trial < 6; ++trial) {
      const int n = 2 + trial % 2;
      const auto L = random_zonotope(n, n + 2, rng);
      auto K = random_symmetric_polytope(n, n + 2, rng);
      double shrink = std::numeric_limits<double>::infinity();
      for (Index i = 0; i < L.facet_count(); ++i)
        shrink = std::min(
            shrink, L.offsets()[i] / K.support(L.normals().row(i).transpose()));
      K = K.scaled(0.95 * shrink);
      const auto report = shephard_verify(
          K, L, trial % 2 == 0 ? leb : axis_density(n), 64, seed);
      ok = ok && report.verdict == ComparisonVerdict::theorem_consistent;
    }
    record("07-shephard", ok, "nested pairs with zonotope targets");
  }
  {  // Stability bound.
    bool ok = true;
    RngSequence rng(seed, 75);
    for (int trial = 0; trial < 5; ++trial) {
      const auto L = random_zonotope(2, 4, rng);
      const auto K = random_symmetric_polytope(2, 4, rng);
      ok = ok && stability_check(K, L, leb, 64, seed).passed;
    }
    record("08-stability", ok, "explicit-constant bound");
  }
  {  // Projection-profile uniqueness smoke test.
    const bool ok =
        projection_distance(sq2, sq2, x1_2, 64, seed).max_abs_diff <= 1e-9 &&
        projection_distance(sq2, dia2, x1_2, 64, seed).max_abs_diff > 0.0;
    record("09-projection-distance", ok, "identical zero, distinct positive");
  }
  {  // Appendix properties.
    const auto implied = check_implied_concavity(x1_2, 1000, seed);
    const auto perturb = perturbation_continuity_check(
        sq2, x1_2, [](const Vector& u) { return std::abs(u[0]); },
        {0.04, 0.02, 0.01, 0.005}, seed, 16);
    record("10-appendix", implied.passed && perturb.mean_monotone,
           "implied concavity, perturbation continuity");
  }

  OrderedJson out;
  out["metadata"] = metadata("verify-suite", seed);
  OrderedJson case_list = OrderedJson::array();
  bool all_passed = true;
  for (const auto& c : cases) {
    case_list.push_back(
        {{"id", c.id}, {"passed", c.passed}, {"detail", c.detail}});
    all_passed = all_passed && c.passed;
    std::cerr << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << ": " << c.detail
              << "\n";
  }
  out["cases"] = case_list;
  out["passed"] = all_passed;
  emit_json(out, output);
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Weighted surface area measures, mixed measures, projection functions, "
      "and the discrete weighted Minkowski problem for symmetric polytopes"};
  app.require_subcommand(1);

  std::string body_file, k_file, l_file, density_file, problem_file;
  std::string output, format = "json";
  std::uint64_t seed = default_seed();
  long samples = 100000;
  long mc_samples = 1000000;
  int dim = 2, directions = 256, max_iter = 10000, starts = 1, trials = 20;
  double tol = 1e-7;
  std::vector<double> t_grid;
  bool with_oracle = false;

  // density validate
  auto* density_cmd = app.add_subcommand("density", "density operations");
  auto* validate = density_cmd->add_subcommand(
      "validate", "validate declared structure by sampling");
  validate->add_option("file", density_file, "density JSON file")->required();
  validate->add_option("--samples", samples, "sample count (default 100000)");
  validate->add_option("--seed", seed, "RNG seed (default WMINK_SEED or 1)");
  validate->add_option("--dim", dim,
                       "ambient dimension for non-directional kinds");
  validate->add_option("--output", output,
                       "write JSON here instead of stdout");

  // body info / is-zonotope
  auto* body_cmd = app.add_subcommand("body", "body operations");
  auto* info = body_cmd->add_subcommand("info", "vertices, faces, measures");
  info->add_option("file", body_file, "body JSON file")->required();
  info->add_option("--output", output, "output path");
  auto* zono = body_cmd->add_subcommand("is-zonotope",
                                        "2-face central-symmetry certificate");
  zono->add_option("file", body_file, "body JSON file")->required();
  zono->add_option("--output", output, "output path");

  // sigma
  auto* sigma_cmd = app.add_subcommand(
      "sigma", "weighted surface area measure as sphere atoms");
  sigma_cmd->add_option("body", body_file, "body JSON file")->required();
  sigma_cmd->add_option("density", density_file, "density JSON file")
      ->required();
  sigma_cmd->add_option("--format", format, "json or csv (default json)");
  sigma_cmd->add_option("--output", output, "output path");

  // measure
  auto* measure_cmd =
      app.add_subcommand("measure", "weighted measure of a body");
  measure_cmd->add_option("body", body_file)->required();
  measure_cmd->add_option("density", density_file)->required();
  measure_cmd->add_option("--mc", mc_samples,
                          "Monte Carlo samples (0 disables; default 1e6)");
  measure_cmd->add_option("--seed", seed, "RNG seed");
  measure_cmd->add_option("--output", output, "output path");

  // mixed
  auto* mixed_cmd =
      app.add_subcommand("mixed", "mixed measure mu_1(K,L) of two bodies");
  mixed_cmd->add_option("K", k_file)->required();
  mixed_cmd->add_option("L", l_file)->required();
  mixed_cmd->add_option("density", density_file)->required();
  mixed_cmd->add_flag("--oracle", with_oracle,
                      "also run the finite-difference oracle");
  mixed_cmd->add_option("--mc", mc_samples, "oracle MC samples");
  mixed_cmd->add_option("--seed", seed, "RNG seed");
  mixed_cmd->add_option("--output", output, "output path");

  // project
  auto* project_cmd = app.add_subcommand(
      "project", "projection profile P_mu over sampled directions (CSV)");
  project_cmd->add_option("body", body_file)->required();
  project_cmd->add_option("density", density_file)->required();
  project_cmd->add_option("--directions", directions,
                          "direction count (default 256)");
  project_cmd->add_option("--t-grid", t_grid,
                          "emit p(theta,t) at these t instead of P");
  project_cmd->add_option("--seed", seed, "RNG seed");
  project_cmd->add_option("--output", output, "output path");

  // solve-minkowski
  auto* solve_cmd = app.add_subcommand(
      "solve-minkowski", "solve the discrete weighted Minkowski problem");
  solve_cmd->add_option("problem", problem_file, "problem JSON file")
      ->required();
  solve_cmd->add_option("--tol", tol, "KKT residual tolerance (default 1e-7)");
  solve_cmd->add_option("--max-iter", max_iter, "iteration cap");
  solve_cmd->add_option("--starts", starts,
                        "multistart count for the uniqueness probe");
  solve_cmd->add_option("--seed", seed, "RNG seed");
  solve_cmd->add_option("--output", output, "output path");

  // shephard
  auto* shephard_cmd =
      app.add_subcommand("shephard", "projection comparison harnesses");
  auto* check_cmd = shephard_cmd->add_subcommand(
      "check", "dominance sampling plus measure comparison");
  check_cmd->add_option("K", k_file)->required();
  check_cmd->add_option("L", l_file)->required();
  check_cmd->add_option("density", density_file)->required();
  check_cmd->add_option("--directions", directions);
  check_cmd->add_option("--seed", seed);
  check_cmd->add_option("--output", output);
  auto* stability_cmd = shephard_cmd->add_subcommand(
      "stability", "explicit-constant stability bound");
  stability_cmd->add_option("K", k_file)->required();
  stability_cmd->add_option("L", l_file)->required();
  stability_cmd->add_option("density", density_file)->required();
  stability_cmd->add_option("--directions", directions);
  stability_cmd->add_option("--seed", seed);
  stability_cmd->add_option("--output", output);
  auto* batch_cmd = shephard_cmd->add_subcommand(
      "batch", "randomized dominated pairs against zonotope targets");
  batch_cmd->add_option("--trials", trials, "pair count (default 20)");
  batch_cmd->add_option("--dim", dim, "dimension (default 2)");
  batch_cmd->add_option("--density", density_file,
                        "density JSON (default |x1|)");
  batch_cmd->add_option("--directions", directions);
  batch_cmd->add_option("--seed", seed);
  batch_cmd->add_option("--output", output);

  // verify first-inequality
  auto* verify_cmd = app.add_subcommand("verify", "randomized theorem sweeps");
  auto* first_cmd = verify_cmd->add_subcommand(
      "first-inequality", "Minkowski first inequality slacks (CSV)");
  first_cmd->add_option("--trials", trials, "pair count (default 20)");
  first_cmd->add_option("--seed", seed);
  first_cmd->add_option("--density", density_file,
                        "density JSON (default |x1|)");
  first_cmd->add_option("--dim", dim, "dimension (default 2)");
  first_cmd->add_option("--output", output);

  // verify-suite
  auto* suite_cmd = app.add_subcommand(
      "verify-suite", "one-shot verification suite over all modules");
  suite_cmd->add_option("--seed", seed);
  suite_cmd->add_option("--output", output);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed())
      return run_density_validate(density_file, samples, seed, dim, output);
    if (info->parsed()) return run_body_info(body_file, output);
    if (zono->parsed()) return run_body_is_zonotope(body_file, output);
    if (sigma_cmd->parsed())
      return run_sigma(body_file, density_file, format, output);
    if (measure_cmd->parsed())
      return run_measure(body_file, density_file, mc_samples, seed, output);
    if (mixed_cmd->parsed())
      return run_mixed(k_file, l_file, density_file, with_oracle, mc_samples,
                       seed, output);
    if (project_cmd->parsed())
      return run_project(body_file, density_file, directions, t_grid, seed,
                         output);
    if (solve_cmd->parsed())
      return run_solve(problem_file, tol, max_iter, starts, seed, output);
    if (check_cmd->parsed())
      return run_shephard_check(k_file, l_file, density_file, directions, seed,
                                output);
    if (stability_cmd->parsed())
      return run_shephard_stability(k_file, l_file, density_file, directions,
                                    seed, output);
    if (batch_cmd->parsed())
      return run_shephard_batch(trials, dim, density_file, directions, seed,
                                output);
    if (first_cmd->parsed())
      return run_verify_first_inequality(trials, seed, density_file, dim,
                                         output);
    if (suite_cmd->parsed()) return run_verify_suite(seed, output);
    std::cerr << "no subcommand dispatched\n";
    return 2;
  } catch (const wmink::DomainError& err) {
    std::cerr << "input error: " << err.what() << "\n";
    return 2;
  } catch (const wmink::DegenerateInput& err) {
    std::cerr << "input error: " << err.what() << "\n";
    return 2;
  } catch (const wmink::UnboundedBody& err) {
    std::cerr << "input error: " << err.what() << "\n";
    return 2;
  } catch (const wmink::DegenerateGenerators& err) {
    std::cerr << "input error: " << err.what() << "\n";
    return 2;
  } catch (const wmink::NonHomogeneousDensity& err) {
    std::cerr << "input error: " << err.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& err) {
    std::cerr << "input error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}
