// lskew: analyze field configurations, compute windings, run the identity
// battery, and boost fields, emitting JSON reports on stdout.

#include "lskew/battery.hpp"
#include "lskew/eigenstructure.hpp"
#include "lskew/energy_momentum.hpp"
#include "lskew/errors.hpp"
#include "lskew/field_topology.hpp"
#include "lskew/json_io.hpp"
#include "lskew/lorentz.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using lskew::Json;

void require_finite(const std::vector<double>& values, const char* what) {
  for (double v : values)
    if (!std::isfinite(v))
      throw lskew::Error(lskew::ErrorKind::BadArgument,
                         std::string(what) + " must be finite numbers");
}

double global_tol() {
  if (const char* env = std::getenv("LORENTZ_SKEW_TOL")) {
    try {
      const double tol = std::stod(env);
      if (tol > 0) return tol;
    } catch (...) {
    }
    throw lskew::Error(lskew::ErrorKind::BadArgument,
                       "LORENTZ_SKEW_TOL must be a positive number");
  }
  return lskew::kDefaultTol;
}

void emit(const std::string& command, const Json& inputs, const Json& results,
          std::optional<double> wall_ms, std::optional<std::uint64_t> seed, bool pretty) {
  Json report{{"command", command}, {"inputs_echo", inputs}, {"results", results}};
  if (seed) report["seed"] = *seed;
  if (wall_ms) report["wall_time_ms"] = *wall_ms;
  std::cout << (pretty ? report.dump(2) : report.dump()) << "\n";
}

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
  }

 private:
  using Clock = std::chrono::steady_clock;
  Clock::time_point start_ = Clock::now();
};

int cmd_analyze(const std::string& config_path, const std::vector<double>& point,
                bool with_matrices, bool pretty) {
  const Timer timer;
  const double tol = global_tol();
  const Json config_json = lskew::load_json_file(config_path);
  const lskew::FieldConfig config = lskew::config_from_json(config_json);
  const lskew::Vec3 p(point[0], point[1], point[2]);

  const lskew::SkewField f = lskew::eval_config(config, p);
  const lskew::Complex psi_value = lskew::psi(f);
  const lskew::EigenData eigen = lskew::eigenvalues(f);

  Json field_json = lskew::to_json(f);
  if (with_matrices) field_json["matrix"] = lskew::matrix_json(f.matrix());
  Json results{{"field", std::move(field_json)},
               {"psi", Json::array({psi_value.real(), psi_value.imag()})},
               {"eigen", lskew::to_json(eigen)},
               {"lambda_T", eigen.lambda_T},
               {"poynting", lskew::to_json(lskew::poynting(f))},
               {"region", lskew::to_string(lskew::region_classify(config, p, tol))}};
  if (with_matrices) results["energy_momentum"] = lskew::to_json(lskew::energy_momentum(f));
  emit("analyze", Json{{"config", config_json}, {"point", lskew::to_json(p)}}, results,
       timer.ms(), std::nullopt, pretty);
  return 0;
}

int cmd_winding(const std::string& config_path, const std::string& loop_path, bool pretty) {
  const Timer timer;
  const double tol = global_tol();
  const Json config_json = lskew::load_json_file(config_path);
  const Json loop_json = lskew::load_json_file(loop_path);
  const lskew::FieldConfig config = lskew::config_from_json(config_json);
  const lskew::LoopSpec loop = lskew::loop_from_json(loop_json);

  const lskew::WindingReport report = lskew::winding(config, loop, tol);
  const lskew::Parity continuation = lskew::eigenvalue_continuation(config, loop, tol);

  Json results{{"winding_report", lskew::to_json(report)},
               {"continuation_parity", lskew::to_string(continuation)},
               {"parity_consistent", continuation == report.parity}};
  emit("winding", Json{{"config", config_json}, {"loop", loop_json}}, results, timer.ms(),
       std::nullopt, pretty);
  return 0;
}

int cmd_verify(std::uint64_t seed, int cases, bool pretty) {
  if (cases < 1) throw lskew::Error(lskew::ErrorKind::BadArgument, "cases must be >= 1");
  const lskew::BatteryReport report = lskew::run_battery(seed, cases);
  // No wall time here: identical inputs must produce byte-identical reports.
  emit("verify", Json{{"seed", seed}, {"cases", cases}}, lskew::to_json(report), std::nullopt,
       seed, pretty);
  return report.all_pass ? 0 : 1;
}

int cmd_boost(const std::vector<double>& e, const std::vector<double>& b,
              const std::vector<double>& w, bool pretty) {
  const Timer timer;
  const lskew::SkewField f(lskew::Vec3(e[0], e[1], e[2]), lskew::Vec3(b[0], b[1], b[2]));
  const lskew::BoostVelocity velocity(lskew::Vec3(w[0], w[1], w[2]));

  const lskew::FieldTransformResult tr = lskew::transform_fields(f, velocity);
  const double e_dot_b_prime = lskew::inner(tr.E_prime, tr.B_prime);
  const double diff_prime =
      lskew::inner(tr.E_prime, tr.E_prime) - lskew::inner(tr.B_prime, tr.B_prime);

  Json results{{"E_prime", lskew::to_json(tr.E_prime)},
               {"B_prime", lskew::to_json(tr.B_prime)},
               {"invariants", Json{{"EdotB", f.e_dot_b()}, {"E2mB2", f.e2() - f.b2()}}},
               {"invariants_after", Json{{"EdotB", e_dot_b_prime}, {"E2mB2", diff_prime}}}};
  results["scale_factor"] =
      f.scale() > 0 ? Json(lskew::eigenvector_scale_factor(f, velocity)) : Json(nullptr);
  if (f.scale() > 0 && !lskew::is_null(f)) {
    results["poynting_eliminating_w"] =
        lskew::to_json(lskew::poynting_eliminating_velocity(f).w());
  } else {
    results["poynting_eliminating_w"] = nullptr;
  }

  emit("boost",
       Json{{"E", Json::array({e[0], e[1], e[2]})}, {"B", Json::array({b[0], b[1], b[2]})},
            {"w", Json::array({w[0], w[1], w[2]})}},
       results, timer.ms(), std::nullopt, pretty);
  return 0;
}

int emit_error(const char* type, const std::string& message) {
  std::cerr << Json{{"error", Json{{"type", type}, {"message", message}}}}.dump() << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algebra and topology of metric-skew-symmetric field operators"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  auto* analyze = app.add_subcommand("analyze", "evaluate a configuration at a point");
  std::string config_path;
  std::vector<double> point;
  bool with_matrices = false;
  analyze->add_option("--config", config_path, "configuration JSON file")->required();
  analyze->add_option("--point", point, "evaluation point x y z")->expected(3)->required();
  analyze->add_flag("--matrix", with_matrices, "include row-major operator matrices");

  auto* winding_cmd = app.add_subcommand("winding", "winding of psi along a loop");
  std::string winding_config, loop_path;
  winding_cmd->add_option("--config", winding_config, "configuration JSON file")->required();
  winding_cmd->add_option("--loop", loop_path, "loop JSON file")->required();

  auto* verify = app.add_subcommand("verify", "run the identity battery");
  std::uint64_t seed = 42;
  int cases = 1000;
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--cases", cases, "number of random cases");

  auto* boost = app.add_subcommand("boost", "transform fields to a boosted observer");
  std::vector<double> e_in, b_in, w_in;
  boost->add_option("--E", e_in, "electric field")->expected(3)->required();
  boost->add_option("--B", b_in, "magnetic field")->expected(3)->required();
  boost->add_option("--w", w_in, "relative velocity")->expected(3)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& e) {
    emit_error("BadArgument", e.what());
    return e.get_exit_code() == 0 ? 1 : e.get_exit_code();
  }

  try {
    if (*analyze) {
      require_finite(point, "--point components");
      return cmd_analyze(config_path, point, with_matrices, pretty);
    }
    if (*winding_cmd) return cmd_winding(winding_config, loop_path, pretty);
    if (*verify) return cmd_verify(seed, cases, pretty);
    require_finite(e_in, "--E components");
    require_finite(b_in, "--B components");
    require_finite(w_in, "--w components");
    return cmd_boost(e_in, b_in, w_in, pretty);
  } catch (const lskew::Error& e) {
    return emit_error(to_string(e.kind()), e.what());
  } catch (const std::exception& e) {
    return emit_error("Internal", e.what());
  }
}
