#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "conifold/suites.hpp"

namespace {

conifold::RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  conifold::ordered_json j;
  in >> j;
  return conifold::RunConfig::from_json(j);
}

int finish(conifold::Report& rep, const conifold::RunConfig& cfg,
           std::chrono::steady_clock::time_point start) {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  rep.config = cfg.to_json();
  rep.wall_ms = cfg.emit_timing ? ms : 0;
  rep.print_lines(std::cout);
  if (!cfg.output.empty()) rep.write(cfg.output);
  std::cerr << "wall time: " << ms << " ms\n";
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for conifold transitions of knot conormal bundles"};
  app.require_subcommand(1);

  std::string config_path;
  conifold::RunConfig cfg;
  std::string knot, output, fixture, suite = "all";
  double eps = -1, r_min = -1, r_max = -1, tube = -1;
  std::vector<int> grid;
  std::int64_t seed = -1;
  bool timing = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file (flags override it)");
    cmd->add_option("--knot", knot, "knot spec: unknot | torus:m,n | fourier:<json>");
    cmd->add_option("--eps", eps, "perturbation size in (0,1)");
    cmd->add_option("--grid", grid, "grid sizes n_t n_theta n_r")->expected(3);
    cmd->add_option("--r-min", r_min, "fiber radius lower bound (> 0)");
    cmd->add_option("--r-max", r_max, "fiber radius upper bound");
    cmd->add_option("--seed", seed, "run seed");
    cmd->add_option("--tube-radius", tube, "perturbation-field tube radius (0 = auto)");
    cmd->add_option("--output,-o", output, "output path");
    cmd->add_flag("--timing", timing, "write measured wall time into the JSON report");
  };

  CLI::App* c_sample = app.add_subcommand("ct-sample", "sample the transited bundle as CSV");
  add_common(c_sample);
  CLI::App* c_verify = app.add_subcommand("verify", "run a verification suite");
  add_common(c_verify);
  c_verify->add_option("--suite", suite,
                       "lagrangian | tame | bilipschitz | curvature | totally-real | "
                       "stokes | two-point | all");
  c_verify->add_option("--fixture", fixture, "curvature fixture: s3 | sphere2 | clifford");
  CLI::App* c_const = app.add_subcommand("report-constants", "measured constants as JSON");
  add_common(c_const);
  CLI::App* c_mesh = app.add_subcommand("mesh-export", "export the distance mesh as CSV");
  add_common(c_mesh);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto start = std::chrono::steady_clock::now();
  try {
    if (!config_path.empty()) cfg = load_config(config_path);
    if (!knot.empty()) cfg.knot = knot;
    if (eps >= 0) cfg.eps = eps;
    if (grid.size() == 3) {
      cfg.n_t = grid[0];
      cfg.n_theta = grid[1];
      cfg.n_r = grid[2];
    }
    if (r_min > 0) cfg.r_min = r_min;
    if (r_max > 0) cfg.r_max = r_max;
    if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
    if (tube >= 0) cfg.tube_radius = tube;
    if (!output.empty()) cfg.output = output;
    if (!fixture.empty()) cfg.fixture = fixture;
    cfg.emit_timing = timing;
    cfg.validate();

    if (c_sample->parsed()) {
      if (cfg.output.empty()) {
        conifold::ct_sample_csv(cfg, std::cout);
      } else {
        std::ofstream out(cfg.output);
        if (!out) throw std::runtime_error("cannot open '" + cfg.output + "'");
        conifold::ct_sample_csv(cfg, out);
      }
      return 0;
    }
    if (c_verify->parsed()) {
      conifold::Report rep = conifold::run_suite(suite, cfg);
      return finish(rep, cfg, start);
    }
    if (c_const->parsed()) {
      conifold::Report rep = conifold::report_constants(cfg);
      return finish(rep, cfg, start);
    }
    if (c_mesh->parsed()) {
      if (cfg.output.empty()) throw std::invalid_argument("mesh-export needs --output");
      conifold::mesh_export_cmd(cfg, cfg.output);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
