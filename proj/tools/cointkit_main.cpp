// cointkit command line: run | adf | simulate | plot

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cointkit/cointkit.hpp"

namespace ck = cointkit;
using ck::Json;

namespace {

int fail(ck::Stage stage, const std::string& message) {
  std::cerr << "error [" << ck::to_string(stage) << "]: " << message << "\n";
  return ck::exit_code(stage);
}

Eigen::MatrixXd matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) return {};
  Eigen::MatrixXd m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(j.front().size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].size() != static_cast<std::size_t>(m.cols()))
      throw ck::Error(ck::ErrorCode::InvalidConfig, "ragged matrix in spec");
    for (std::size_t c = 0; c < j[i].size(); ++c)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = j[i][c].get<double>();
  }
  return m;
}

struct SimulationJob {
  ck::DgpSpec dgp;
  ck::TestDescriptor test;
  std::size_t reps = 1000;
  double alpha = 0.05;
};

SimulationJob load_simulation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ck::Error(ck::ErrorCode::FileNotFound, "cannot open '" + path.string() + "'");
  SimulationJob job;
  try {
    const Json j = Json::parse(in);
    const Json& d = j.at("dgp");
    job.dgp.kind = ck::parse_dgp_kind(d.at("kind").get<std::string>());
    job.dgp.k = d.value("k", std::size_t{1});
    job.dgp.T = d.value("T", std::size_t{100});
    job.dgp.phi = d.value("phi", 0.5);
    if (d.contains("alpha")) job.dgp.alpha = matrix_from_json(d.at("alpha"));
    if (d.contains("beta")) job.dgp.beta = matrix_from_json(d.at("beta"));
    if (d.contains("innovation_cov")) job.dgp.innovation_cov = matrix_from_json(d.at("innovation_cov"));
    job.dgp.seed = d.value("seed", std::uint64_t{1});
    job.dgp.burn_in = d.value("burn_in", std::size_t{0});
    if (j.contains("test")) {
      const Json& t = j.at("test");
      job.test.name = t.value("name", std::string("adf"));
      if (t.contains("adf_case")) job.test.adf_case = ck::parse_deterministic(t.at("adf_case").get<std::string>());
      if (t.contains("johansen_case"))
        job.test.johansen_case = ck::parse_johansen_case(t.at("johansen_case").get<std::string>());
      job.test.lag = t.value("lag", std::size_t{1});
      job.test.variable = t.value("variable", std::size_t{0});
    }
    job.reps = j.value("reps", job.reps);
    job.alpha = j.value("alpha", job.alpha);
  } catch (const Json::exception& e) {
    throw ck::Error(ck::ErrorCode::InvalidConfig, std::string("bad simulation spec: ") + e.what());
  }
  return job;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string fixed6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unit roots, cointegration and error-correction models for annual panels"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Run the full analysis from a JSON config");
  std::string config_path;
  std::optional<double> alpha_override;
  std::optional<std::size_t> max_lag_override;
  std::string det_case_override, format_override, out_dir_override;
  run->add_option("--config", config_path, "JSON run configuration")->required();
  run->add_option("--alpha", alpha_override, "Significance level");
  run->add_option("--max-lag", max_lag_override, "Largest VAR lag considered");
  run->add_option("--det-case", det_case_override, "Johansen deterministic case (1-5 or name)");
  run->add_option("--format", format_override, "Report format")->check(CLI::IsMember({"json", "text"}));
  run->add_option("--out-dir", out_dir_override, "Output directory");

  // adf
  auto* adf = app.add_subcommand("adf", "Augmented Dickey-Fuller test on one CSV column");
  std::string adf_input, adf_var, adf_case = "c", adf_format = "text";
  bool adf_diff = false, adf_log = false;
  std::optional<std::size_t> adf_lags, adf_max_lag;
  double adf_alpha = 0.05;
  adf->add_option("--input", adf_input, "CSV file")->required();
  adf->add_option("--var", adf_var, "Column name")->required();
  adf->add_flag("--diff", adf_diff, "Test the first difference");
  adf->add_flag("--log", adf_log, "Take logs before testing");
  adf->add_option("--det-case", adf_case, "none | constant | constant_and_trend (n, c, ct)");
  adf->add_option("--lags", adf_lags, "Fixed number of lagged differences");
  adf->add_option("--max-lag", adf_max_lag, "Upper bound for automatic lag choice");
  adf->add_option("--alpha", adf_alpha, "Significance level");
  adf->add_option("--format", adf_format, "Output format")->check(CLI::IsMember({"json", "text"}));

  // simulate
  auto* sim = app.add_subcommand("simulate", "Monte Carlo rejection rate of a test under a DGP");
  std::string sim_spec, sim_format = "text";
  std::optional<std::size_t> sim_reps;
  std::optional<double> sim_alpha;
  unsigned sim_threads = 0;
  sim->add_option("--spec", sim_spec, "JSON simulation spec")->required();
  sim->add_option("--reps", sim_reps, "Number of replications");
  sim->add_option("--alpha", sim_alpha, "Nominal level");
  sim->add_option("--threads", sim_threads, "Worker threads (0 = all cores)");
  sim->add_option("--format", sim_format, "Output format")->check(CLI::IsMember({"json", "text"}));

  // plot
  auto* plot = app.add_subcommand("plot", "SVG line chart of CSV columns");
  std::string plot_input, plot_vars, plot_out, plot_title;
  plot->add_option("--input", plot_input, "CSV file")->required();
  plot->add_option("--vars", plot_vars, "Comma separated column names")->required();
  plot->add_option("--out", plot_out, "Output SVG path")->required();
  plot->add_option("--title", plot_title, "Chart title");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ck::exit_code(ck::Stage::usage);
  }

  if (*run) {
    ck::RunConfig config;
    try {
      config = ck::load_config(config_path);
      if (alpha_override) config.alpha = *alpha_override;
      if (max_lag_override) config.p_max = *max_lag_override;
      if (!det_case_override.empty()) config.johansen_case = ck::parse_johansen_case(det_case_override);
      if (!format_override.empty()) config.formats = {format_override};
      if (!out_dir_override.empty()) config.output_dir = out_dir_override;
      config.validate();
    } catch (const ck::Error& e) {
      return fail(ck::Stage::config, e.what());
    }
    try {
      const ck::PipelineReport report = ck::run_pipeline(config);
      for (const auto& w : report.warnings) std::cerr << w << "\n";
      for (const auto& p : ck::write_outputs(report, config)) std::cout << "wrote " << p.string() << "\n";
    } catch (const ck::StageError& e) {
      return fail(e.stage(), e.what());
    }
    return 0;
  }

  if (*adf) {
    std::optional<ck::Series> loaded;
    try {
      loaded = ck::read_csv(adf_input).series(adf_var);
      if (adf_log) loaded = ck::log_transform(*loaded);
    } catch (const ck::Error& e) {
      return fail(ck::Stage::load, e.what());
    }
    try {
      const ck::Deterministic det = ck::parse_deterministic(adf_case);
      const ck::Series s = adf_diff ? ck::difference(*loaded, 1) : *loaded;
      const ck::AdfResult r = ck::adf_test(s, det, adf_lags, adf_max_lag);
      const bool reject = r.p_value <= adf_alpha;
      if (adf_format == "json") {
        Json j{{"variable", s.name()},
               {"deterministic", std::string(ck::to_string(r.deterministic))},
               {"statistic", r.statistic},
               {"p_value", r.p_value},
               {"lags", r.lags_used},
               {"n_effective", r.n_effective},
               {"critical_values",
                Json{{"1%", r.critical_values[0]}, {"5%", r.critical_values[1]}, {"10%", r.critical_values[2]}}},
               {"alpha", adf_alpha},
               {"reject_unit_root", reject}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "ADF test on " << s.name() << " (" << ck::to_string(r.deterministic) << ", " << r.lags_used
                  << " lags, " << r.n_effective << " obs)\n"
                  << "t-statistic: " << fixed6(r.statistic) << "\n"
                  << "p-value:     " << fixed6(r.p_value) << "\n"
                  << "critical values 1% " << fixed6(r.critical_values[0]) << "  5% "
                  << fixed6(r.critical_values[1]) << "  10% " << fixed6(r.critical_values[2]) << "\n"
                  << (reject ? "unit root rejected" : "unit root not rejected") << " at " << fixed6(adf_alpha)
                  << "\n";
      }
    } catch (const ck::Error& e) {
      return fail(ck::Stage::unit_root, e.what());
    }
    return 0;
  }

  if (*sim) {
    SimulationJob job;
    ck::RejectionTest test;
    try {
      job = load_simulation(sim_spec);
      if (sim_reps) job.reps = *sim_reps;
      if (sim_alpha) job.alpha = *sim_alpha;
      test = ck::make_test(job.test);
      ck::generate(job.dgp);  // surfaces an unstable spec before the workers start
    } catch (const ck::Error& e) {
      return fail(ck::Stage::config, e.what());
    }
    const ck::RejectionSummary r = ck::rejection_rate(test, job.dgp, job.reps, job.alpha, sim_threads);
    if (sim_format == "json") {
      Json j{{"dgp", std::string(ck::to_string(job.dgp.kind))},
             {"test", job.test.name},
             {"reps", job.reps},
             {"alpha", job.alpha},
             {"seed", job.dgp.seed},
             {"rejection_rate", r.rate},
             {"rejections", r.rejections},
             {"completed", r.completed},
             {"failures", r.failures}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << job.test.name << " under " << ck::to_string(job.dgp.kind) << ": " << r.rejections << " / "
                << r.completed << " rejections at " << fixed6(job.alpha) << " (rate " << fixed6(r.rate) << ", "
                << r.failures << " failed replications)\n";
    }
    return 0;
  }

  if (*plot) {
    std::optional<ck::Dataset> data;
    const auto vars = split_list(plot_vars);
    try {
      const ck::CsvTable table = ck::read_csv(plot_input);
      std::vector<ck::Series> cols;
      for (const auto& v : vars) cols.push_back(table.series(v));
      if (cols.empty()) throw ck::Error(ck::ErrorCode::UnknownVariable, "no variables selected for the plot");
      data.emplace(std::move(cols));
    } catch (const ck::Error& e) {
      return fail(ck::Stage::load, e.what());
    }
    try {
      ck::render_plot(*data, vars, plot_out, plot_title);
      std::cout << "wrote " << plot_out << "\n";
    } catch (const ck::Error& e) {
      return fail(ck::Stage::output, e.what());
    }
    return 0;
  }
  return ck::exit_code(ck::Stage::usage);
}
