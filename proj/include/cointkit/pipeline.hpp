#pragma once

// End-to-end run: load -> unit roots -> lag order -> Johansen -> long-run
// relation -> VECM -> residual diagnostics, rendered as JSON and text.

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cointkit/csv.hpp"
#include "cointkit/diagnostics.hpp"
#include "cointkit/errors.hpp"
#include "cointkit/johansen.hpp"
#include "cointkit/plot.hpp"
#include "cointkit/series.hpp"
#include "cointkit/unit_root.hpp"
#include "cointkit/var_select.hpp"
#include "cointkit/vecm.hpp"

namespace cointkit {

using Json = nlohmann::ordered_json;

// Exit codes of the command line tool, one per stage.
enum class Stage {
  usage = 1,
  config = 2,
  load = 3,
  unit_root = 4,
  lag_selection = 5,
  johansen = 6,
  vecm = 7,
  diagnostics = 8,
  output = 9,
};

constexpr std::string_view to_string(Stage s) {
  switch (s) {
    case Stage::usage: return "usage";
    case Stage::config: return "config";
    case Stage::load: return "load";
    case Stage::unit_root: return "unit_root";
    case Stage::lag_selection: return "lag_selection";
    case Stage::johansen: return "johansen";
    case Stage::vecm: return "vecm";
    case Stage::diagnostics: return "diagnostics";
    case Stage::output: return "output";
  }
  return "?";
}

constexpr int exit_code(Stage s) { return static_cast<int>(s); }

class StageError : public Error {
 public:
  StageError(Stage stage, const Error& cause)
      : Error(cause.code(), std::string(to_string(stage)) + ": " + cause.what(), cause.detail()), stage_(stage) {}
  Stage stage() const { return stage_; }

 private:
  Stage stage_;
};

struct VariableSpec {
  std::string column;
  bool log = false;
  std::string name;  // empty: "l_<column>" when logged, else the column
};

struct PlotConfig {
  bool enabled = false;
  std::vector<std::string> variables;  // empty: all analysed variables
  std::string file = "trends.svg";
  std::string title;
};

struct RunConfig {
  std::filesystem::path input;
  std::vector<VariableSpec> variables;
  double alpha = 0.05;
  std::size_t p_max = 3;
  std::optional<std::size_t> lag_override;
  LagRule lag_rule = LagRule::majority;
  Deterministic adf_level_case = Deterministic::constant_and_trend;
  Deterministic adf_diff_case = Deterministic::constant;
  std::optional<std::size_t> adf_lags;
  std::optional<std::size_t> adf_max_lags;
  JohansenCase johansen_case = JohansenCase::unrestricted_constant;
  std::optional<std::size_t> rank_override;
  std::string normalize_on;  // empty: first variable
  EcReading ec_reading = EcReading::distinct_relations;
  std::filesystem::path output_dir = "out";
  std::vector<std::string> formats = {"json", "text"};
  PlotConfig plot;
  bool stop_on_non_i1 = false;

  void validate() const {
    if (!(alpha > 0.0 && alpha <= 0.5)) throw Error(ErrorCode::InvalidConfig, "alpha must lie in (0, 0.5]");
    if (p_max < 1) throw Error(ErrorCode::InvalidConfig, "p_max must be at least 1");
    if (lag_override && *lag_override < 1) throw Error(ErrorCode::InvalidConfig, "lag_override must be at least 1");
    if (variables.empty()) throw Error(ErrorCode::InvalidConfig, "no variables configured");
    for (const auto& f : formats)
      if (f != "json" && f != "text") throw Error(ErrorCode::InvalidConfig, "unknown format '" + f + "'");
  }
};

inline std::string variable_name(const VariableSpec& v) {
  if (!v.name.empty()) return v.name;
  return v.log ? "l_" + v.column : v.column;
}

namespace detail {

template <typename T>
T get_or(const Json& j, const char* key, T fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  return j.at(key).get<T>();
}

inline std::optional<std::size_t> get_count(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  const auto v = j.at(key).get<long long>();
  if (v < 0) throw Error(ErrorCode::InvalidConfig, std::string(key) + " must be non-negative");
  return static_cast<std::size_t>(v);
}

}  // namespace detail

/// Builds a RunConfig from JSON. Relative paths are resolved against `base`.
inline RunConfig parse_config(const Json& j, const std::filesystem::path& base = {}) {
  RunConfig c;
  try {
    if (!j.is_object()) throw Error(ErrorCode::InvalidConfig, "config must be a JSON object");
    static constexpr std::array<std::string_view, 18> known = {
        "input",         "variables",  "alpha",          "p_max",         "lag_override", "lag_rule",
        "adf_level_case", "adf_diff_case", "adf_lags",    "adf_max_lags",  "johansen_case", "rank_override",
        "normalize_on",  "ec_reading", "output_dir",     "formats",       "plot",          "stop_on_non_i1"};
    for (const auto& [key, _] : j.items())
      if (std::find(known.begin(), known.end(), key) == known.end())
        throw Error(ErrorCode::InvalidConfig, "unknown config key '" + key + "'");
    if (!j.contains("input")) throw Error(ErrorCode::InvalidConfig, "config needs an 'input' path");
    c.input = j.at("input").get<std::string>();
    if (c.input.is_relative() && !base.empty()) c.input = base / c.input;
    if (!j.contains("variables") || !j.at("variables").is_array())
      throw Error(ErrorCode::InvalidConfig, "config needs a 'variables' array");
    for (const auto& v : j.at("variables")) {
      VariableSpec spec;
      if (v.is_string()) {
        spec.column = v.get<std::string>();
      } else {
        for (const auto& [key, _] : v.items())
          if (key != "column" && key != "log" && key != "name")
            throw Error(ErrorCode::InvalidConfig, "unknown variable key '" + key + "'");
        spec.column = v.at("column").get<std::string>();
        spec.log = detail::get_or(v, "log", false);
        spec.name = detail::get_or(v, "name", std::string());
      }
      c.variables.push_back(spec);
    }
    c.alpha = detail::get_or(j, "alpha", c.alpha);
    if (auto p = detail::get_count(j, "p_max")) c.p_max = *p;
    c.lag_override = detail::get_count(j, "lag_override");
    if (j.contains("lag_rule")) c.lag_rule = parse_lag_rule(j.at("lag_rule").get<std::string>());
    if (j.contains("adf_level_case")) c.adf_level_case = parse_deterministic(j.at("adf_level_case").get<std::string>());
    if (j.contains("adf_diff_case")) c.adf_diff_case = parse_deterministic(j.at("adf_diff_case").get<std::string>());
    c.adf_lags = detail::get_count(j, "adf_lags");
    c.adf_max_lags = detail::get_count(j, "adf_max_lags");
    if (j.contains("johansen_case")) {
      const auto& v = j.at("johansen_case");
      c.johansen_case = parse_johansen_case(v.is_number() ? std::to_string(v.get<int>()) : v.get<std::string>());
    }
    c.rank_override = detail::get_count(j, "rank_override");
    c.normalize_on = detail::get_or(j, "normalize_on", std::string());
    if (j.contains("ec_reading")) c.ec_reading = parse_ec_reading(j.at("ec_reading").get<std::string>());
    c.output_dir = detail::get_or(j, "output_dir", std::string("out"));
    if (c.output_dir.is_relative() && !base.empty()) c.output_dir = base / c.output_dir;
    if (j.contains("formats")) c.formats = j.at("formats").get<std::vector<std::string>>();
    if (j.contains("plot")) {
      const auto& p = j.at("plot");
      for (const auto& [key, _] : p.items())
        if (key != "enabled" && key != "variables" && key != "file" && key != "title")
          throw Error(ErrorCode::InvalidConfig, "unknown plot key '" + key + "'");
      c.plot.enabled = detail::get_or(p, "enabled", true);
      c.plot.variables = detail::get_or(p, "variables", std::vector<std::string>());
      c.plot.file = detail::get_or(p, "file", c.plot.file);
      c.plot.title = detail::get_or(p, "title", std::string());
    }
    c.stop_on_non_i1 = detail::get_or(j, "stop_on_non_i1", false);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidConfig, std::string("bad config: ") + e.what());
  }
  c.validate();
  return c;
}

inline RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::FileNotFound, "cannot open '" + path.string() + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("config is not valid JSON: ") + e.what(),
                static_cast<long>(e.byte));
  }
  return parse_config(j, path.parent_path());
}

/// Reads the CSV, checks the configured columns, log-transforms flagged
/// ones and aligns everything on the common years.
inline Dataset load_csv(const std::filesystem::path& path, const RunConfig& config) {
  const CsvTable table = read_csv(path);
  std::vector<Series> vars;
  for (const auto& v : config.variables) {
    Series s = table.series(v.column);
    if (v.log) s = log_transform(s);
    vars.push_back(s.renamed(variable_name(v)));
  }
  return align(std::span<const Series>(vars));
}

// ---- report ----------------------------------------------------------------

struct ReportSection {
  std::string name;
  Json data;
  std::string text;
};

struct PipelineReport {
  std::vector<std::string> warnings;
  std::vector<ReportSection> sections;

  std::vector<IntegrationDecision> integration;
  LagSelectionTable lags;
  std::size_t lag_used = 0;
  JohansenResult johansen;
  RankDecision ranks;
  std::size_t rank_used = 0;
  LongRunEquation long_run;
  VecmModel vecm;
  HeteroskedasticityResult white;
  NormalityResult normality;
  std::optional<Dataset> data;

  const ReportSection* section(std::string_view name) const {
    for (const auto& s : sections)
      if (s.name == name) return &s;
    return nullptr;
  }
};

inline constexpr std::array<std::string_view, 7> kReportSections = {
    "adf_table", "lag_table", "johansen_table", "long_run_equation", "vecm_table", "heteroskedasticity",
    "normality"};

namespace detail {

inline std::string f6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

inline std::string pad(std::string s, std::size_t width, bool left = false) {
  if (s.size() >= width) return s;
  return left ? s + std::string(width - s.size(), ' ') : std::string(width - s.size(), ' ') + s;
}

inline Json adf_json(const AdfResult& r) {
  return Json{{"statistic", r.statistic},
              {"p_value", r.p_value},
              {"lags", r.lags_used},
              {"deterministic", std::string(to_string(r.deterministic))},
              {"n_effective", r.n_effective},
              {"critical_values", Json{{"1%", r.critical_values[0]},
                                       {"5%", r.critical_values[1]},
                                       {"10%", r.critical_values[2]}}}};
}

inline ReportSection adf_section(const std::vector<IntegrationDecision>& rows) {
  ReportSection s{"adf_table", Json::array(), ""};
  s.text = pad("Variable", 12, true) + pad("Level t", 14) + pad("p-value", 12) + pad("Lags", 6) +
           pad("Diff t", 14) + pad("p-value", 12) + pad("Lags", 6) + "  Order\n";
  for (const auto& r : rows) {
    s.data.push_back(Json{{"variable", r.variable},
                          {"level", adf_json(r.level)},
                          {"first_difference", adf_json(r.first_difference)},
                          {"order", std::string(to_string(r.order))}});
    s.text += pad(r.variable, 12, true) + pad(f6(r.level.statistic), 14) + pad(f6(r.level.p_value), 12) +
              pad(std::to_string(r.level.lags_used), 6) + pad(f6(r.first_difference.statistic), 14) +
              pad(f6(r.first_difference.p_value), 12) + pad(std::to_string(r.first_difference.lags_used), 6) +
              "  " + std::string(to_string(r.order)) + "\n";
  }
  return s;
}

inline ReportSection lag_section(const LagSelectionTable& t, std::size_t used) {
  ReportSection s{"lag_table", Json::object(), ""};
  Json rows = Json::array();
  s.text = pad("Lag", 5, true) + pad("LogL", 14) + pad("AIC", 14) + pad("SC", 14) + pad("HQ", 14) + "\n";
  for (const auto& r : t.rows) {
    rows.push_back(Json{{"p", r.p},
                        {"loglik", r.loglik},
                        {"aic", r.criteria.aic},
                        {"sc", r.criteria.sc},
                        {"hq", r.criteria.hq}});
    auto mark = [&](double v, std::size_t best) { return f6(v) + (r.p == best ? "*" : " "); };
    s.text += pad(std::to_string(r.p), 5, true) + pad(f6(r.loglik) + " ", 14) + pad(mark(r.criteria.aic, t.aic_lag), 14) +
              pad(mark(r.criteria.sc, t.sc_lag), 14) + pad(mark(r.criteria.hq, t.hq_lag), 14) + "\n";
  }
  s.data["rows"] = rows;
  s.data["T_effective"] = t.T_effective;
  s.data["aic_lag"] = t.aic_lag;
  s.data["sc_lag"] = t.sc_lag;
  s.data["hq_lag"] = t.hq_lag;
  s.data["rule"] = std::string(to_string(t.rule));
  s.data["recommended"] = t.recommended;
  s.data["lag_used"] = used;
  s.text += "* marks the lag chosen by each criterion\n";
  s.text += "Recommended lag (" + std::string(to_string(t.rule)) + "): " + std::to_string(t.recommended) +
            ", used: " + std::to_string(used) + "\n";
  return s;
}

inline ReportSection johansen_section(const JohansenResult& res, const RankDecision& dec, std::size_t used) {
  ReportSection s{"johansen_table", Json::object(), dec.table};
  Json rows = Json::array();
  for (std::size_t r = 0; r < res.trace_rows.size(); ++r)
    rows.push_back(Json{{"rank", r},
                        {"eigenvalue", res.eigenvalues(static_cast<Eigen::Index>(r))},
                        {"trace", res.trace_rows[r].statistic},
                        {"trace_p_value", res.trace_rows[r].p_value},
                        {"max_eigen", res.max_eigen_rows[r].statistic},
                        {"max_eigen_p_value", res.max_eigen_rows[r].p_value}});
  s.data["case"] = std::string(to_string(res.det_case));
  s.data["p"] = res.p;
  s.data["T_effective"] = res.T_effective;
  s.data["rows"] = rows;
  s.data["trace_rank"] = dec.trace_rank;
  s.data["max_eigen_rank"] = dec.max_eigen_rank;
  s.data["rank_used"] = used;
  s.text += "Rank used: " + std::to_string(used) + "\n";
  return s;
}

inline ReportSection long_run_section(const LongRunEquation& eq) {
  ReportSection s{"long_run_equation", Json::object(), eq.render() + "\n"};
  s.data["normalized_on"] = eq.normalized_on;
  Json coef = Json::object();
  for (std::size_t i = 0; i < eq.regressors.size(); ++i) coef[eq.regressors[i]] = eq.coefficients[i];
  s.data["coefficients"] = coef;
  s.data["rendered"] = eq.render();
  return s;
}

inline ReportSection vecm_section(const VecmModel& m) {
  ReportSection s{"vecm_table", Json::object(), ""};
  s.data["rank"] = m.rank;
  s.data["p"] = m.p;
  s.data["case"] = std::string(to_string(m.det_case));
  s.data["ec_reading"] = std::string(to_string(m.reading));
  s.data["t_critical"] = m.t_critical;
  s.data["regressors"] = m.regressor_names;
  Json eqs = Json::array();
  for (const auto& e : m.equations) {
    Json rows = Json::array();
    for (std::size_t j = 0; j < m.regressor_names.size(); ++j) {
      const auto jj = static_cast<Eigen::Index>(j);
      rows.push_back(Json{{"regressor", m.regressor_names[j]},
                          {"coefficient", e.fit.coefficients(jj)},
                          {"standard_error", e.fit.standard_errors(jj)},
                          {"t_statistic", e.fit.t_statistics(jj)},
                          {"p_value", e.p_values[j]},
                          {"significant", static_cast<bool>(e.significant[j])}});
    }
    eqs.push_back(Json{{"variable", "d_" + e.variable},
                       {"rows", rows},
                       {"r_squared", e.fit.r_squared},
                       {"adjusted_r_squared", e.fit.adjusted_r_squared},
                       {"f_statistic", e.fit.f_statistic},
                       {"n_obs", e.fit.n_obs}});
  }
  s.data["equations"] = eqs;

  std::string& t = s.text;
  t = pad("Regressor", 14, true);
  for (const auto& e : m.equations) t += pad("d_" + e.variable, 16);
  t += "\n";
  for (std::size_t j = 0; j < m.regressor_names.size(); ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    std::string coef = pad(m.regressor_names[j], 14, true), se = pad("", 14), ts = pad("", 14);
    for (const auto& e : m.equations) {
      coef += pad(f6(e.fit.coefficients(jj)) + (e.significant[j] ? "*" : " "), 16);
      se += pad("(" + f6(e.fit.standard_errors(jj)) + ") ", 16);
      ts += pad("[" + f6(e.fit.t_statistics(jj)) + "] ", 16);
    }
    t += coef + "\n" + se + "\n" + ts + "\n";
  }
  auto stat_row = [&](const char* label, auto get) {
    std::string row = pad(label, 14, true);
    for (const auto& e : m.equations) row += pad(f6(get(e.fit)) + " ", 16);
    t += row + "\n";
  };
  stat_row("R-squared", [](const RegressionFit& f) { return f.r_squared; });
  stat_row("Adj. R-sq", [](const RegressionFit& f) { return f.adjusted_r_squared; });
  stat_row("F-statistic", [](const RegressionFit& f) { return f.f_statistic; });
  t += "Standard errors in ( ), t-statistics in [ ]; * |t| > " + f6(m.t_critical) + "\n";

  if (!m.ec_columns.empty()) {
    Json corr = Json::array();
    for (const auto& c : disequilibrium_correction(m)) {
      corr.push_back(Json{{"term", c.term},
                          {"loading", c.loading},
                          {"percent", c.percent},
                          {"significant", c.significant}});
      t += c.term + " in d_" + m.equations.front().variable + ": loading " + f6(c.loading) + ", " +
           f6(c.percent) + "% of the disequilibrium per period" + (c.significant ? "" : " (not significant)") +
           "\n";
    }
    s.data["disequilibrium_correction"] = corr;
  }
  return s;
}

inline ReportSection white_section(const HeteroskedasticityResult& w) {
  ReportSection s{"heteroskedasticity", Json::object(), ""};
  s.data["chi_sq"] = w.chi_sq;
  s.data["df"] = w.df;
  s.data["p_value"] = w.p_value;
  s.data["verdict"] = std::string(to_string(w.verdict));
  s.text = pad("Chi-sq", 14) + pad("df", 6) + pad("Prob.", 12) + "\n" + pad(f6(w.chi_sq), 14) +
           pad(std::to_string(w.df), 6) + pad(f6(w.p_value), 12) + "\nResiduals are " +
           std::string(to_string(w.verdict)) + "\n";
  return s;
}

inline ReportSection normality_section(const NormalityResult& n) {
  ReportSection s{"normality", Json::object(), ""};
  auto moment = [](const MomentTest& m) {
    return Json{{"value", m.value}, {"chi_sq", m.chi_sq}, {"df", m.df}, {"p_value", m.p_value}};
  };
  Json comps = Json::array();
  std::string& t = s.text;
  t = pad("Component", 10, true) + pad("Skewness", 14) + pad("Chi-sq", 14) + pad("Prob.", 12) + pad("Kurtosis", 14) +
      pad("Chi-sq", 14) + pad("Prob.", 12) + pad("Jarque-Bera", 14) + pad("Prob.", 12) + "\n";
  for (std::size_t i = 0; i < n.components.size(); ++i) {
    const auto& c = n.components[i];
    comps.push_back(Json{{"component", i + 1},
                         {"skewness", moment(c.skewness)},
                         {"kurtosis", moment(c.kurtosis)},
                         {"jarque_bera", moment(c.jarque_bera)}});
    t += pad(std::to_string(i + 1), 10, true) + pad(f6(c.skewness.value), 14) + pad(f6(c.skewness.chi_sq), 14) +
         pad(f6(c.skewness.p_value), 12) + pad(f6(c.kurtosis.value), 14) + pad(f6(c.kurtosis.chi_sq), 14) +
         pad(f6(c.kurtosis.p_value), 12) + pad(f6(c.jarque_bera.chi_sq), 14) + pad(f6(c.jarque_bera.p_value), 12) +
         "\n";
  }
  t += pad("Joint", 10, true) + pad("", 14) + pad(f6(n.joint_skewness.chi_sq), 14) +
       pad(f6(n.joint_skewness.p_value), 12) + pad("", 14) + pad(f6(n.joint_kurtosis.chi_sq), 14) +
       pad(f6(n.joint_kurtosis.p_value), 12) + pad(f6(n.joint_jarque_bera.chi_sq), 14) +
       pad(f6(n.joint_jarque_bera.p_value), 12) + "\n";
  s.data["orthogonalization"] = "cholesky";
  s.data["components"] = comps;
  s.data["joint_skewness"] = moment(n.joint_skewness);
  s.data["joint_kurtosis"] = moment(n.joint_kurtosis);
  s.data["joint_jarque_bera"] = moment(n.joint_jarque_bera);
  return s;
}

template <typename F>
auto run_stage(Stage stage, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError(stage, e);
  }
}

}  // namespace detail

/// Runs every stage on an already loaded dataset.
inline PipelineReport run_pipeline(const Dataset& data, const RunConfig& config) {
  config.validate();
  PipelineReport rep;
  rep.data = data;
  const double alpha = config.alpha;

  detail::run_stage(Stage::unit_root, [&] {
    ClassifyOptions opt;
    opt.level_case = config.adf_level_case;
    opt.difference_case = config.adf_diff_case;
    opt.lags = config.adf_lags;
    opt.max_lags = config.adf_max_lags;
    for (const auto& s : data.variables()) rep.integration.push_back(classify_integration(s, alpha, opt));
    for (const auto& r : rep.integration) {
      if (r.order == IntegrationOrder::I1) continue;
      const std::string msg = "WARNING: " + r.variable + " is not I(1) at the " + detail::f6(alpha) +
                              " level (" + std::string(to_string(r.order)) + ")";
      if (config.stop_on_non_i1) throw Error(ErrorCode::InvalidSeries, msg);
      rep.warnings.push_back(msg);
    }
    return 0;
  });
  rep.sections.push_back(detail::adf_section(rep.integration));

  if (data.k() < 2)
    throw StageError(Stage::johansen,
                     Error(ErrorCode::NotEnoughVariables, "Johansen analysis needs at least two variables"));

  detail::run_stage(Stage::lag_selection, [&] {
    rep.lags = select_lag(data, config.p_max, config.lag_rule);
    rep.lag_used = config.lag_override.value_or(rep.lags.recommended);
    return 0;
  });
  rep.sections.push_back(detail::lag_section(rep.lags, rep.lag_used));

  detail::run_stage(Stage::johansen, [&] {
    rep.johansen = johansen_test(data, rep.lag_used, config.johansen_case, alpha);
    rep.ranks = rank_decision(rep.johansen, alpha);
    rep.rank_used = config.rank_override.value_or(rep.ranks.trace_rank);
    if (rep.rank_used > data.k())
      throw Error(ErrorCode::RankOutOfRange, "rank_override exceeds the number of variables");
    std::size_t on = 0;
    if (!config.normalize_on.empty()) on = data.index_of(config.normalize_on);
    rep.long_run = normalize_long_run(rep.johansen, on, 0);
    if (rep.rank_used == 0)
      rep.warnings.push_back("WARNING: no cointegration at the selected rank; the long-run equation uses the "
                             "leading eigenvector only");
    return 0;
  });
  rep.sections.push_back(detail::johansen_section(rep.johansen, rep.ranks, rep.rank_used));
  rep.sections.push_back(detail::long_run_section(rep.long_run));

  detail::run_stage(Stage::vecm, [&] {
    const std::size_t on = config.normalize_on.empty() ? 0 : data.index_of(config.normalize_on);
    rep.vecm = vecm_fit(data, rep.lag_used, rep.rank_used, config.johansen_case, alpha, config.ec_reading, on);
    return 0;
  });
  rep.sections.push_back(detail::vecm_section(rep.vecm));

  detail::run_stage(Stage::diagnostics, [&] {
    rep.white = white_system_test(rep.vecm.residuals, rep.vecm.stochastic_regressors(), alpha);
    rep.normality = multivariate_jb(rep.vecm.residuals);
    return 0;
  });
  rep.sections.push_back(detail::white_section(rep.white));
  rep.sections.push_back(detail::normality_section(rep.normality));
  return rep;
}

inline PipelineReport run_pipeline(const RunConfig& config) {
  detail::run_stage(Stage::config, [&] {
    config.validate();
    return 0;
  });
  const Dataset data = detail::run_stage(Stage::load, [&] { return load_csv(config.input, config); });
  return run_pipeline(data, config);
}

inline Json to_json(const PipelineReport& rep) {
  Json j = Json::object();
  j["warnings"] = rep.warnings;
  for (const auto& s : rep.sections) j[s.name] = s.data;
  return j;
}

inline std::string to_text(const PipelineReport& rep) {
  std::string out;
  for (const auto& w : rep.warnings) out += w + "\n";
  if (!rep.warnings.empty()) out += "\n";
  for (const auto& s : rep.sections) {
    out += "== " + s.name + " ==\n" + s.text + "\n";
  }
  return out;
}

/// Writes report.json / report.txt (per config.formats) and the plot.
/// Returns the written paths.
inline std::vector<std::filesystem::path> write_outputs(const PipelineReport& rep, const RunConfig& config) {
  return detail::run_stage(Stage::output, [&] {
    std::vector<std::filesystem::path> written;
    std::error_code ec;
    std::filesystem::create_directories(config.output_dir, ec);
    if (ec) throw Error(ErrorCode::IoError, "cannot create '" + config.output_dir.string() + "'");
    auto write = [&](const std::filesystem::path& p, const std::string& body) {
      std::ofstream f(p, std::ios::binary);
      if (!f) throw Error(ErrorCode::IoError, "cannot write '" + p.string() + "'");
      f << body;
      if (!f) throw Error(ErrorCode::IoError, "failed writing '" + p.string() + "'");
      written.push_back(p);
    };
    for (const auto& fmt : config.formats) {
      if (fmt == "json") write(config.output_dir / "report.json", to_json(rep).dump(2) + "\n");
      if (fmt == "text") write(config.output_dir / "report.txt", to_text(rep));
    }
    if (config.plot.enabled) {
      const auto vars = config.plot.variables.empty() ? rep.data->names() : config.plot.variables;
      const auto p = config.output_dir / config.plot.file;
      render_plot(*rep.data, vars, p, config.plot.title);
      written.push_back(p);
    }
    return written;
  });
}

}  // namespace cointkit
