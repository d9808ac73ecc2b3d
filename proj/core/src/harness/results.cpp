#include "infmcmc/harness/results.hpp"

#include "infmcmc/version.hpp"

#include <json.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace infmcmc {

using nlohmann::json;

namespace {

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + path);
}

json ess_json(const EssSummary& s, Index monitored) {
  return json{{"min", s.min_ess},
              {"median", s.median_ess},
              {"min_per_iteration", s.min_per_iteration},
              {"median_per_iteration", s.median_per_iteration},
              {"capped_columns", s.capped},
              {"zero_variance_columns", s.zero_variance},
              {"monitored_coordinates", monitored}};
}

}  // namespace

std::string version_string() { return kVersionString; }

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

ResultPaths write_results(const RunResult& r, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir + ": " + ec.message());

  ResultPaths paths;
  paths.summary = (fs::path(dir) / "summary.json").string();
  paths.timing = (fs::path(dir) / "timing.json").string();
  paths.trace = (fs::path(dir) / "trace.csv").string();
  paths.adapt = (fs::path(dir) / "adapt.csv").string();
  paths.acf = (fs::path(dir) / "acf.csv").string();

  {
    auto out = open_for_write(paths.trace);
    out << "iteration,phi";
    for (Index c = 0; c < r.thinned_trace.cols(); ++c) out << ",z_" << c;
    out << "\n";
    for (Index i = 0; i < r.thinned_trace.rows(); ++i) {
      out << r.thinned_iterations[i] << "," << format_double(r.thinned_phi[i]);
      for (Index c = 0; c < r.thinned_trace.cols(); ++c) out << "," << format_double(r.thinned_trace(i, c));
      out << "\n";
    }
    finish(out, paths.trace);
  }
  {
    auto out = open_for_write(paths.adapt);
    out << "iteration,beta,delta,n_trunc,accept_ema,equivalence\n";
    for (const auto& a : r.adapt_trace) {
      out << a.iteration << "," << format_double(a.beta) << "," << format_double(a.delta) << "," << a.n_trunc << ","
          << format_double(a.accept_ema) << "," << format_double(a.equivalence) << "\n";
    }
    finish(out, paths.adapt);
  }
  {
    auto out = open_for_write(paths.acf);
    out << "coordinate";
    for (int lag : r.acf_lags) out << ",lag_" << lag;
    out << "\n";
    for (Index c = 0; c < r.acf.rows(); ++c) {
      out << c;
      for (Index k = 0; k < r.acf.cols(); ++k) out << "," << format_double(r.acf(c, k));
      out << "\n";
    }
    finish(out, paths.acf);
  }
  if (r.gibbs) {
    paths.theta = (fs::path(dir) / "theta.csv").string();
    auto out = open_for_write(paths.theta);
    out << "row,log_sigma,log_tau\n";
    for (Index i = 0; i < r.gibbs->theta_trace.rows(); ++i) {
      out << i << "," << format_double(r.gibbs->theta_trace(i, 0)) << "," << format_double(r.gibbs->theta_trace(i, 1))
          << "\n";
    }
    finish(out, paths.theta);
  }

  json summary;
  summary["version"] = version_string();
  summary["kernel"] = r.kernel;
  summary["model"] = r.model;
  summary["iterations"] = r.iterations;
  summary["burn_in"] = r.burn_in;
  summary["kept_iterations"] = r.kept;
  summary["acceptance_rate"] = r.acceptance_rate;
  summary["final_beta"] = r.final_beta;
  summary["final_delta"] = r.final_delta;
  summary["final_n_trunc"] = r.final_n_trunc;
  summary["final_equivalence"] = r.final_equivalence;
  summary["factorisation_failures"] = r.factorisation_failures;
  summary["ess"] = ess_json(r.ess, r.thinned_trace.cols());
  if (r.mean_field_acf) {
    summary["field_acf"] = json{{"lag", r.field_acf_lag}, {"mean", *r.mean_field_acf}};
  }
  if (r.gibbs) {
    const GibbsStats& g = *r.gibbs;
    summary["gibbs"] = json{{"theta_acceptance", g.theta_acceptance},
                            {"theta_failures", g.theta_failures},
                            {"proposal_scale", g.proposal_scale},
                            {"theta_mean", {g.theta_mean[0], g.theta_mean[1]}},
                            {"theta_mc_se", {g.theta_mc_se[0], g.theta_mc_se[1]}}};
  }
  summary["config"] = r.config_json.empty() ? json(nullptr) : json::parse(r.config_json);
  json files{{"trace", "trace.csv"}, {"adapt", "adapt.csv"}, {"acf", "acf.csv"}, {"timing", "timing.json"}};
  if (r.gibbs) files["theta"] = "theta.csv";
  summary["files"] = files;
  {
    auto out = open_for_write(paths.summary);
    out << summary.dump(2) << "\n";
    finish(out, paths.summary);
  }

  json timing{{"wall_seconds", r.wall_seconds},
              {"min_ess_per_second", r.ess.min_per_second},
              {"median_ess_per_second", r.ess.median_per_second},
              {"iterations_per_second", r.wall_seconds > 0.0 ? r.iterations / r.wall_seconds : 0.0}};
  {
    auto out = open_for_write(paths.timing);
    out << timing.dump(2) << "\n";
    finish(out, paths.timing);
  }
  return paths;
}

CsvTable read_numeric_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  CsvTable t;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
  {
    std::istringstream hs(line);
    std::string field;
    while (std::getline(hs, field, ',')) t.header.push_back(field);
  }
  std::vector<std::vector<double>> rows;
  long lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) {
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": '" + field + "' is not a number");
      }
      row.push_back(v);
    }
    if (row.size() != t.header.size()) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected " + std::to_string(t.header.size()) +
                               " fields");
    }
    rows.push_back(std::move(row));
  }
  t.values.resize(static_cast<Index>(rows.size()), static_cast<Index>(t.header.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) t.values(i, j) = rows[i][j];
  }
  return t;
}

}  // namespace infmcmc
