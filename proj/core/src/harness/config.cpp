#include "infmcmc/harness/config.hpp"

#include "infmcmc/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace infmcmc {

using nlohmann::json;

namespace {

const std::set<std::string> kModelKinds = {"logistic", "binomial", "lgcp", "prior", "gaussian"};

/// Reads typed fields out of one JSON object, collecting problems instead of
/// throwing so that a single pass reports everything.
class Section {
 public:
  Section(const json& root, std::string name, std::vector<std::string>& issues, bool required = false)
      : name_(std::move(name)), issues_(issues) {
    if (!root.contains(name_)) {
      if (required) issue("", "section is required");
      return;
    }
    const json& node = root.at(name_);
    if (!node.is_object()) {
      issue("", "must be an object");
      return;
    }
    node_ = &node;
  }

  bool present() const { return node_ != nullptr; }

  template <class T>
  void read(const char* key, T& out) {
    known_.insert(key);
    if (!node_ || !node_->contains(key) || node_->at(key).is_null()) return;
    try {
      out = node_->at(key).get<T>();
    } catch (const json::exception&) {
      issue(key, "has the wrong type");
    }
  }

  template <class T>
  void read(const char* key, std::optional<T>& out) {
    known_.insert(key);
    if (!node_ || !node_->contains(key) || node_->at(key).is_null()) return;
    try {
      out = node_->at(key).get<T>();
    } catch (const json::exception&) {
      issue(key, "has the wrong type");
    }
  }

  bool has(const char* key) const { return node_ && node_->contains(key) && !node_->at(key).is_null(); }

  void issue(const std::string& key, const std::string& what) {
    issues_.push_back(key.empty() ? name_ + ": " + what : name_ + "." + key + ": " + what);
  }

  void check(bool ok, const char* key, const std::string& what) {
    if (!ok) issue(key, what);
  }

  void reject_unknown() {
    if (!node_) return;
    for (const auto& [key, value] : node_->items()) {
      if (!known_.count(key)) issue(key, "unknown key");
    }
  }

 private:
  std::string name_;
  std::vector<std::string>& issues_;
  const json* node_ = nullptr;
  std::set<std::string> known_;
};

ModelSpec read_model(const json& root, std::vector<std::string>& issues) {
  ModelSpec m;
  Section s(root, "model", issues, true);
  s.read("kind", m.kind);
  s.read("data", m.data_path);
  s.read("true_field_seed", m.true_field_seed);
  s.read("obs_seed", m.obs_seed);
  s.read("num_points", m.num_points);
  s.read("input_dim", m.input_dim);
  s.read("kernel_variance", m.logistic.kernel_variance);
  s.read("lengthscale", m.logistic.lengthscale);
  s.read("jitter", m.logistic.jitter);
  int truncation = 0;
  s.read("truncation", truncation);
  m.logistic.truncation = m.binomial.truncation = m.lgcp.truncation = truncation;
  s.read("rows", m.lattice.rows);
  s.read("cols", m.lattice.cols);
  s.read("spacing", m.lattice.spacing);
  s.read("kappa", m.binomial.kappa);
  double sigma = 1.0;
  s.read("sigma", sigma);
  m.binomial.sigma = m.lgcp.sigma = sigma;
  s.read("precision_exponent", m.binomial.precision_exponent);
  s.read("obs_fraction", m.binomial.obs_fraction);
  s.read("lambda_trials", m.binomial.lambda_trials);
  s.read("cell_area", m.lgcp.cell_area);
  s.read("tau", m.lgcp.tau);
  s.read("hyper_prior_mean", m.lgcp.hyper_prior_mean);
  s.read("hyper_prior_sd", m.lgcp.hyper_prior_sd);
  s.read("dim", m.dim);
  s.read("decay", m.decay);
  s.read("noise_sd", m.noise_sd);
  s.reject_unknown();
  if (!s.present()) return m;

  s.check(kModelKinds.count(m.kind) > 0, "kind", "must be one of logistic, binomial, lgcp, prior, gaussian");
  s.check(truncation >= 0, "truncation", "must be >= 0");
  const bool data_model = m.kind == "logistic" || m.kind == "binomial" || m.kind == "lgcp";
  if (data_model && !m.data_path && (!m.true_field_seed || !m.obs_seed)) {
    s.issue("data", "give a data path or both true_field_seed and obs_seed");
  }
  if (m.kind == "logistic") {
    s.check(m.num_points >= 1, "num_points", "must be >= 1");
    s.check(m.input_dim >= 1, "input_dim", "must be >= 1");
    s.check(m.logistic.kernel_variance > 0.0, "kernel_variance", "must be positive");
    s.check(m.logistic.lengthscale > 0.0, "lengthscale", "must be positive");
    s.check(!m.logistic.jitter || *m.logistic.jitter >= 0.0, "jitter", "must be >= 0");
  }
  if (m.kind == "binomial" || m.kind == "lgcp") {
    s.check(m.lattice.rows >= 1, "rows", "must be >= 1");
    s.check(m.lattice.cols >= 1, "cols", "must be >= 1");
    s.check(m.lattice.spacing > 0.0, "spacing", "must be positive");
    s.check(sigma > 0.0, "sigma", "must be positive");
  }
  if (m.kind == "binomial") {
    s.check(m.binomial.kappa > 0.0, "kappa", "must be positive");
    s.check(m.binomial.precision_exponent == 2, "precision_exponent", "only 2 is supported");
    s.check(m.binomial.obs_fraction > 0.0 && m.binomial.obs_fraction <= 1.0, "obs_fraction", "must lie in (0, 1]");
    s.check(m.binomial.lambda_trials > 0.0, "lambda_trials", "must be positive");
  }
  if (m.kind == "lgcp") {
    s.check(m.lgcp.cell_area > 0.0, "cell_area", "must be positive");
    s.check(m.lgcp.tau > 0.0, "tau", "must be positive");
    s.check(m.lgcp.hyper_prior_sd[0] > 0.0 && m.lgcp.hyper_prior_sd[1] > 0.0, "hyper_prior_sd", "must be positive");
  }
  if (m.kind == "prior" || m.kind == "gaussian") {
    s.check(m.dim >= 1, "dim", "must be >= 1");
    s.check(m.decay >= 0.0, "decay", "must be >= 0");
    s.check(m.noise_sd > 0.0, "noise_sd", "must be positive");
  }
  return m;
}

KernelSpec read_kernel(const json& root, const char* name, std::vector<std::string>& issues) {
  KernelSpec k;
  Section s(root, name, issues, true);
  std::string kind = "pcn";
  s.read("kind", kind);
  s.read("beta", k.beta);
  s.read("delta", k.delta);
  s.reject_unknown();
  if (!s.present()) return k;
  if (auto parsed = parse_kernel_kind(kind)) {
    k.kind = *parsed;
  } else {
    s.issue("kind", "unknown kernel '" + kind + "'");
  }
  s.check(k.beta > 0.0 && k.beta <= 1.0, "beta", "must lie in (0, 1]");
  s.check(k.delta > 0.0, "delta", "must be positive");
  return k;
}

KernelSpec kernel_from_node(const json& node, std::size_t index, std::vector<std::string>& issues) {
  json wrapper;
  wrapper["kernels[" + std::to_string(index) + "]"] = node;
  return read_kernel(wrapper, ("kernels[" + std::to_string(index) + "]").c_str(), issues);
}

AdaptSpec read_adapt(const json& root, std::vector<std::string>& issues) {
  AdaptSpec a;
  Section s(root, "adaptation", issues);
  s.read("enabled", a.enabled);
  s.read("target_accept", a.target_accept);
  s.read("burn_in", a.burn_in);
  s.read("freeze_after_burn_in", a.freeze_after_burn_in);
  s.read("n0", a.n0);
  s.read("untruncated", a.untruncated);
  s.read("adapt_start", a.adapt_start);
  s.read("d_min", a.d_min);
  s.read("log_stride", a.log_stride);
  s.reject_unknown();
  s.check(!a.target_accept || (*a.target_accept > 0.0 && *a.target_accept < 1.0), "target_accept",
          "must lie in (0, 1)");
  s.check(a.burn_in >= 0, "burn_in", "must be >= 0");
  s.check(a.n0 >= 0, "n0", "must be >= 0");
  s.check(a.adapt_start >= 0, "adapt_start", "must be >= 0");
  s.check(a.d_min > 0.0, "d_min", "must be positive");
  s.check(a.log_stride >= 1, "log_stride", "must be >= 1");
  return a;
}

RunSpec read_run(const json& root, std::vector<std::string>& issues) {
  RunSpec r;
  Section s(root, "run", issues, true);
  s.read("iterations", r.iterations);
  s.read("thinning", r.thinning);
  s.read("seed", r.seed);
  s.read("output_dir", r.output_dir);
  s.read("monitor", r.monitor);
  s.read("acf_lags", r.acf_lags);
  s.reject_unknown();
  if (!s.present()) return r;
  s.check(r.seed.has_value(), "seed", "is required");
  s.check(r.iterations >= 1, "iterations", "must be >= 1");
  s.check(r.thinning >= 1, "thinning", "must be >= 1");
  s.check(r.monitor >= 1, "monitor", "must be >= 1");
  for (int lag : r.acf_lags) {
    if (lag < 0) {
      s.issue("acf_lags", "lags must be >= 0");
      break;
    }
  }
  return r;
}

GibbsSpec read_gibbs(const json& root, std::vector<std::string>& issues) {
  GibbsSpec g;
  Section s(root, "gibbs", issues);
  s.read("enabled", g.enabled);
  s.read("theta", g.theta);
  s.read("field", g.field);
  s.read("proposal_scale", g.proposal_scale);
  s.read("target_accept", g.target_accept);
  s.read("field_acf_lag", g.field_acf_lag);
  s.reject_unknown();
  s.check(g.proposal_scale >= 0.0, "proposal_scale", "must be >= 0");
  s.check(g.target_accept > 0.0 && g.target_accept < 1.0, "target_accept", "must lie in (0, 1)");
  s.check(g.field_acf_lag >= 1, "field_acf_lag", "must be >= 1");
  return g;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError({std::string("config is not valid JSON: ") + e.what()});
  }
}

void cross_check(const ExperimentConfig& c, std::vector<std::string>& issues) {
  if (c.run.iterations <= c.adapt.burn_in) issues.push_back("run.iterations: must exceed adaptation.burn_in");
  if (c.gibbs.enabled) {
    if (c.model.kind != "lgcp") issues.push_back("gibbs.enabled: requires model.kind = lgcp");
    const KernelKind k = c.kernel.kind;
    if (k != KernelKind::kPcnAm && k != KernelKind::kPcnlAm && k != KernelKind::kMala) {
      issues.push_back("gibbs.enabled: field kernel must be pcn_am, pcnl_am or mala");
    }
  }
}

ExperimentConfig read_experiment(const json& root, std::vector<std::string>& issues) {
  ExperimentConfig c;
  if (!root.is_object()) {
    issues.push_back("config: top level must be an object");
    return c;
  }
  for (const auto& [key, value] : root.items()) {
    static const std::set<std::string> kSections = {"model", "kernel", "adaptation", "run", "gibbs"};
    if (!kSections.count(key)) issues.push_back(key + ": unknown section");
  }
  c.model = read_model(root, issues);
  c.kernel = read_kernel(root, "kernel", issues);
  c.adapt = read_adapt(root, issues);
  c.run = read_run(root, issues);
  c.gibbs = read_gibbs(root, issues);
  cross_check(c, issues);
  return c;
}

json model_json(const ModelSpec& m) {
  json j;
  j["kind"] = m.kind;
  j["data"] = m.data_path ? json(*m.data_path) : json(nullptr);
  j["true_field_seed"] = m.true_field_seed ? json(*m.true_field_seed) : json(nullptr);
  j["obs_seed"] = m.obs_seed ? json(*m.obs_seed) : json(nullptr);
  if (m.kind == "logistic") {
    j["num_points"] = m.num_points;
    j["input_dim"] = m.input_dim;
    j["kernel_variance"] = m.logistic.kernel_variance;
    j["lengthscale"] = m.logistic.lengthscale;
    j["jitter"] = m.logistic.jitter ? json(*m.logistic.jitter) : json(nullptr);
    j["truncation"] = m.logistic.truncation;
  } else if (m.kind == "binomial" || m.kind == "lgcp") {
    j["rows"] = m.lattice.rows;
    j["cols"] = m.lattice.cols;
    j["spacing"] = m.lattice.spacing;
    if (m.kind == "binomial") {
      j["kappa"] = m.binomial.kappa;
      j["sigma"] = m.binomial.sigma;
      j["precision_exponent"] = m.binomial.precision_exponent;
      j["obs_fraction"] = m.binomial.obs_fraction;
      j["lambda_trials"] = m.binomial.lambda_trials;
      j["truncation"] = m.binomial.truncation;
    } else {
      j["sigma"] = m.lgcp.sigma;
      j["tau"] = m.lgcp.tau;
      j["cell_area"] = m.lgcp.cell_area;
      j["hyper_prior_mean"] = m.lgcp.hyper_prior_mean;
      j["hyper_prior_sd"] = m.lgcp.hyper_prior_sd;
      j["truncation"] = m.lgcp.truncation;
    }
  } else {
    j["dim"] = m.dim;
    j["decay"] = m.decay;
    if (m.kind == "gaussian") j["noise_sd"] = m.noise_sd;
  }
  return j;
}

json kernel_json(const KernelSpec& k) {
  return json{{"kind", to_string(k.kind)}, {"beta", k.beta}, {"delta", k.delta}};
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
  std::vector<std::string> issues;
  ExperimentConfig c = read_experiment(parse_json(json_text), issues);
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return c;
}

void validate_config(const ExperimentConfig& config) { parse_config(config_to_json(config)); }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ExperimentConfig load_config(const std::string& path) { return parse_config(read_text_file(path)); }

std::string model_to_json(const ModelSpec& model) { return model_json(model).dump(); }

std::string config_to_json(const ExperimentConfig& c) {
  json j;
  j["model"] = model_json(c.model);
  j["kernel"] = kernel_json(c.kernel);
  j["adaptation"] = json{{"enabled", c.adapt.enabled},
                         {"target_accept", c.adapt.target_accept ? json(*c.adapt.target_accept) : json(nullptr)},
                         {"burn_in", c.adapt.burn_in},
                         {"freeze_after_burn_in", c.adapt.freeze_after_burn_in},
                         {"n0", c.adapt.n0},
                         {"untruncated", c.adapt.untruncated},
                         {"adapt_start", c.adapt.adapt_start},
                         {"d_min", c.adapt.d_min},
                         {"log_stride", c.adapt.log_stride}};
  j["run"] = json{{"iterations", c.run.iterations}, {"thinning", c.run.thinning},
                  {"seed", c.run.seed ? json(*c.run.seed) : json(nullptr)}, {"output_dir", c.run.output_dir},
                  {"monitor", c.run.monitor},       {"acf_lags", c.run.acf_lags}};
  j["gibbs"] = json{{"enabled", c.gibbs.enabled},
                    {"theta", c.gibbs.theta},
                    {"field", c.gibbs.field},
                    {"proposal_scale", c.gibbs.proposal_scale},
                    {"target_accept", c.gibbs.target_accept},
                    {"field_acf_lag", c.gibbs.field_acf_lag}};
  return j.dump();
}

CompareConfig parse_compare_config(const std::string& json_text) {
  const json root = parse_json(json_text);
  std::vector<std::string> issues;
  CompareConfig out;
  if (!root.is_object()) throw ValidationError({"compare config: top level must be an object"});
  for (const auto& [key, value] : root.items()) {
    if (key != "base" && key != "kernels" && key != "output_dir") issues.push_back(key + ": unknown key");
  }
  if (!root.contains("base")) {
    issues.push_back("base: section is required");
  } else {
    out.base = read_experiment(root.at("base"), issues);
  }
  if (!root.contains("kernels") || !root.at("kernels").is_array() || root.at("kernels").empty()) {
    issues.push_back("kernels: must be a non-empty array");
  } else {
    const json& arr = root.at("kernels");
    for (std::size_t i = 0; i < arr.size(); ++i) out.kernels.push_back(kernel_from_node(arr[i], i, issues));
  }
  if (root.contains("output_dir")) {
    if (root.at("output_dir").is_string()) {
      out.output_dir = root.at("output_dir").get<std::string>();
    } else {
      issues.push_back("output_dir: must be a string");
    }
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return out;
}

CompareConfig load_compare_config(const std::string& path) { return parse_compare_config(read_text_file(path)); }

std::vector<ExperimentConfig> expand(const CompareConfig& compare) {
  std::vector<ExperimentConfig> out;
  for (std::size_t i = 0; i < compare.kernels.size(); ++i) {
    ExperimentConfig c = compare.base;
    c.kernel = compare.kernels[i];
    c.run.output_dir = compare.output_dir + "/" + std::to_string(i) + "_" + to_string(c.kernel.kind);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace infmcmc
