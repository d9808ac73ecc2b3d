#include "infmcmc/harness/dataset.hpp"

#include "infmcmc/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace infmcmc {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    const auto b = field.find_first_not_of(" \t\r");
    const auto e = field.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string where(const std::string& path, long line) { return path + ":" + std::to_string(line) + ": "; }

double parse_double(const std::string& s, const std::string& path, long line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw DatasetError(where(path, line) + "'" + s + "' is not a finite number");
  }
  return v;
}

int parse_int(const std::string& s, const std::string& path, long line) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DatasetError(where(path, line) + "'" + s + "' is not an integer");
  }
  return v;
}

bool looks_numeric(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::vector<std::string>> read_rows(const std::string& path, std::vector<std::string>& header) {
  std::ifstream in(path);
  if (!in) throw DatasetError("cannot open dataset " + path);
  std::string line;
  if (!std::getline(in, line)) throw DatasetError(path + ": empty file, expected a header row");
  header = split(line);
  for (const auto& h : header) {
    if (h.empty() || looks_numeric(h)) {
      throw DatasetError(where(path, 1) + "missing header row");
    }
  }
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      rows.emplace_back();
      continue;
    }
    rows.push_back(split(line));
  }
  return rows;
}

Dataset load_classifier(const std::string& path) {
  std::vector<std::string> header;
  const auto rows = read_rows(path, header);
  if (header.size() < 2 || header.back() != "label") {
    throw DatasetError(where(path, 1) + "missing header row; expected s_1,...,s_D,label");
  }
  const std::size_t D = header.size() - 1;
  std::vector<std::vector<double>> locs;
  std::vector<int> labels;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const long line = static_cast<long>(r) + 2;
    if (rows[r].empty()) continue;
    if (rows[r].size() != D + 1) {
      throw DatasetError(where(path, line) + "expected " + std::to_string(D + 1) + " fields, found " +
                         std::to_string(rows[r].size()));
    }
    std::vector<double> p(D);
    for (std::size_t d = 0; d < D; ++d) p[d] = parse_double(rows[r][d], path, line);
    const int label = parse_int(rows[r][D], path, line);
    if (label != 0 && label != 1) throw DatasetError(where(path, line) + "label must be 0 or 1");
    locs.push_back(std::move(p));
    labels.push_back(label);
  }
  if (labels.empty()) throw DatasetError(path + ": no data rows");
  Dataset ds;
  ds.kind = "logistic";
  ds.classifier.locations.resize(static_cast<Index>(labels.size()), static_cast<Index>(D));
  ds.classifier.labels.resize(static_cast<Index>(labels.size()));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t d = 0; d < D; ++d) ds.classifier.locations(i, d) = locs[i][d];
    ds.classifier.labels[i] = labels[i];
  }
  return ds;
}

Dataset load_lattice(const std::string& path, const std::string& kind) {
  std::vector<std::string> header;
  const auto rows = read_rows(path, header);
  const bool with_trials = header.size() == 4;
  const bool ok = (header.size() == 3 || with_trials) && header[0] == "row" && header[1] == "col" &&
                  header[2] == "count" && (!with_trials || header[3] == "trials");
  if (!ok) throw DatasetError(where(path, 1) + "missing header row; expected row,col,count[,trials]");
  if (kind == "binomial" && !with_trials) throw DatasetError(where(path, 1) + "binomial data needs a trials column");

  Dataset ds;
  ds.kind = kind;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const long line = static_cast<long>(r) + 2;
    if (rows[r].empty()) continue;
    if (rows[r].size() != header.size()) {
      throw DatasetError(where(path, line) + "expected " + std::to_string(header.size()) + " fields, found " +
                         std::to_string(rows[r].size()));
    }
    const int row = parse_int(rows[r][0], path, line);
    const int col = parse_int(rows[r][1], path, line);
    const int count = parse_int(rows[r][2], path, line);
    if (row < 0 || col < 0) throw DatasetError(where(path, line) + "row and col must be >= 0");
    if (count < 0) throw DatasetError(where(path, line) + "count must be >= 0");
    ds.lattice.rows.push_back(row);
    ds.lattice.cols.push_back(col);
    ds.lattice.counts.push_back(count);
    if (with_trials) {
      const int trials = parse_int(rows[r][3], path, line);
      if (trials < 1) throw DatasetError(where(path, line) + "trials must be >= 1");
      if (count > trials) throw DatasetError(where(path, line) + "count exceeds trials");
      ds.lattice.trials.push_back(trials);
    }
  }
  return ds;
}

void check_cell(const LatticeObservations& obs, std::size_t i, const LatticeSpec& lattice) {
  if (obs.rows[i] >= lattice.rows || obs.cols[i] >= lattice.cols) {
    throw DatasetError("observation " + std::to_string(i) + " at (" + std::to_string(obs.rows[i]) + ", " +
                       std::to_string(obs.cols[i]) + ") lies outside the " + std::to_string(lattice.rows) + "x" +
                       std::to_string(lattice.cols) + " lattice");
  }
}

}  // namespace

Dataset load_dataset(const std::string& path, const std::string& kind) {
  if (kind == "logistic") return load_classifier(path);
  if (kind == "binomial" || kind == "lgcp") return load_lattice(path, kind);
  throw DatasetError("model kind '" + kind + "' does not read datasets");
}

void write_dataset(const Dataset& ds, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  char buf[64];
  if (ds.kind == "logistic") {
    const Index D = ds.classifier.locations.cols();
    for (Index d = 0; d < D; ++d) out << "s_" << (d + 1) << ",";
    out << "label\n";
    for (Index i = 0; i < ds.classifier.locations.rows(); ++i) {
      for (Index d = 0; d < D; ++d) {
        std::snprintf(buf, sizeof buf, "%.17g", ds.classifier.locations(i, d));
        out << buf << ",";
      }
      out << ds.classifier.labels[i] << "\n";
    }
  } else {
    const bool trials = !ds.lattice.trials.empty();
    out << (trials ? "row,col,count,trials\n" : "row,col,count\n");
    for (std::size_t i = 0; i < ds.lattice.rows.size(); ++i) {
      out << ds.lattice.rows[i] << "," << ds.lattice.cols[i] << "," << ds.lattice.counts[i];
      if (trials) out << "," << ds.lattice.trials[i];
      out << "\n";
    }
  }
  if (!out) throw std::runtime_error("write failed for " + path);
}

BinomialData to_binomial(const LatticeObservations& obs, const LatticeSpec& lattice) {
  if (obs.trials.size() != obs.rows.size()) throw DatasetError("binomial data needs a trials column");
  BinomialData out;
  for (std::size_t i = 0; i < obs.rows.size(); ++i) {
    check_cell(obs, i, lattice);
    out.cells.push_back(lattice.flat(obs.rows[i], obs.cols[i]));
    out.trials.push_back(obs.trials[i]);
    out.successes.push_back(obs.counts[i]);
  }
  return out;
}

Vector to_counts(const LatticeObservations& obs, const LatticeSpec& lattice) {
  Vector counts = Vector::Zero(lattice.cells());
  for (std::size_t i = 0; i < obs.rows.size(); ++i) {
    check_cell(obs, i, lattice);
    counts[lattice.flat(obs.rows[i], obs.cols[i])] += obs.counts[i];
  }
  return counts;
}

Dataset from_classifier(const ClassifierData& data) {
  Dataset ds;
  ds.kind = "logistic";
  ds.classifier = data;
  return ds;
}

Dataset from_binomial(const BinomialData& data, const LatticeSpec& lattice) {
  Dataset ds;
  ds.kind = "binomial";
  for (std::size_t i = 0; i < data.cells.size(); ++i) {
    ds.lattice.rows.push_back(data.cells[i] / lattice.cols);
    ds.lattice.cols.push_back(data.cells[i] % lattice.cols);
    ds.lattice.counts.push_back(data.successes[i]);
    ds.lattice.trials.push_back(data.trials[i]);
  }
  return ds;
}

Dataset from_counts(const Vector& counts, const LatticeSpec& lattice) {
  Dataset ds;
  ds.kind = "lgcp";
  for (int r = 0; r < lattice.rows; ++r) {
    for (int c = 0; c < lattice.cols; ++c) {
      ds.lattice.rows.push_back(r);
      ds.lattice.cols.push_back(c);
      ds.lattice.counts.push_back(static_cast<int>(counts[lattice.flat(r, c)]));
    }
  }
  return ds;
}

}  // namespace infmcmc
