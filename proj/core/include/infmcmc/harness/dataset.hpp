#pragma once

#include "infmcmc/models/binomial_lattice.hpp"
#include "infmcmc/models/logistic.hpp"

#include <string>
#include <vector>

namespace infmcmc {

/// Rows of a lattice CSV: row,col,count[,trials].
struct LatticeObservations {
  std::vector<int> rows;
  std::vector<int> cols;
  std::vector<int> counts;
  std::vector<int> trials;  // empty when the file has no trials column
};

struct Dataset {
  std::string kind;  // logistic | binomial | lgcp
  ClassifierData classifier;
  LatticeObservations lattice;
};

/// Reads a dataset CSV. Throws DatasetError naming the offending line.
Dataset load_dataset(const std::string& path, const std::string& kind);
void write_dataset(const Dataset& dataset, const std::string& path);

BinomialData to_binomial(const LatticeObservations& obs, const LatticeSpec& lattice);
Vector to_counts(const LatticeObservations& obs, const LatticeSpec& lattice);

Dataset from_classifier(const ClassifierData& data);
Dataset from_binomial(const BinomialData& data, const LatticeSpec& lattice);
Dataset from_counts(const Vector& counts, const LatticeSpec& lattice);

}  // namespace infmcmc
