#include "infmcmc/errors.hpp"

#include <sstream>

namespace infmcmc {

namespace {

std::string join_issues(const std::vector<std::string>& issues) {
  std::ostringstream out;
  out << "invalid configuration (" << issues.size() << " issue" << (issues.size() == 1 ? "" : "s") << ")";
  for (const auto& issue : issues) out << "\n  - " << issue;
  return out.str();
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> issues)
    : std::runtime_error(join_issues(issues)), issues_(std::move(issues)) {}

void require_same_size(long expected, long actual, const char* what) {
  if (expected != actual) {
    std::ostringstream out;
    out << what << ": expected length " << expected << ", got " << actual;
    throw DimensionMismatch(out.str());
  }
}

}  // namespace infmcmc
