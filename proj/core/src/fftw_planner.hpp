#pragma once

#include <mutex>

namespace infmcmc::detail {

// Plan creation and destruction are not thread-safe in FFTW; execution with
// the new-array interface is.
std::mutex& fftw_planner_mutex();

}  // namespace infmcmc::detail
