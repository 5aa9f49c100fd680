#include "localspec/fft.hpp"

#include <mutex>
#include <stdexcept>

#include <fftw3.h>

namespace localspec {

namespace {

// The FFTW planner is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

void fft(std::span<std::complex<double>> data, FftDirection dir) {
  if (data.empty()) return;
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  const int sign = (dir == FftDirection::forward) ? FFTW_FORWARD : FFTW_BACKWARD;
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(data.size()), buf, buf, sign, FFTW_ESTIMATE);
  }
  if (plan == nullptr) throw std::runtime_error("fft: FFTW could not create a plan");
  fftw_execute(plan);
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(plan);
}

}  // namespace localspec
