#pragma once

#include <complex>
#include <span>

namespace localspec {

/// forward: sum_k x_k e^{-2 pi i jk/n}; backward: e^{+2 pi i jk/n}. Neither
/// is normalized.
enum class FftDirection { forward, backward };

/// In-place complex DFT of any length (FFTW underneath). Safe to call from
/// several threads.
void fft(std::span<std::complex<double>> data, FftDirection dir);

}  // namespace localspec
