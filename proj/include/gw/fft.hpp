#pragma once

#include <complex>
#include <vector>

namespace gw::fftu {

// Complex FFTs backed by FFTW (ESTIMATE plans, cached per length; execution is
// thread-safe, plan creation serialized internally).
std::vector<std::complex<double>> fft(const std::vector<std::complex<double>>& in);
std::vector<std::complex<double>> ifft(const std::vector<std::complex<double>>& in);
std::vector<std::complex<double>> fft_real(const std::vector<double>& in);

}  // namespace gw::fftu
