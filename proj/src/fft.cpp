#include "gw/fft.hpp"

#include <map>
#include <mutex>

#include <fftw3.h>

namespace gw::fftu {

namespace {

std::mutex plan_mutex;

fftw_plan plan_for(std::size_t n, int sign) {
  static std::map<std::pair<std::size_t, int>, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto key = std::make_pair(n, sign);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<fftw_complex> tmp(n);
  fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n), tmp.data(), tmp.data(), sign,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
  cache.emplace(key, p);
  return p;
}

std::vector<std::complex<double>> run(const std::vector<std::complex<double>>& in, int sign) {
  std::vector<std::complex<double>> out(in.size());
  if (in.empty()) return out;
  fftw_plan p = plan_for(in.size(), sign);
  fftw_execute_dft(p,
                   reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data())),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

}  // namespace

std::vector<std::complex<double>> fft(const std::vector<std::complex<double>>& in) {
  return run(in, FFTW_FORWARD);
}

std::vector<std::complex<double>> ifft(const std::vector<std::complex<double>>& in) {
  auto out = run(in, FFTW_BACKWARD);
  const double scale = in.empty() ? 1.0 : 1.0 / static_cast<double>(in.size());
  for (auto& c : out) c *= scale;
  return out;
}

std::vector<std::complex<double>> fft_real(const std::vector<double>& in) {
  std::vector<std::complex<double>> c(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) c[i] = in[i];
  return fft(c);
}

}  // namespace gw::fftu
