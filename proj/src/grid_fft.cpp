#include "grid_fft.hpp"

#include <unsupported/Eigen/FFT>
#include <algorithm>
#include <cmath>

namespace xyent::detail {

std::vector<cplx> grid_coefficients(const std::function<cplx(double)>& f, int N) {
  std::vector<cplx> samples(N);
  const double step = 2.0 * 3.14159265358979323846 / N;
  for (int j = 0; j < N; ++j) samples[j] = f(step * j);
  return grid_coefficients(std::move(samples));
}

std::vector<cplx> grid_coefficients(std::vector<cplx> samples) {
  const double N = double(samples.size());
  std::vector<cplx> out;
  Eigen::FFT<double> fft;
  fft.fwd(out, samples);
  for (auto& v : out) v /= N;
  return out;
}

double aliasing_band(const std::vector<cplx>& c) {
  const int N = int(c.size());
  double m = 0.0;
  for (int k = N / 4; k <= N - N / 4; ++k) m = std::max(m, std::abs(c[k]));
  return m;
}

}  // namespace xyent::detail
