#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace xyent::detail {

using cplx = std::complex<double>;

// c_k = (1/N) sum_j f(2 pi j / N) exp(-i k theta_j), in FFT order (c_{-k} sits at N - k).
std::vector<cplx> grid_coefficients(const std::function<cplx(double)>& f, int N);
std::vector<cplx> grid_coefficients(std::vector<cplx> samples);

// Largest |c_k| over N/4 <= |k| <= N/2. Aliasing indicator for smooth periodic f.
double aliasing_band(const std::vector<cplx>& c);

inline cplx coeff_at(const std::vector<cplx>& c, int k) {
  const int N = int(c.size());
  return c[((k % N) + N) % N];
}

inline bool is_power_of_two(long n) { return n > 0 && (n & (n - 1)) == 0; }

inline int next_power_of_two(long n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace xyent::detail
