#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "xyent/special_functions.hpp"
#include "xyent/xy_chain.hpp"

namespace xyent::density {

using BigInt = boost::multiprecision::cpp_int;
using chain::ModelParams;
using chain::PhaseCase;

enum class PartitionKind { DistinctOdd, Distinct };

struct PartitionTable {
  PartitionKind kind = PartitionKind::DistinctOdd;
  std::vector<BigInt> counts;  // p(0..nmax), p(0) = 1
};

struct DensitySpectrum {
  PhaseCase phase;
  special::EllipticModulus modulus;
  std::vector<double> lambdas;  // lambda_n, n = 0..nmax
  std::vector<BigInt> mults;    // a_n (h > 2) or 2 b_n (h < 2)
  double log_lambda0 = 0.0;
  double log_ratio = 0.0;       // ln(lambda_{n+1}/lambda_n)
  double ratio = 0.0;
  int nmax = 0;
};

inline constexpr int kDefaultNmax = 64;
inline constexpr int kMaxNmax = 5000;

PartitionTable partition_counts(PartitionKind kind, int nmax);
// a_n (Case2) or 2 b_n (Case1) for n = 0..nmax.
std::vector<BigInt> multiplicities(const PhaseCase& pc, int nmax);

// Narrowing with an explicit overflow error instead of wraparound.
std::uint64_t to_u64(const BigInt& v);

DensitySpectrum density_spectrum(const ModelParams& p, int nmax = kDefaultNmax);

// Bound on sum_{n > nmax} mult_n lambda_n^alpha from the envelope mult_n <= C e^{kappa sqrt n}.
double zeta_tail_bound(const DensitySpectrum& spec, double alpha);
// Smallest nmax whose tail bound is below tol * zeta.
int nmax_for_tail(const ModelParams& p, double alpha, double tol = 1e-14);

// sum mult_n lambda_n^alpha; throws ConvergenceError when the tail bound exceeds 1e-14 relative.
double zeta_function(const DensitySpectrum& spec, double alpha);

double multiplicity_asymptotic(int n);
// exp growth rate of the multiplicity envelope: pi/sqrt(3) for a_n, pi sqrt(2/3) for 2 b_n.
double envelope_rate(const PhaseCase& pc);

// Largest K eigenvalues prod (1 +- nu_i)/2 of a Gaussian state, descending.
std::vector<double> finite_l_density_eigenvalues(const chain::NuSpectrum& nus, std::size_t K);

}  // namespace xyent::density
