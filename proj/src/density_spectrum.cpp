#include "xyent/density_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <sstream>

#include "xyent/errors.hpp"

namespace xyent::density {

namespace {

constexpr double kPi = special::kPi;

void require_nmax(int nmax) {
  if (nmax < 0) throw DomainError("nmax must be >= 0");
  if (nmax > kMaxNmax) throw DomainError("nmax above " + std::to_string(kMaxNmax) + " is not supported");
}

std::vector<BigInt> self_convolution(const std::vector<BigInt>& p) {
  const std::size_t n = p.size();
  std::vector<BigInt> out(n);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t l = 0; l <= m; ++l) out[m] += p[l] * p[m - l];
  return out;
}

double envelope_constant(const PhaseCase& pc, int upto) {
  const auto mult = multiplicities(pc, upto);
  const double kappa = envelope_rate(pc);
  double C = 0.0;
  for (int n = 0; n <= upto; ++n) {
    C = std::max(C, std::exp(std::log(mult[n].convert_to<double>()) - kappa * std::sqrt(double(n))));
  }
  return C;
}

// sum_{n > nmax} C e^{kappa sqrt n} exp(alpha (log_l0 + n log_r))
double envelope_tail(double C, double kappa, double alpha, double log_l0, double log_r, int nmax) {
  double s = 0.0, prev = HUGE_VAL;
  for (long n = nmax + 1; n < 100000000L; ++n) {
    const double t = C * std::exp(kappa * std::sqrt(double(n)) + alpha * (log_l0 + n * log_r));
    s += t;
    if (t < prev && t <= 1e-20 * s) break;
    if (t == 0.0 && prev == 0.0) break;
    prev = t;
  }
  return s;
}

struct Ladder {
  double log_l0, log_r;
};

Ladder ladder_for(const PhaseCase& pc, const special::EllipticModulus& e) {
  if (pc.label == chain::CaseLabel::Case2) {
    return {kPi * e.tau0 / 12.0 + std::log(e.k * e.kprime / 4.0) / 6.0, -kPi * e.tau0};
  }
  return {-kPi * e.tau0 / 6.0 + std::log(e.kprime / (4.0 * e.k * e.k)) / 6.0, -2.0 * kPi * e.tau0};
}

}  // namespace

PartitionTable partition_counts(PartitionKind kind, int nmax) {
  require_nmax(nmax);
  PartitionTable t;
  t.kind = kind;
  t.counts.assign(nmax + 1, BigInt(0));
  t.counts[0] = 1;
  const int step = kind == PartitionKind::DistinctOdd ? 2 : 1;
  // multiply by (1 + x^part) for each allowed part
  for (int part = 1; part <= nmax; part += step)
    for (int s = nmax; s >= part; --s) t.counts[s] += t.counts[s - part];
  return t;
}

std::vector<BigInt> multiplicities(const PhaseCase& pc, int nmax) {
  if (pc.label == chain::CaseLabel::Case2) {
    return self_convolution(partition_counts(PartitionKind::DistinctOdd, nmax).counts);
  }
  auto b = self_convolution(partition_counts(PartitionKind::Distinct, nmax).counts);
  for (auto& v : b) v *= 2;
  return b;
}

std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || v > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    throw OverflowError("integer " + v.str() + " does not fit in 64 bits");
  }
  return v.convert_to<std::uint64_t>();
}

double envelope_rate(const PhaseCase& pc) {
  return pc.label == chain::CaseLabel::Case2 ? kPi / std::sqrt(3.0) : kPi * std::sqrt(2.0 / 3.0);
}

DensitySpectrum density_spectrum(const ModelParams& p, int nmax) {
  require_nmax(nmax);
  DensitySpectrum s;
  s.phase = chain::classify_case(p);
  s.modulus = chain::modulus_k(p);
  const Ladder lad = ladder_for(s.phase, s.modulus);
  s.log_lambda0 = lad.log_l0;
  s.log_ratio = lad.log_r;
  s.ratio = std::exp(lad.log_r);
  s.nmax = nmax;
  s.mults = multiplicities(s.phase, nmax);
  s.lambdas.resize(nmax + 1);
  for (int n = 0; n <= nmax; ++n) s.lambdas[n] = std::exp(lad.log_l0 + n * lad.log_r);
  return s;
}

double zeta_tail_bound(const DensitySpectrum& spec, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("zeta needs alpha > 0");
  const double C = envelope_constant(spec.phase, std::max(spec.nmax, 200));
  return envelope_tail(C, envelope_rate(spec.phase), alpha, spec.log_lambda0, spec.log_ratio, spec.nmax);
}

int nmax_for_tail(const ModelParams& p, double alpha, double tol) {
  if (!(alpha > 0.0)) throw DomainError("zeta needs alpha > 0");
  const PhaseCase pc = chain::classify_case(p);
  const auto e = chain::modulus_k(p);
  const Ladder lad = ladder_for(pc, e);
  const double kappa = envelope_rate(pc);
  // zeta >= mult_0 lambda_0^alpha
  const double lead = (pc.label == chain::CaseLabel::Case2 ? 1.0 : 2.0) * std::exp(alpha * lad.log_l0);
  int upto = 200;
  double C = envelope_constant(pc, upto);
  for (int n = 0; n <= kMaxNmax; ++n) {
    if (n > upto) {
      upto = std::min(2 * upto, kMaxNmax);
      C = envelope_constant(pc, upto);
    }
    if (envelope_tail(C, kappa, alpha, lad.log_l0, lad.log_r, n) <= tol * lead) return n;
  }
  std::ostringstream os;
  os << "no nmax <= " << kMaxNmax << " brings the zeta tail below " << tol << " at alpha=" << alpha;
  throw ConvergenceError(os.str());
}

double zeta_function(const DensitySpectrum& spec, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("zeta needs alpha > 0");
  double s = 0.0;
  for (int n = 0; n <= spec.nmax; ++n) {
    s += spec.mults[n].convert_to<double>() * std::exp(alpha * (spec.log_lambda0 + n * spec.log_ratio));
  }
  const double tail = zeta_tail_bound(spec, alpha);
  if (!(tail <= 1e-14 * s)) {
    std::ostringstream os;
    os << "zeta tail bound " << tail << " exceeds 1e-14 relative at alpha=" << alpha << " with nmax=" << spec.nmax;
    throw ConvergenceError(os.str());
  }
  return s;
}

double multiplicity_asymptotic(int n) {
  if (n < 1) throw DomainError("multiplicity asymptotics need n >= 1");
  const double x = double(n);
  return std::pow(2.0, -1.5) * std::pow(3.0, -0.25) * std::pow(x, -0.75) * std::exp(kPi * std::sqrt(x / 3.0));
}

std::vector<double> finite_l_density_eigenvalues(const chain::NuSpectrum& nus, std::size_t K) {
  const std::size_t n = nus.nus.size();
  double base = 0.0;
  std::vector<double> cost;
  cost.reserve(n);
  for (double v : nus.nus) {
    const double a = std::min(1.0, std::abs(v));
    base += std::log1p(a) - std::log(2.0);
    // flipping factor i multiplies by (1-a)/(1+a)
    cost.push_back(a >= 1.0 ? HUGE_VAL : std::log1p(a) - std::log1p(-a));
  }
  std::sort(cost.begin(), cost.end());

  std::vector<double> out;
  out.reserve(K);
  if (K == 0) return out;
  out.push_back(std::exp(base));
  using Node = std::pair<double, std::size_t>;
  std::priority_queue<Node, std::vector<Node>, std::greater<Node>> heap;
  if (n > 0 && std::isfinite(cost[0])) heap.push({cost[0], 0});
  while (out.size() < K && !heap.empty()) {
    const auto [s, i] = heap.top();
    heap.pop();
    out.push_back(std::exp(base - s));
    if (i + 1 < n && std::isfinite(cost[i + 1])) {
      heap.push({s + cost[i + 1], i + 1});
      heap.push({s - cost[i] + cost[i + 1], i + 1});
    }
  }
  while (out.size() < K && (n >= 64 || out.size() < (std::size_t(1) << n))) out.push_back(0.0);
  return out;
}

}  // namespace xyent::density
