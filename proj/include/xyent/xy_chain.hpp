#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "xyent/special_functions.hpp"

namespace xyent::chain {

using cplx = std::complex<double>;
using special::EllipticModulus;

struct ModelParams {
  double gamma = 0.0;
  double h = 0.0;
};

enum class CaseLabel { Case1a, Case1b, Case2 };

struct PhaseCase {
  CaseLabel label = CaseLabel::Case1b;
  int sigma = 1;
};

const char* to_string(CaseLabel label);

struct BranchPoints {
  cplx lambda1;
  cplx lambda2;
  // A, B inside the unit circle; C, D outside. D is infinite when lambda1 = 0.
  cplx A, B, C, D;
  bool pole_at_origin = false;
};

enum class MatrixKind { MajoranaXY, SymmetricXX };

struct CorrelationMatrix {
  MatrixKind kind = MatrixKind::MajoranaXY;
  int L = 0;
  ModelParams params;
  Eigen::MatrixXd entries;  // 2L x 2L for MajoranaXY, L x L for SymmetricXX
  int quad_points = 0;      // grid actually used (0 for closed forms)
};

struct NuSpectrum {
  MatrixKind kind = MatrixKind::MajoranaXY;
  ModelParams params;
  // Descending. MajoranaXY values lie in [0,1]; SymmetricXX keeps signed eigenvalues in [-1,1].
  std::vector<double> nus;
};

inline constexpr double kBoundaryTol = 1e-12;
inline constexpr double kCoefficientTail = 1e-12;
inline constexpr int kMaxQuadPoints = 1 << 22;

PhaseCase classify_case(const ModelParams& p);
BranchPoints branch_points(const ModelParams& p);
EllipticModulus modulus_k(const ModelParams& p);

// phi(theta) = (cos theta - i gamma sin theta - h/2) / |...|
cplx symbol_phi(double theta, const ModelParams& p);
// [[0, phi], [-1/phi, 0]]
Eigen::Matrix2cd symbol_phi0(double theta, const ModelParams& p);

// Fourier coefficients phi_l for |l| <= n (index l + n). quad_points = 0 picks the grid.
std::vector<double> symbol_coefficients(const ModelParams& p, int n, int quad_points = 0,
                                        int* used_points = nullptr);

// quad_points = 0 selects max(4096, 8L) rounded up to a power of two.
CorrelationMatrix build_correlation_matrix(const ModelParams& p, int L, int quad_points = 0);
CorrelationMatrix build_xx_matrix(double h, int L);

NuSpectrum nu_spectrum(const CorrelationMatrix& c);

// Convenience: gamma = 0 with |h| < 2 goes through the XX closed form, anything else through B_L.
NuSpectrum nu_spectrum_for(const ModelParams& p, int L);

}  // namespace xyent::chain
