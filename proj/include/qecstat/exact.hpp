#pragma once

#include <array>

#include "qecstat/core.hpp"

namespace qecstat {

// A physical error rate together with the Nishimori-line temperature and the
// signed fermion mass of the equivalent clean Ising model (J = 1).
struct ModelPoint {
  double p = 0.0;
  double beta = 0.0;   // beta = log((1-p)/p)/2
  double mu = 0.0;     // mu = log(sqrt(sinh(2 beta))), NaN for p > 1/2
  int temp_side = 0;   // sign(p - p_c): -1 ordered, 0 critical, +1 disordered
};

ModelPoint nishimori_point(double p);

// Lattice dispersion omega(k) = arcsinh(sqrt(sin^2 k + 2 sinh^2 mu)).
double dispersion(double k, double mu);

struct LogMag {
  double log = 0.0;     // log-magnitude, meaningless when is_zero
  bool is_zero = false; // the quantity is exactly zero
};

enum SpinBC { spin_pp = 0, spin_pa = 1, spin_ap = 2, spin_aa = 3 };

// Log-magnitudes of the four fermion sector products Z_{alpha,gamma} and of
// the four spin partition functions on an LxL torus.  Sector index 0 means
// twist 0 (periodic), index 1 means twist 1/2 (antiperiodic).  Spin logs omit
// the common prefactor (2 sinh 2 beta)^{L^2/2}, which cancels in every ratio
// this library forms.
struct SectorLogs {
  int L = 0;
  LogMag f[2][2];          // f[alpha][gamma]
  LogMag spin[4];          // indexed by SpinBC
};

SectorLogs fermion_sector_logs(const ModelPoint& pt, int L);

// Exact logical failure rate of the fully post-selected code on an LxL torus.
double pfail_exact(double p, int L);

// Probabilities of the four logical cosets (identity, X1, X2, X1X2), summing
// to one.  Defined for all p in (0,1); for p > 1/2 the complement of the
// error pattern is used, which permutes the cosets for odd L.
std::array<double, 4> coset_fractions(double p, int L);

// Kramers-Wannier dual error rate p* = (1-2p) / (2(1-p)) for p in (0, 1/2).
double kw_dual(double p);

// [1 - pfail(p)] [1 - pfail(p*)] - 1/4; exactly zero in infinite precision.
double duality_residual(double p, int L);

struct CriticalConstants {
  double eta_i = 0.0;      // |Dedekind eta at tau = i|
  double theta_sum = 0.0;  // theta2 + theta3 + theta4 at tau = i
  double slope = 0.0;      // d pfail / dx at x = 0, x = (p - p_c) L
};

// Special-function constants at tau = i and the critical slope of the scaling
// function, slope = (2 + sqrt 2) * sqrt(8) * eta^3 / (theta2 + theta3 + theta4).
CriticalConstants critical_slope();

// First-order near-threshold prediction 1/2 + slope * x with x = (p - p_c) L.
double near_threshold_pfail(double x, int L);

namespace qseries {
// q-series evaluations used by critical_slope, exposed for convergence tests.
double theta2(int terms);
double theta3(int terms);
double theta4(int terms);
double eta_i(int terms);
}  // namespace qseries

}  // namespace qecstat
