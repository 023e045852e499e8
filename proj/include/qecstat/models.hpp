#pragma once

#include <vector>

#include "qecstat/core.hpp"

namespace qecstat {

// Scaling variable x = (p - p_c) L^{1/nu}.
double scaling_x(double p, int L, double p_c, double nu);

struct PathcountEstimate {
  double coefficient = 0.0;  // combinatorial prefactor at p = 0
  double pfail = 0.0;
  bool valid = false;        // inside the documented validity window
};

// Post-selected path counting, 2 L (p/(1-p))^L; valid for p < 1/L.
PathcountEstimate pathcount_postselected(double p, int L);

// beta * sigma(p) = log((1-p)(1-2p)/p) on the Nishimori line.
double beta_sigma_clean(double p);

// Onsager surface tension sigma(beta) = 2 - log(coth beta)/beta, J = 1.
// Requires beta > beta_c.
double surface_tension_clean(double beta);

// Capillary-wave failure estimate 2 sqrt(L) (p/((1-p)(1-2p)))^L for p < p_c;
// the validity flag is false past p = p_c - 1/L.
PathcountEstimate capillary_pfail(double p, int L);

// Domain-wall free energy with the capillary correction,
// sigma(beta) L - log(L)/(2 beta).  The log term carries 1/beta so that
// 2 exp(-beta dF) coincides with capillary_pfail (see the notes in README).
double capillary_deltaF(double beta, int L);

// Untruncated form with a caller-supplied stiffness kappa:
// sigma L - [log L + log(kappa/(2 pi))] / (2 beta).
double capillary_deltaF_full(double beta, int L, double kappa);

enum class AlphaBranch { clean_near_pc, clean_small_p, nps_small_p, nps_near_pc };

// Asymptotics of the decay rate alpha(p) = beta sigma(p) in the regimes where
// closed forms exist.  nps_near_pc takes the nonuniversal amplitude C and the
// exponent nu from the caller.
double alpha_asymptotics(double p, AlphaBranch which, double C = 0.0, double nu = 0.0);

// Appendix-style minimal-error coefficients for codes without post-selection,
// taken as printed (see README for the measured exceptions for planar odd L).
// pfail keeps the (1-p)^{floor(L/2)} factors unless bare is set.
PathcountEstimate pathcount_nonpostselected(CodeKind kind, Parity parity, int L,
                                            double p, bool bare = false);

// Continuous Gamma-function extension of the minimal-path prefactor, used
// only for drawing validity boundaries at non-integer L.
double nmin_continuous(CodeKind kind, double L);

struct AnsatzSpec {
  enum class Family { erf_quadratic, erf_linear, poly_simple, poly_L };
  Family family = Family::erf_quadratic;
  // Coefficients, high order first:
  //   erf_quadratic: A2 A1 A0; erf_linear: A1 A0;
  //   poly_simple:   A  B  C ; poly_L:     A B C D mu_corr.
  std::vector<double> coeffs;
  double p_c = kPc;
  double nu = 1.0;
};

int ansatz_param_count(AnsatzSpec::Family fam);  // total free parameters

// Evaluate a failure-rate ansatz at (p, L).  Erf families are clamped to
// [0, 1]; polynomial families are returned raw.
double eval_ansatz(const AnsatzSpec& spec, double p, int L);

// Below-threshold surface-tension model 2 exp(-beta (sigma_eff L + delta)).
double surface_tension_model(double p, int L, double sigma_eff, double delta,
                             double beta);

// Validity boundaries as the figure conventions define them.
double boundary_pathcount_post(double p);          // Eq. at L = 1/p
double boundary_capillary(int L);                  // Eq. at p = p_c - 1/L
double boundary_pathcount_nps(CodeKind kind, double L);  // at p = 1/L^2

}  // namespace qecstat
