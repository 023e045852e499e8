#include "qecstat/models.hpp"

#include <cmath>
#include <stdexcept>

namespace qecstat {

namespace {

constexpr double kPi = 3.14159265358979323846;

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

void check_L(int L, int min) {
  if (L < min) throw std::domain_error("L too small for this operation");
}

}  // namespace

double scaling_x(double p, int L, double p_c, double nu) {
  return (p - p_c) * std::pow(double(L), 1.0 / nu);
}

PathcountEstimate pathcount_postselected(double p, int L) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("pathcount_postselected: p in (0,1)");
  check_L(L, 2);
  PathcountEstimate out;
  out.coefficient = 2.0 * L;
  out.pfail = 2.0 * L * std::pow(p / (1.0 - p), L);
  out.valid = p < 1.0 / L;
  return out;
}

double beta_sigma_clean(double p) {
  if (!(p > 0.0 && p < 0.5)) throw std::domain_error("beta_sigma_clean: p in (0,1/2)");
  return std::log((1.0 - p) * (1.0 - 2.0 * p) / p);
}

double surface_tension_clean(double beta) {
  if (!(beta > kBetaC)) throw std::domain_error("surface_tension_clean: beta must exceed beta_c");
  // log coth(beta) via exp(-2 beta) for accuracy at large beta.
  const double e = std::exp(-2.0 * beta);
  const double logcoth = std::log1p(e) - std::log1p(-e);
  return 2.0 - logcoth / beta;
}

PathcountEstimate capillary_pfail(double p, int L) {
  if (!(p > 0.0 && p < kPc)) throw std::domain_error("capillary_pfail: p in (0,p_c)");
  check_L(L, 4);
  PathcountEstimate out;
  out.coefficient = 2.0 * std::sqrt(double(L));
  out.pfail = out.coefficient * std::pow(p / ((1.0 - p) * (1.0 - 2.0 * p)), L);
  out.valid = p <= kPc - 1.0 / L;
  return out;
}

double capillary_deltaF(double beta, int L) {
  check_L(L, 1);
  return surface_tension_clean(beta) * L - std::log(double(L)) / (2.0 * beta);
}

double capillary_deltaF_full(double beta, int L, double kappa) {
  check_L(L, 1);
  if (!(kappa > 0.0)) throw std::domain_error("capillary_deltaF_full: kappa > 0");
  return surface_tension_clean(beta) * L -
         (std::log(double(L)) + std::log(kappa / (2.0 * kPi))) / (2.0 * beta);
}

double alpha_asymptotics(double p, AlphaBranch which, double C, double nu) {
  switch (which) {
    case AlphaBranch::clean_near_pc:
      return -4.0 * (1.0 + std::sqrt(2.0)) * (p - kPc);
    case AlphaBranch::clean_small_p:
      if (!(p > 0.0)) throw std::domain_error("alpha_asymptotics: p > 0");
      return std::log(1.0 / p);
    case AlphaBranch::nps_small_p:
      return 1.0;  // sigma_eff -> J = 1
    case AlphaBranch::nps_near_pc:
      if (!(nu > 0.0)) throw std::domain_error("alpha_asymptotics: nu > 0");
      return C * std::pow(std::abs(p - kPc), nu);
  }
  throw std::domain_error("alpha_asymptotics: unknown branch");
}

PathcountEstimate pathcount_nonpostselected(CodeKind kind, Parity parity, int L,
                                            double p, bool bare) {
  check_L(L, 3);
  if (parity != parity_of(L))
    throw std::invalid_argument("pathcount_nonpostselected: parity does not match L");
  if (!(p >= 0.0 && p < 1.0)) throw std::domain_error("pathcount_nonpostselected: p in [0,1)");
  const int half_up = (L + 1) / 2;
  const int half_dn = L / 2;
  PathcountEstimate out;
  double coeff;
  if (kind == CodeKind::torus) {
    coeff = (parity == Parity::odd) ? 2.0 * L * binom(L, half_dn) : L * binom(L, half_dn);
  } else {
    coeff = (parity == Parity::odd)
                ? double(L) * L * binom(L + 1, half_up) + 0.5 * L * binom(L, half_dn)
                : 0.5 * L * binom(L, half_dn);
  }
  out.coefficient = coeff;
  const double onemp = bare ? 1.0 : std::pow(1.0 - p, half_dn);
  out.pfail = coeff * onemp * std::pow(p / (1.0 - p), half_up);
  if (bare) out.pfail = coeff * std::pow(p, half_up);
  out.valid = p < 1.0 / (4.0 * double(L) * L);
  return out;
}

double nmin_continuous(CodeKind kind, double L) {
  if (!(L > 1.0)) throw std::domain_error("nmin_continuous: L > 1");
  // Continuous version of the odd-distance prefactor; agrees with the integer
  // expression at odd L up to the even/odd half factor.
  const double lg = std::lgamma(L + 1.0) - std::lgamma((L + 1.0) / 2.0 + 0.5) -
                    std::lgamma((L - 1.0) / 2.0 + 1.0);
  double coeff = 2.0 * L * std::exp(lg);
  if (kind == CodeKind::planar) coeff *= 0.5;
  return coeff;
}

int ansatz_param_count(AnsatzSpec::Family fam) {
  switch (fam) {
    case AnsatzSpec::Family::erf_quadratic: return 5;
    case AnsatzSpec::Family::erf_linear: return 4;
    case AnsatzSpec::Family::poly_simple: return 5;
    case AnsatzSpec::Family::poly_L: return 7;
  }
  return 0;
}

double eval_ansatz(const AnsatzSpec& spec, double p, int L) {
  const size_t need = size_t(ansatz_param_count(spec.family)) - 2;  // minus p_c, nu
  if (spec.coeffs.size() != need)
    throw std::invalid_argument("eval_ansatz: coefficient count does not match family");
  if (!(spec.nu > 0.0)) throw std::invalid_argument("eval_ansatz: nu must be positive");
  const double x = scaling_x(p, L, spec.p_c, spec.nu);
  switch (spec.family) {
    case AnsatzSpec::Family::erf_quadratic: {
      const double G = spec.coeffs[0] * x * x + spec.coeffs[1] * x + spec.coeffs[2];
      const double f = 0.5 * (1.0 - std::erf(G / std::sqrt(2.0)));
      return std::min(1.0, std::max(0.0, f));
    }
    case AnsatzSpec::Family::erf_linear: {
      const double G = spec.coeffs[0] * x + spec.coeffs[1];
      const double f = 0.5 * (1.0 - std::erf(G / std::sqrt(2.0)));
      return std::min(1.0, std::max(0.0, f));
    }
    case AnsatzSpec::Family::poly_simple:
      return spec.coeffs[0] * x * x + spec.coeffs[1] * x + spec.coeffs[2];
    case AnsatzSpec::Family::poly_L: {
      const double mu_corr = spec.coeffs[4];
      if (!(mu_corr > 0.0)) throw std::invalid_argument("eval_ansatz: mu_corr must be positive");
      return spec.coeffs[0] * x * x + spec.coeffs[1] * x + spec.coeffs[2] +
             spec.coeffs[3] * std::pow(double(L), -1.0 / mu_corr);
    }
  }
  throw std::invalid_argument("eval_ansatz: unknown family");
}

double surface_tension_model(double p, int L, double sigma_eff, double delta,
                             double beta) {
  (void)p;
  if (!(sigma_eff >= 0.0)) throw std::domain_error("surface_tension_model: sigma_eff >= 0");
  return 2.0 * std::exp(-beta * (sigma_eff * L + delta));
}

double boundary_pathcount_post(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("boundary_pathcount_post: p in (0,1)");
  const double L = 1.0 / p;
  return 2.0 * L * std::pow(p / (1.0 - p), L);
}

double boundary_capillary(int L) {
  check_L(L, 4);
  const double p = kPc - 1.0 / L;
  return 2.0 * std::sqrt(double(L)) * std::pow(p / ((1.0 - p) * (1.0 - 2.0 * p)), L);
}

double boundary_pathcount_nps(CodeKind kind, double L) {
  const double p = 1.0 / (L * L);
  return nmin_continuous(kind, L) * std::pow(p, (L + 1.0) / 2.0);
}

}  // namespace qecstat
