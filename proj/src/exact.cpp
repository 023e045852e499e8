#include "qecstat/exact.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qecstat {

namespace {

constexpr double kPi = 3.14159265358979323846;

// sinh(2 beta) on the Nishimori line, in closed form to avoid overflow at
// small p: sinh(log((1-p)/p)) = (1-2p) / (2 p (1-p)).
double sinh2beta(double p) { return (1.0 - 2.0 * p) / (2.0 * p * (1.0 - p)); }

// 2 sinh^2(mu) = (s - 1)^2 / (2 s) with s = sinh(2 beta).
double mass_term(double p) {
  const double s = sinh2beta(p);
  const double d = s - 1.0;
  return d * d / (2.0 * s);
}

double log2sinh(double a) { return a + std::log1p(-std::exp(-2.0 * a)); }
double log2cosh(double a) { return a + std::log1p(std::exp(-2.0 * a)); }

// log(coth a) for a > 0, accurate for large a where coth a -> 1.
double logcoth(double a) {
  const double e = std::exp(-2.0 * a);
  return std::log1p(e) - std::log1p(-e);
}

bool near_critical(double p) { return std::abs(p - kPc) <= kPcTol; }

void check_pfail_args(double p, int L) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("pfail_exact: p must lie in (0,1)");
  if (L < 2) throw std::domain_error("pfail_exact: L must be >= 2");
}

// Stable sector differences on the square torus.  Using Z_{0,1/2} = Z_{1/2,0}
// (exact for L x L), every ratio of sector products reduces to
//   d = log Z_{0,1/2} - log Z_{0,0}   = sum_n log coth(L w(pi n / L))
//   c = log Z_{1/2,1/2} - log Z_{1/2,0} = sum_n log coth(L w(pi (n+1/2) / L))
// which are sums of small positive terms, so failure rates keep full relative
// precision deep below threshold where the sectors agree to e^{-O(L)}.
struct SectorDiffs {
  double d = 0.0;
  double c = 0.0;
};

SectorDiffs sector_diffs(double p, int L) {
  const double q2 = mass_term(p);
  SectorDiffs out;
  for (int n = 0; n < L; ++n) {
    const double s0 = std::sin(kPi * n / L);
    const double s1 = std::sin(kPi * (n + 0.5) / L);
    out.d += logcoth(L * std::asinh(std::sqrt(s0 * s0 + q2)));
    out.c += logcoth(L * std::asinh(std::sqrt(s1 * s1 + q2)));
  }
  return out;
}

// Coset fractions for p in (0, 1/2), ordered (pp, ap, pa, aa) i.e.
// (identity, X1, X2, X1 X2).
std::array<double, 4> coset_fractions_low(double p, int L) {
  if (near_critical(p)) {
    // Z00 = 0: fractions from the three finite sectors.
    ModelPoint pt = nishimori_point(p);
    SectorLogs sl = fermion_sector_logs(pt, L);
    const double l55 = sl.f[1][1].log, l05 = sl.f[0][1].log, l50 = sl.f[1][0].log;
    const double m = std::max({l55, l05, l50});
    const double e55 = std::exp(l55 - m), e05 = std::exp(l05 - m), e50 = std::exp(l50 - m);
    const double tot = 2.0 * (e55 + e05 + e50);
    return {(e55 + e05 + e50) / tot, (e55 - e05 + e50) / tot,
            (e55 + e05 - e50) / tot, (-e55 + e05 + e50) / tot};
  }
  const SectorDiffs sd = sector_diffs(p, L);
  const double ed = std::exp(sd.d);
  const double ecd = std::exp(sd.c + sd.d);
  if (p < kPc) {
    // Z_pp/Z00 = (ecd + 2 ed + 1)/2, Z_pa/Z00 = Z_ap/Z00 = expm1(c+d)/2,
    // Z_aa/Z00 = (expm1(d) - ed expm1(c))/2.
    const double zpp = (ecd + 2.0 * ed + 1.0) / 2.0;
    const double zx = std::expm1(sd.c + sd.d) / 2.0;
    const double zaa = std::max(0.0, (std::expm1(sd.d) - ed * std::expm1(sd.c)) / 2.0);
    const double tot = zpp + 2.0 * zx + zaa;
    return {zpp / tot, zx / tot, zx / tot, zaa / tot};
  }
  const double zpp = (ecd + 2.0 * ed - 1.0) / 2.0;
  const double zx = (ecd + 1.0) / 2.0;
  const double zaa = std::max(0.0, (2.0 * ed - ecd + 1.0) / 2.0);
  const double tot = zpp + 2.0 * zx + zaa;
  return {zpp / tot, zx / tot, zx / tot, zaa / tot};
}

}  // namespace

ModelPoint nishimori_point(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("nishimori_point: p must lie in (0,1)");
  ModelPoint pt;
  pt.p = p;
  pt.beta = 0.5 * std::log((1.0 - p) / p);
  pt.mu = 0.5 * std::log(sinh2beta(p));  // NaN for p > 1/2, propagated
  pt.temp_side = near_critical(p) ? 0 : (p > kPc ? +1 : -1);
  return pt;
}

double dispersion(double k, double mu) {
  const double sm = std::sinh(mu);
  const double sk = std::sin(k);
  return std::asinh(std::sqrt(sk * sk + 2.0 * sm * sm));
}

SectorLogs fermion_sector_logs(const ModelPoint& pt, int L) {
  if (L < 2) throw std::domain_error("fermion_sector_logs: L must be >= 2");
  if (!std::isfinite(pt.beta) || std::isnan(pt.mu))
    throw std::domain_error("fermion_sector_logs: model point has no real mass (p > 1/2?)");
  const double q2 = (pt.temp_side == 0) ? 0.0 : mass_term(pt.p);
  SectorLogs out;
  out.L = L;
  for (int ai = 0; ai < 2; ++ai) {
    const double alpha = ai * 0.5;
    for (int gi = 0; gi < 2; ++gi) {
      double tot = 0.0;
      bool zero = false;
      for (int n = 0; n < L; ++n) {
        const double s = std::sin(kPi * (n + alpha) / L);
        const double a = L * std::asinh(std::sqrt(s * s + q2));
        if (gi == 0) {
          if (a == 0.0)
            zero = true;  // the n=0, alpha=0 mode at criticality
          else
            tot += log2sinh(a);
        } else {
          tot += log2cosh(a);
        }
      }
      out.f[ai][gi] = {zero ? 0.0 : tot, zero};
    }
  }

  // Spin partition functions (common prefactor dropped).  Signs of the Z00
  // term follow sgn(T - T_c) = sign(p - p_c).
  const double l55 = out.f[1][1].log, l05 = out.f[0][1].log, l50 = out.f[1][0].log;
  const double l00 = out.f[0][0].log;
  const bool z00 = out.f[0][0].is_zero;
  const double s = pt.temp_side;
  const double m = z00 ? std::max({l55, l05, l50}) : std::max({l55, l05, l50, l00});
  const double e55 = std::exp(l55 - m), e05 = std::exp(l05 - m), e50 = std::exp(l50 - m);
  const double e00 = z00 ? 0.0 : std::exp(l00 - m);
  const double combos[4] = {
      e55 + e05 + e50 - s * e00,   // pp
      e55 + e05 - e50 + s * e00,   // pa
      e55 - e05 + e50 + s * e00,   // ap
      -e55 + e05 + e50 + s * e00,  // aa
  };
  for (int i = 0; i < 4; ++i) {
    if (combos[i] <= 0.0)
      out.spin[i] = {0.0, true};  // positive in exact arithmetic; underflowed
    else
      out.spin[i] = {m + std::log(combos[i] / 2.0), false};
  }
  return out;
}

double pfail_exact(double p, int L) {
  check_pfail_args(p, L);
  if (near_critical(p)) return 0.5;
  if (p == 0.5) return 0.75;  // beta = 0: all cosets equally likely
  if (p > 0.5) {
    // Complementing every error maps p -> 1-p and shifts each coset by the
    // class of the full edge set: trivial for even L, (1,1) for odd L.
    const auto f = coset_fractions_low(1.0 - p, L);
    return (L % 2 == 0) ? 1.0 - f[0] : 1.0 - f[3];
  }
  const SectorDiffs sd = sector_diffs(p, L);
  if (p < kPc) {
    const double N = 2.0 * std::expm1(sd.d) + std::expm1(sd.c + sd.d);
    return N / (2.0 * (N + 2.0));
  }
  return 0.5 + 1.0 / (std::exp(sd.c + sd.d) + 2.0 * std::exp(sd.d) + 1.0);
}

std::array<double, 4> coset_fractions(double p, int L) {
  check_pfail_args(p, L);
  if (p == 0.5) return {0.25, 0.25, 0.25, 0.25};
  if (p < 0.5) return coset_fractions_low(p, L);
  auto f = coset_fractions_low(1.0 - p, L);
  if (L % 2 == 1) {
    std::swap(f[0], f[3]);
    std::swap(f[1], f[2]);
  }
  return f;
}

double kw_dual(double p) {
  if (!(p > 0.0 && p < 0.5)) throw std::domain_error("kw_dual: p must lie in (0,1/2)");
  return (1.0 - 2.0 * p) / (2.0 * (1.0 - p));
}

double duality_residual(double p, int L) {
  const double ps = kw_dual(p);
  return (1.0 - pfail_exact(p, L)) * (1.0 - pfail_exact(ps, L)) - 0.25;
}

namespace qseries {

// Nome q = e^{-pi} at tau = i.
double theta3(int terms) {
  const double q = std::exp(-kPi);
  double sum = 1.0;
  for (int n = 1; n <= terms; ++n) sum += 2.0 * std::pow(q, double(n) * n);
  return sum;
}

double theta4(int terms) {
  const double q = std::exp(-kPi);
  double sum = 1.0, sign = -1.0;
  for (int n = 1; n <= terms; ++n, sign = -sign)
    sum += 2.0 * sign * std::pow(q, double(n) * n);
  return sum;
}

double theta2(int terms) {
  const double q = std::exp(-kPi);
  double sum = 0.0;
  for (int n = 0; n <= terms; ++n) sum += 2.0 * std::pow(q, (n + 0.5) * (n + 0.5));
  return sum;
}

double eta_i(int terms) {
  // eta(i) = q^{1/24} prod (1 - q^n) with q = e^{-2 pi}.
  const double q = std::exp(-2.0 * kPi);
  double prod = 1.0;
  for (int n = 1; n <= terms; ++n) prod *= 1.0 - std::pow(q, n);
  return std::pow(q, 1.0 / 24.0) * prod;
}

}  // namespace qseries

CriticalConstants critical_slope() {
  // Terms chosen so the next term is below 1e-16 (q^{25} ~ 6e-35).
  constexpr int kTerms = 8;
  CriticalConstants cc;
  cc.eta_i = qseries::eta_i(kTerms);
  cc.theta_sum = qseries::theta2(kTerms) + qseries::theta3(kTerms) + qseries::theta4(kTerms);
  // dP/dx at x = 0 with x = (p - p_c) L:
  //   |d mu / dp| = sqrt(2) (1 + sqrt 2) at p_c, and the mass derivative of
  //   the zero sector over the finite sectors tends to sqrt(8) L eta^3 /
  //   (theta2 + theta3 + theta4); theta1'(0|i) = 2 pi eta(i)^3 fixes the eta
  //   power.  The finite-difference slope of pfail_exact is the arbiter.
  const double dmu_dx = std::sqrt(2.0) * (1.0 + std::sqrt(2.0));
  cc.slope = dmu_dx * std::sqrt(8.0) * std::pow(cc.eta_i, 3) / cc.theta_sum;
  return cc;
}

double near_threshold_pfail(double x, int L) {
  (void)L;  // the first-order prediction is L-independent
  static const double slope = critical_slope().slope;
  return 0.5 + slope * x;
}

}  // namespace qecstat
