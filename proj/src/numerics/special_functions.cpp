#include "hilbertlab/numerics/special_functions.hpp"

#include <gsl/gsl_sf_clausen.h>
#include <gsl/gsl_sf_dawson.h>
#include <gsl/gsl_sf_psi.h>

#include <numbers>

#include "hilbertlab/core/error.hpp"

namespace hilbertlab::special {

double clausen2(double x) { return gsl_sf_clausen(x); }

double dawson(double x) { return gsl_sf_dawson(x); }

double harmonic_number(long long n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "harmonic number of a negative index");
  if (n <= 64) {
    double s = 0.0;
    for (long long k = n; k >= 1; --k) s += 1.0 / static_cast<double>(k);
    return s;
  }
  // H_n = psi(n + 1) + gamma
  return gsl_sf_psi(static_cast<double>(n) + 1.0) + std::numbers::egamma;
}

double reciprocal_sum(long long m, long long n) {
  if (m > n) return 0.0;
  if (m <= 0 && n >= 0) throw Error(ErrorKind::SingularPoint, "reciprocal sum over a range containing 0");
  if (m < 0) return -reciprocal_sum(-n, -m);
  if (n - m < 64) {
    double s = 0.0;
    for (long long k = n; k >= m; --k) s += 1.0 / static_cast<double>(k);
    return s;
  }
  return harmonic_number(n) - harmonic_number(m - 1);
}

}  // namespace hilbertlab::special
