#include "hilbertlab/norms/constants.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hilbertlab/core/error.hpp"

namespace hilbertlab {

double p_star(double p) {
  if (!(p > 1.0)) throw Error(ErrorKind::InvalidArgument, "exponent must satisfy p > 1");
  if (std::isinf(p)) throw Error(ErrorKind::InvalidArgument, "exponent must be finite");
  return std::max(p, p / (p - 1.0));
}

double pichorides_constant(double p) {
  return 1.0 / std::tan(std::numbers::pi / (2.0 * p_star(p)));
}

ReferenceConstants reference_constants(double p) {
  ReferenceConstants r;
  r.p_star = p_star(p);
  r.beta_hilbert = r.p_star - 1.0;
  r.pichorides = pichorides_constant(p);
  r.wds_bound_hilbert = r.beta_hilbert + r.pichorides;
  const double slack = 1e-12 * r.beta_hilbert;
  if (2.0 / std::numbers::pi * r.beta_hilbert > r.pichorides + slack || r.pichorides > r.beta_hilbert + slack) {
    std::ostringstream msg;
    msg << "constant sandwich violated at p = " << p;
    throw Error(ErrorKind::Domain, msg.str());
  }
  return r;
}

double extrapolation_constant(double p, double C) {
  if (!(p > 1.0) || std::isinf(p)) throw Error(ErrorKind::InvalidArgument, "exponent must satisfy 1 < p < inf");
  if (!(C > 0.0) || std::isinf(C)) throw Error(ErrorKind::InvalidArgument, "C must be positive and finite");
  const double beta = 1.0 + 1.0 / p;
  const double delta = 1.0 / (10.0 * C * p);
  const double bp = std::pow(beta, p);
  const double den = 1.0 - bp * 2.0 * delta * C / (beta - 1.0);
  if (!(den > 0.0)) throw Error(ErrorKind::Domain, "extrapolation denominator is not positive");
  // Work in logs: delta^{-p} overflows for large p.
  return std::exp((-p * std::log(delta) + p * std::log(beta) - std::log(den)) / p);
}

}  // namespace hilbertlab
