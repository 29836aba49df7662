#pragma once

namespace hilbertlab {

/// p* = max(p, p/(p-1)).
double p_star(double p);

/// cot(pi / (2 p*)), the L^p norm of the Hilbert transforms on T, R and Z.
double pichorides_constant(double p);

struct ReferenceConstants {
  double p_star = 0.0;
  double beta_hilbert = 0.0;       // UMD constant of a Hilbert space, p* - 1
  double pichorides = 0.0;         // cot(pi / 2p*)
  double wds_bound_hilbert = 0.0;  // (p* - 1) + cot(pi / 2p*)
};

/// Throws for p <= 1; also checks (2/pi)(p* - 1) <= cot(pi/2p*) <= p* - 1.
ReferenceConstants reference_constants(double p);

/// Good-lambda extrapolation constant
///   C_p = (delta^{-p} beta^p / (1 - beta^p 2 delta C / (beta - 1)))^{1/p},
/// beta = 1 + 1/p, delta = 1/(10 C p). The denominator reduces to
/// 1 - beta^p / 5, which stays above 1 - e/5.
double extrapolation_constant(double p, double C);

}  // namespace hilbertlab
