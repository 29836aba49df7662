#include "hilbertlab/transforms/periodic.hpp"

#include <cmath>

#include "hilbertlab/numerics/fft.hpp"
#include "hilbertlab/numerics/special_functions.hpp"

namespace hilbertlab {

Vector periodic_hilbert_step(const PiecewiseFunction& f, double t) {
  if (f.domain() != Domain::Torus) throw Error(ErrorKind::Domain, "periodic transform needs a Torus step function");
  Vector out = f.zero();
  for (const Piece& p : f.pieces()) {
    if (p.hi - p.lo >= kTwoPi) continue;  // constants are annihilated
    const double num = std::abs(std::sin(0.5 * (t - p.lo)));
    const double den = std::abs(std::sin(0.5 * (t - p.hi)));
    if (num < 1e-15 || den < 1e-15)
      throw Error(ErrorKind::SingularPoint, "periodic transform evaluated at a breakpoint");
    out += (std::log(num / den) / kPi) * p.value;
  }
  return out;
}

Eigen::VectorXd periodic_hilbert_fft(const Eigen::VectorXd& samples) {
  const long n = samples.size();
  if (!is_power_of_two(n) || n < 2) throw Error(ErrorKind::InvalidArgument, "FFT path needs a power-of-two length");
  fft::ComplexVector X = fft::forward(samples);
  for (long k = 0; k < n; ++k) {
    const long freq = fft::frequency(k, n);
    auto& c = X[static_cast<std::size_t>(k)];
    if (freq == 0 || 2 * freq == n) c = 0.0;
    else c *= fft::Complex(0.0, freq > 0 ? -1.0 : 1.0);
  }
  const fft::ComplexVector y = fft::inverse(X);
  Eigen::VectorXd out(n);
  for (long k = 0; k < n; ++k) out[k] = y[static_cast<std::size_t>(k)].real();
  return out;
}

GridFunction periodic_hilbert_fft(const GridFunction& f) {
  if (f.domain != Domain::Torus) throw Error(ErrorKind::Domain, "FFT path is defined on the Torus");
  GridFunction g = f;
  for (Eigen::Index c = 0; c < f.samples.cols(); ++c) g.samples.col(c) = periodic_hilbert_fft(Eigen::VectorXd(f.samples.col(c)));
  return g;
}

Eigen::VectorXd periodic_hilbert_cell_kernel(long n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "cell kernel needs n >= 2");
  const double h = kTwoPi / static_cast<double>(n);
  Eigen::VectorXd col(n);
  for (long k = 0; k < n; ++k) {
    // Offsets are reduced to (-n/2, n/2] so the Clausen arguments stay small.
    const double m = static_cast<double>(fft::frequency(k, n));
    const double d2 = special::clausen2((m + 1.0) * h) - 2.0 * special::clausen2(m * h) + special::clausen2((m - 1.0) * h);
    col[k] = -d2 / (kPi * h);
  }
  return col;
}

}  // namespace hilbertlab
