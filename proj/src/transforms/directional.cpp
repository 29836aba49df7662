#include "hilbertlab/transforms/directional.hpp"

#include <cmath>
#include <numbers>

#include "hilbertlab/core/grid_function.hpp"
#include "hilbertlab/core/piecewise_function.hpp"
#include "hilbertlab/numerics/fft.hpp"
#include "hilbertlab/numerics/quadrature.hpp"
#include "hilbertlab/numerics/special_functions.hpp"

namespace hilbertlab {

namespace {

void check_unit(const Vector& theta) {
  if (std::abs(theta.norm() - 1.0) > 1e-12) throw Error(ErrorKind::InvalidArgument, "direction must be a unit vector");
}

}  // namespace

Vector directional_hilbert(const BoxFunction& f, const Vector& theta, const Vector& x) {
  const int d = f.ambient_dim();
  if (theta.size() != d || x.size() != d) throw Error(ErrorKind::DimensionMismatch, "direction/point dimension mismatch");
  check_unit(theta);
  Vector out = Vector::Zero(f.space().dim());
  for (const Box& b : f.boxes()) {
    // Parameter range {t : x - t theta in [lo, hi)}.
    double tlo = -kInf, thi = kInf;
    bool empty = false;
    for (int i = 0; i < d; ++i) {
      if (theta[i] == 0.0) {
        if (x[i] == b.lo[i] || x[i] == b.hi[i])
          throw Error(ErrorKind::SingularPoint, "line runs along a box face");
        if (x[i] < b.lo[i] || x[i] >= b.hi[i]) empty = true;
        continue;
      }
      double a = (x[i] - b.hi[i]) / theta[i], c = (x[i] - b.lo[i]) / theta[i];
      if (a > c) std::swap(a, c);
      tlo = std::max(tlo, a);
      thi = std::min(thi, c);
    }
    if (empty || !(tlo < thi)) continue;
    if (tlo == 0.0 || thi == 0.0) throw Error(ErrorKind::SingularPoint, "evaluation point lies on a box face");
    out += (std::log(std::abs(thi / tlo)) / kPi) * b.value;
  }
  return out;
}

GaussianBump GaussianBump::isotropic(int d, double sigma, double amplitude) {
  return {Vector::Zero(d), Matrix::Identity(d, d) / (sigma * sigma), amplitude};
}

double GaussianBump::operator()(const Vector& y) const {
  const Vector r = y - mean;
  return amplitude * std::exp(-0.5 * r.dot(precision * r));
}

double GaussianBump::directional_hilbert(const Vector& theta, const Vector& x) const {
  check_unit(theta);
  // Along the line, f(x - t theta) = C exp(-a (t - b/a)^2 / 2).
  const Vector r = x - mean;
  const Vector pt = precision * theta;
  const double a = theta.dot(pt);
  const double b = pt.dot(r);
  const double c = r.dot(precision * r);
  const double amp = amplitude * std::exp(-0.5 * (c - b * b / a));
  return amp * 2.0 / std::sqrt(kPi) * special::dawson(b / std::sqrt(2.0 * a));
}

GaussianBump GaussianBump::composed_with(const Matrix& A) const {
  // f(Ay) = amp exp(-(Ay - m)^T P (Ay - m)/2) = amp exp(-(y - A^T m)^T (A^T P A) (y - A^T m)/2)
  return {A.transpose() * mean, A.transpose() * precision * A, amplitude};
}

SphereQuadrature SphereQuadrature::make(int d, int n) {
  SphereQuadrature q;
  q.d = d;
  if (d == 2) {
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "circle quadrature needs n >= 2");
    for (int k = 0; k < n; ++k) {
      const double phi = kTwoPi * k / n;
      Vector t(2);
      t << std::cos(phi), std::sin(phi);
      q.nodes.push_back(t);
      q.weights.push_back(kTwoPi / n);
    }
    return q;
  }
  if (d == 3) {
    if (n < 4) throw Error(ErrorKind::InvalidArgument, "sphere quadrature needs n >= 4");
    const quad::Rule gl = quad::gauss_legendre(n / 2);
    for (Eigen::Index i = 0; i < gl.nodes.size(); ++i) {
      const double z = gl.nodes[i], s = std::sqrt(1.0 - z * z);
      for (int k = 0; k < n; ++k) {
        const double phi = kTwoPi * (k + 0.5) / n;
        Vector t(3);
        t << s * std::cos(phi), s * std::sin(phi), z;
        q.nodes.push_back(t);
        q.weights.push_back(gl.weights[i] * kTwoPi / n);
      }
    }
    return q;
  }
  throw Error(ErrorKind::Unsupported, "method of rotations is implemented for d = 2 and d = 3");
}

double riesz_rotation_weight(int d, int j, const Vector& theta) {
  const double c = kPi * std::exp(std::lgamma(0.5 * (d + 1)) - 0.5 * (d + 1) * std::log(kPi)) / 2.0;
  return c * theta[j - 1];
}

namespace {

template <typename LineTransform>
RieszValue rotation_average(int d, int j, int n_nodes, LineTransform&& line) {
  if (d != 2 && d != 3) throw Error(ErrorKind::Unsupported, "method of rotations is implemented for d = 2 and d = 3");
  if (j < 1 || j > d) throw Error(ErrorKind::InvalidArgument, "index j must satisfy 1 <= j <= d");
  auto integrate = [&](int n) {
    const SphereQuadrature q = SphereQuadrature::make(d, n);
    double acc = 0.0;
    for (std::size_t k = 0; k < q.nodes.size(); ++k) {
      const double w = riesz_rotation_weight(d, j, q.nodes[k]);
      if (w == 0.0) continue;
      acc += q.weights[k] * w * line(q.nodes[k]);
    }
    return acc;
  };
  const double fine = integrate(n_nodes);
  const double coarse = integrate(std::max(d == 2 ? 2 : 4, n_nodes / 2));
  return {fine, std::abs(fine - coarse)};
}

}  // namespace

RieszValue riesz_rotations(const BoxFunction& f, int j, const Vector& x, int n_nodes) {
  if (f.space().dim() != 1) throw Error(ErrorKind::Unsupported, "rotation average is evaluated for scalar step functions");
  return rotation_average(f.ambient_dim(), j, n_nodes,
                          [&](const Vector& theta) { return directional_hilbert(f, theta, x)[0]; });
}

RieszValue riesz_rotations(const GaussianBump& f, int j, const Vector& x, int n_nodes) {
  return rotation_average(f.dim(), j, n_nodes, [&](const Vector& theta) { return f.directional_hilbert(theta, x); });
}

long PeriodicGrid::size() const {
  long s = 1;
  for (long e : extents) s *= e;
  return s;
}

Vector PeriodicGrid::point(long flat) const {
  const int d = dim();
  Vector x(d);
  for (int a = d - 1; a >= 0; --a) {
    const long n = extents[static_cast<std::size_t>(a)];
    const long idx = flat % n;
    flat /= n;
    x[a] = -half_width + 2.0 * half_width * static_cast<double>(idx) / static_cast<double>(n);
  }
  return x;
}

PeriodicGrid PeriodicGrid::sample(const GaussianBump& f, const std::vector<long>& extents, double half_width) {
  PeriodicGrid g{extents, half_width, {}};
  if (static_cast<int>(extents.size()) != f.dim()) throw Error(ErrorKind::DimensionMismatch, "grid/bump dimension mismatch");
  g.samples.resize(g.size());
  for (long i = 0; i < g.size(); ++i) g.samples[i] = f(g.point(i));
  return g;
}

PeriodicGrid riesz_multiplier(const PeriodicGrid& f, int j) {
  const int d = f.dim();
  if (d != 2 && d != 3) throw Error(ErrorKind::Unsupported, "Riesz multiplier is implemented for d = 2 and d = 3");
  if (j < 1 || j > d) throw Error(ErrorKind::InvalidArgument, "index j must satisfy 1 <= j <= d");
  for (long e : f.extents)
    if (!is_power_of_two(e) || e < 2) throw Error(ErrorKind::InvalidArgument, "grid extents must be powers of two");
  fft::ComplexVector data(static_cast<std::size_t>(f.size()));
  for (long i = 0; i < f.size(); ++i) data[static_cast<std::size_t>(i)] = f.samples[i];
  fft::forward_nd(data, f.extents);
  const double k0 = kPi / f.half_width;  // fundamental wavenumber of the box
  for (long flat = 0; flat < f.size(); ++flat) {
    long rest = flat;
    Vector xi(d);
    bool nyquist = false;
    for (int a = d - 1; a >= 0; --a) {
      const long n = f.extents[static_cast<std::size_t>(a)];
      const long k = fft::frequency(rest % n, n);
      rest /= n;
      if (2 * k == n) nyquist = true;
      xi[a] = k0 * static_cast<double>(k);
    }
    auto& c = data[static_cast<std::size_t>(flat)];
    const double r = xi.norm();
    if (r == 0.0 || nyquist) c = 0.0;
    else c *= fft::Complex(0.0, -xi[j - 1] / r);
  }
  fft::inverse_nd(data, f.extents);
  PeriodicGrid out{f.extents, f.half_width, Eigen::VectorXd(f.size())};
  for (long i = 0; i < f.size(); ++i) out.samples[i] = data[static_cast<std::size_t>(i)].real();
  return out;
}

double riesz_power_constant(int m, int d) {
  if (m < 1 || m % 2 == 0) throw Error(ErrorKind::InvalidArgument, "Riesz power constant is defined for odd m >= 1");
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be >= 1");
  return std::exp(std::log(2.0) + std::lgamma(0.5 * (m + d)) - std::lgamma(0.5 * d) - std::lgamma(0.5 * m));
}

}  // namespace hilbertlab
