#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "hilbertlab/numerics/quadrature.hpp"
#include "hilbertlab/transforms/directional.hpp"
#include "hilbertlab/transforms/operator_kind.hpp"
#include "hilbertlab/transforms/periodic.hpp"
#include "hilbertlab/transforms/real_line.hpp"

using namespace hilbertlab;
using doctest::Approx;

namespace {

Eigen::VectorXd torus_samples(long n, double (*fn)(double)) {
  Eigen::VectorXd v(n);
  for (long i = 0; i < n; ++i) v[i] = fn(-kPi + kTwoPi * i / n);
  return v;
}

Matrix rotation2(double a) {
  Matrix A(2, 2);
  A << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
  return A;
}

}  // namespace

TEST_CASE("periodic closed form examples") {
  const auto f = PiecewiseFunction::indicator(Domain::Torus, 0.0, kPi);
  CHECK(std::abs(periodic_hilbert_step(f, -kPi / 2)[0]) <= 1e-15);
  const auto one = PiecewiseFunction::indicator(Domain::Torus, -kPi, kPi);
  for (double t : {-2.0, 0.1, 3.0}) CHECK(std::abs(periodic_hilbert_step(one, t)[0]) <= 1e-15);
  const auto q = PiecewiseFunction::indicator(Domain::Torus, 0.0, kPi / 2);
  CHECK(periodic_hilbert_step(q, kPi)[0] == Approx(std::log(std::sqrt(2.0)) / kPi).epsilon(1e-14));
  CHECK_THROWS_AS(periodic_hilbert_step(f, 0.0), Error);
  CHECK_THROWS_AS(periodic_hilbert_step(PiecewiseFunction::indicator(Domain::RealLine, 0, 1), 2.0), Error);
}

TEST_CASE("FFT conjugate function") {
  const long n = 256;
  const Eigen::VectorXd c = torus_samples(n, [](double t) { return std::cos(t); });
  const Eigen::VectorXd s = torus_samples(n, [](double t) { return std::sin(t); });
  CHECK((periodic_hilbert_fft(c) - s).cwiseAbs().maxCoeff() <= 1e-12);
  const Eigen::VectorXd s3 = torus_samples(n, [](double t) { return std::sin(3 * t); });
  const Eigen::VectorXd c3 = torus_samples(n, [](double t) { return std::cos(3 * t); });
  CHECK((periodic_hilbert_fft(s3) + c3).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(periodic_hilbert_fft(Eigen::VectorXd::Constant(n, 2.5)).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK_THROWS_AS(periodic_hilbert_fft(Eigen::VectorXd::Ones(100)), Error);

  // H(H f) = -(f - mean f) and Parseval on random data.
  std::mt19937_64 gen(5);
  std::normal_distribution<double> n01;
  Eigen::VectorXd f(512);
  for (auto& v : f) v = n01(gen);
  f[256] = 0.0;  // keep the Nyquist mode from mattering below
  const Eigen::VectorXd hf = periodic_hilbert_fft(f);
  const Eigen::VectorXd hhf = periodic_hilbert_fft(hf);
  // Strip the Nyquist mode of f before comparing.
  Eigen::VectorXd alt(512);
  for (long i = 0; i < 512; ++i) alt[i] = (i % 2 ? -1.0 : 1.0);
  const Eigen::VectorXd centred = f.array() - f.mean();
  const Eigen::VectorXd band = centred - alt * (alt.dot(centred) / 512.0);
  CHECK((hhf + band).cwiseAbs().maxCoeff() <= 1e-10);
  CHECK(std::abs(hf.norm() - band.norm()) <= 1e-10 * band.norm());

  const GridFunction g = GridFunction::torus(c);
  CHECK((periodic_hilbert_fft(g).samples.col(0) - s).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("closed form agrees with FFT away from breakpoints") {
  // Breakpoints on the dyadic grid; cell averages give the jump samples the
  // midpoint value. The excluded zone is 4 cells of the 1024 grid at both sizes.
  const auto f = PiecewiseFunction::scalar(Domain::Torus, {{-kPi / 2, 0.0, -1.0}, {0.0, kPi / 2, 1.0}, {3 * kPi / 4, kPi, 0.5}});
  const double zone = 4 * kTwoPi / 1024;
  auto discrepancy = [&](long n) {
    const GridFunction g = cell_average(f, n);
    const Eigen::VectorXd h = periodic_hilbert_fft(g.scalar_values());
    double worst = 0.0;
    for (long i = 0; i < n; ++i) {
      const double t = g.point(i);
      bool near = false;
      for (double b : f.breakpoints()) near = near || std::abs(std::remainder(t - b, kTwoPi)) <= zone;
      if (near) continue;
      worst = std::max(worst, std::abs(h[i] - periodic_hilbert_step(f, t)[0]));
    }
    return worst;
  };
  const double e1 = discrepancy(1024), e2 = discrepancy(2048);
  CHECK(e1 <= 5e-2);
  CHECK(e2 < e1);
}

TEST_CASE("cell averages") {
  const auto f = PiecewiseFunction::scalar(Domain::Torus, {{-3.0, -0.2, 1.0}, {0.3, 3.1, -2.0}});
  const GridFunction g = cell_average(f, 64);
  CHECK(g.scalar_values().sum() * g.spacing == Approx(f.integral()[0]).epsilon(1e-13));
  const GridFunction w = cell_average(PiecewiseFunction::indicator(Domain::Torus, -kPi, kPi), 16);
  CHECK((w.scalar_values().array() - 1.0).abs().maxCoeff() <= 1e-14);
}

TEST_CASE("periodic cell kernel is antisymmetric") {
  const Eigen::VectorXd k = periodic_hilbert_cell_kernel(64);
  CHECK(std::abs(k[0]) <= 1e-15);
  for (long i = 1; i < 64; ++i) CHECK(k[i] == Approx(-k[64 - i]).epsilon(1e-12));
}

TEST_CASE("real line examples and covariance") {
  const auto f = PiecewiseFunction::indicator(Domain::RealLine, 0.0, 1.0);
  CHECK(real_hilbert_step(f, 2.0)[0] == Approx(std::log(2.0) / kPi).epsilon(1e-15));
  CHECK(real_hilbert_step(f, 2.0)[0] == Approx(0.22064).epsilon(1e-5));
  const auto sym = PiecewiseFunction::indicator(Domain::RealLine, -1.0, 1.0);
  CHECK(std::abs(real_hilbert_step(sym, 0.0)[0]) <= 1e-15);
  const auto g = PiecewiseFunction::scalar(Domain::RealLine, {{-1.0, 0.0, -1.0}, {0.0, 1.0, 1.0}});
  CHECK(real_hilbert_step(g, 2.0)[0] == Approx((std::log(2.0) - std::log(1.5)) / kPi).epsilon(1e-14));
  CHECK_THROWS_AS(real_hilbert_step(f, 1.0), Error);

  // f(eps .) transformed at t equals (H f)(eps t).
  const auto h = PiecewiseFunction::scalar(Domain::RealLine, {{-0.7, 0.2, 2.0}, {0.9, 1.6, -0.5}});
  for (double eps : {0.25, 3.0})
    for (double t : {-1.3, 0.5, 2.2})
      CHECK(real_hilbert_step(h.dilated(eps), t)[0] == Approx(real_hilbert_step(h, eps * t)[0]).epsilon(1e-12));
  // Translation equivariance.
  for (double t : {-1.3, 0.5, 2.2})
    CHECK(real_hilbert_step(h.translated(0.37), t + 0.37)[0] == Approx(real_hilbert_step(h, t)[0]).epsilon(1e-12));
}

TEST_CASE("discrete examples") {
  CHECK(discrete_hilbert(PiecewiseFunction::delta(0), 3)[0] == Approx(1.0 / (3 * kPi)).epsilon(1e-15));
  CHECK(discrete_hilbert(PiecewiseFunction::delta(0), 0)[0] == 0.0);
  const auto f = PiecewiseFunction::delta(0) + PiecewiseFunction::delta(1);
  CHECK(discrete_hilbert(f, 2)[0] == Approx(1.5 / kPi).epsilon(1e-15));
  const auto g = PiecewiseFunction::delta(-2, 1.5) + PiecewiseFunction::delta(4, -0.5);
  for (long t : {-5L, 0L, 3L}) CHECK(discrete_hilbert(g.translated(7), t + 7)[0] == Approx(discrete_hilbert(g, t)[0]));
  const Eigen::VectorXd k = discrete_hilbert_kernel(4);
  CHECK(k[3] == 0.0);
  CHECK(k[4] == Approx(1.0 / kPi));
  CHECK(k[2] == Approx(-1.0 / kPi));
}

TEST_CASE("semidiscrete operator") {
  const auto f = PiecewiseFunction::indicator(Domain::RealLine, 0.0, 1.0);
  // Lattice points 2.5 - k in [0, 1): only k = 2.
  CHECK(semidiscrete_hilbert(f, 1.0, 2.5)[0] == Approx(1.0 / (2 * kPi)).epsilon(1e-14));
  const auto g = PiecewiseFunction::indicator(Domain::RealLine, -0.4, 0.3, -2.0);
  CHECK(semidiscrete_hilbert(f * 2.0 + g, 0.1, 0.77)[0] ==
        Approx(2.0 * semidiscrete_hilbert(f, 0.1, 0.77)[0] + semidiscrete_hilbert(g, 0.1, 0.77)[0]).epsilon(1e-12));
  const double exact = std::log(2.0) / kPi;
  CHECK(std::abs(semidiscrete_hilbert(f, 1e-3, 2.0)[0] - exact) <= 0.01);
  // First order: the error halves with eps. Offset t from the lattice so the
  // comparison is not hitting special alignments.
  const double t = 2.0 + 1.0 / 3.0;
  const double e1 = std::abs(semidiscrete_hilbert(f, 1e-2, t)[0] - real_hilbert_step(f, t)[0]);
  const double e2 = std::abs(semidiscrete_hilbert(f, 5e-3, t)[0] - real_hilbert_step(f, t)[0]);
  CHECK(e1 / e2 == Approx(2.0).epsilon(0.25));
  CHECK_THROWS_AS(semidiscrete_hilbert(f, 0.0, 2.0), Error);
}

TEST_CASE("half-line operator T") {
  CHECK(hilbert_operator_T(PiecewiseFunction::indicator(Domain::RealLine, 0, 1), 1.0)[0] ==
        Approx(std::log(2.0) / kPi).epsilon(1e-15));
  CHECK(hilbert_operator_T(PiecewiseFunction::indicator(Domain::RealLine, 1, 2), 2.0)[0] ==
        Approx(std::log(4.0 / 3.0) / kPi).epsilon(1e-15));
  const PiecewiseFunction zero(Domain::RealLine, NormedSpace::scalar());
  CHECK(hilbert_operator_T(zero, 1.0)[0] == 0.0);
  CHECK_THROWS_AS(hilbert_operator_T(PiecewiseFunction::indicator(Domain::RealLine, 0, 1), 0.0), Error);

  // Box version in d = 1 matches the closed form.
  BoxFunction b(1, NormedSpace::scalar(), {{Vector::Constant(1, 1.0), Vector::Constant(1, 2.0), Vector::Constant(1, 1.0)}});
  CHECK(hilbert_operator_T(b, Vector::Constant(1, 2.0), 1)[0] == Approx(std::log(4.0 / 3.0) / kPi).epsilon(1e-8));
  // d = 2: the transverse variable integrates out to the d = 1 kernel when the
  // box is a full strip; check a wide strip approaches it.
  BoxFunction strip(2, NormedSpace::scalar(),
                    {{(Vector(2) << 0.0, -200.0).finished(), (Vector(2) << 1.0, 200.0).finished(), Vector::Constant(1, 1.0)}});
  const double v = hilbert_operator_T(strip, (Vector(2) << 1.0, 0.0).finished(), 1, 1e-9)[0];
  CHECK(v == Approx(std::log(2.0) / kPi).epsilon(1e-2));
}

TEST_CASE("directional transform") {
  const auto f1 = PiecewiseFunction::scalar(Domain::RealLine, {{-0.5, 0.25, 1.5}, {1.0, 2.0, -1.0}});
  BoxFunction b1(1, NormedSpace::scalar(),
                 {{Vector::Constant(1, -0.5), Vector::Constant(1, 0.25), Vector::Constant(1, 1.5)},
                  {Vector::Constant(1, 1.0), Vector::Constant(1, 2.0), Vector::Constant(1, -1.0)}});
  for (double t : {-2.0, 0.0, 0.6, 3.1})
    CHECK(directional_hilbert(b1, Vector::Constant(1, 1.0), Vector::Constant(1, t))[0] ==
          Approx(real_hilbert_step(f1, t)[0]).epsilon(1e-14));

  const BoxFunction sq = BoxFunction::unit_cube(2);
  Vector x(2), e1(2);
  x << 2.0, 0.5;
  e1 << 1.0, 0.0;
  CHECK(directional_hilbert(sq, e1, x)[0] == Approx(std::log(2.0) / kPi).epsilon(1e-14));
  Vector th(2);
  th << std::cos(0.3), std::sin(0.3);
  CHECK(directional_hilbert(sq, Vector(-th), x)[0] == Approx(-directional_hilbert(sq, th, x)[0]).epsilon(1e-14));
  Vector face(2);
  face << 1.0, 0.5;
  CHECK_THROWS_AS(directional_hilbert(sq, th, face), Error);
  Vector along(2);
  along << 0.0, 1.0;
  Vector onedge(2);
  onedge << 1.0, 3.0;
  CHECK_THROWS_AS(directional_hilbert(sq, along, onedge), Error);
}

TEST_CASE("Gaussian bump closed form against quadrature") {
  GaussianBump g;
  g.mean = (Vector(2) << 0.3, -0.2).finished();
  g.precision = (Matrix(2, 2) << 2.0, 0.5, 0.5, 1.0).finished();
  g.amplitude = 1.7;
  const Vector x = (Vector(2) << 0.5, 0.8).finished();
  for (double a : {0.0, 0.7, 2.0}) {
    const Vector th = (Vector(2) << std::cos(a), std::sin(a)).finished();
    // Odd part of the kernel: (1/pi) int_0^inf (g(x - t th) - g(x + t th)) / t dt.
    auto integrand = [&](double t) {
      if (t == 0.0) return 0.0;
      return (g(Vector(x - t * th)) - g(Vector(x + t * th))) / t;
    };
    const double ref = quad::adaptive(integrand, 0.0, 40.0, 1e-13).value / kPi;
    CHECK(g.directional_hilbert(th, x) == Approx(ref).epsilon(1e-9));
  }
}

TEST_CASE("rotation equivariance") {
  const GaussianBump g = [] {
    GaussianBump b;
    b.mean = (Vector(2) << 0.4, -0.1).finished();
    b.precision = (Matrix(2, 2) << 3.0, 0.4, 0.4, 1.5).finished();
    return b;
  }();
  std::mt19937_64 gen(9);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix A = rotation2(ang(gen));
    const double a = ang(gen);
    const Vector th = (Vector(2) << std::cos(a), std::sin(a)).finished();
    const Vector x = (Vector(2) << ang(gen) / 3, ang(gen) / 3).finished();
    // H_{A th} f(x) = H_th (f o A)(A^{-1} x)
    const double lhs = g.directional_hilbert(Vector(A * th), x);
    const double rhs = g.composed_with(A).directional_hilbert(th, Vector(A.transpose() * x));
    CHECK(lhs == Approx(rhs).epsilon(1e-12));
  }
  // Boxes under the quarter turn stay boxes.
  const Matrix Q = rotation2(kPi / 2);
  BoxFunction f(2, NormedSpace::scalar(),
                {{(Vector(2) << 0.0, 0.0).finished(), (Vector(2) << 2.0, 1.0).finished(), Vector::Constant(1, 1.0)}});
  // f o Q: Q y in [0,2)x[0,1)  <=>  y in [0,1) x (-2,0].
  BoxFunction fq(2, NormedSpace::scalar(),
                 {{(Vector(2) << 0.0, -2.0).finished(), (Vector(2) << 1.0, 0.0).finished(), Vector::Constant(1, 1.0)}});
  const Vector th = (Vector(2) << std::cos(0.4), std::sin(0.4)).finished();
  const Vector x = (Vector(2) << 2.7, -0.6).finished();
  CHECK(directional_hilbert(f, Vector(Q * th), x)[0] ==
        Approx(directional_hilbert(fq, th, Vector(Q.transpose() * x))[0]).epsilon(1e-12));
}

TEST_CASE("sphere quadrature") {
  for (int n : {8, 64}) {
    const auto c = SphereQuadrature::make(2, n);
    double s = 0.0;
    for (double w : c.weights) s += w;
    CHECK(s == Approx(kTwoPi).epsilon(1e-14));
    const auto sp = SphereQuadrature::make(3, n);
    s = 0.0;
    for (double w : sp.weights) s += w;
    CHECK(s == Approx(4 * kPi).epsilon(1e-13));
    for (const auto& v : sp.nodes) CHECK(v.norm() == Approx(1.0).epsilon(1e-14));
  }
  CHECK_THROWS_AS(SphereQuadrature::make(4, 8), Error);
}

TEST_CASE("Riesz transforms") {
  CHECK(std::abs(riesz_power_constant(1, 2) - 1.0) <= 1e-12);
  CHECK(riesz_power_constant(1, 1) == Approx(2.0 / kPi).epsilon(1e-14));
  CHECK_THROWS_AS(riesz_power_constant(2, 2), Error);
  // Growth like m^{d/2}.
  for (int d : {1, 2, 3, 5}) {
    const double r = riesz_power_constant(401, d) / riesz_power_constant(201, d);
    CHECK(r == Approx(std::pow(401.0 / 201.0, 0.5 * d)).epsilon(0.02));
  }

  // Even data in coordinate j about x: zero.
  const BoxFunction sq = BoxFunction::unit_cube(2);
  const Vector mid = (Vector(2) << 0.5, 3.0).finished();
  CHECK(std::abs(riesz_rotations(sq, 1, mid, 64).value) <= 1e-12);

  // Linearity in f.
  BoxFunction two(2, NormedSpace::scalar(),
                  {{Vector::Zero(2), Vector::Ones(2), Vector::Constant(1, 2.0)}});
  const Vector x = (Vector(2) << 1.7, 0.35).finished();
  CHECK(riesz_rotations(two, 1, x, 64).value == Approx(2.0 * riesz_rotations(sq, 1, x, 64).value).epsilon(1e-13));

  // Rotations against the multiplier oracle on a bump.
  const GaussianBump g = GaussianBump::isotropic(2, 0.5);
  const PeriodicGrid grid = PeriodicGrid::sample(g, {256, 256}, 16.0);
  for (int j : {1, 2}) {
    const PeriodicGrid r = riesz_multiplier(grid, j);
    for (long idx : {128L * 256 + 136, 140L * 256 + 128, 133L * 256 + 131}) {
      const Vector p = grid.point(idx);
      const RieszValue rv = riesz_rotations(g, j, p, 256);
      CHECK(std::abs(rv.value - r.samples[idx]) <= 1e-3);
      const RieszValue rv2 = riesz_rotations(g, j, p, 512);
      CHECK(std::abs(rv2.value - rv.value) <= rv.error_estimate + 1e-14);
    }
  }

  // Multiplier: single mode, non-expansive, R1 + R2 bound.
  PeriodicGrid wave{{64, 64}, kPi, Eigen::VectorXd(64 * 64)};
  for (long i = 0; i < wave.size(); ++i) wave.samples[i] = std::cos(3.0 * wave.point(i)[0]);
  const PeriodicGrid rw = riesz_multiplier(wave, 1);
  double err = 0.0;
  for (long i = 0; i < wave.size(); ++i) err = std::max(err, std::abs(rw.samples[i] - std::sin(3.0 * wave.point(i)[0])));
  CHECK(err <= 1e-12);
  CHECK(riesz_multiplier(wave, 2).samples.cwiseAbs().maxCoeff() <= 1e-12);

  std::mt19937_64 gen(21);
  std::normal_distribution<double> n01;
  PeriodicGrid noise{{32, 16}, 2.0, Eigen::VectorXd(32 * 16)};
  for (auto& v : noise.samples) v = n01(gen);
  CHECK(riesz_multiplier(noise, 1).samples.norm() <= noise.samples.norm() * (1 + 1e-14));
  PeriodicGrid noise3{{8, 8, 8}, 1.0, Eigen::VectorXd(512)};
  for (auto& v : noise3.samples) v = n01(gen);
  CHECK(riesz_multiplier(noise3, 3).samples.norm() <= noise3.samples.norm() * (1 + 1e-14));
  const Eigen::VectorXd sum = riesz_multiplier(grid, 1).samples + riesz_multiplier(grid, 2).samples;
  CHECK(sum.norm() <= std::sqrt(2.0) * grid.samples.norm());
  CHECK_THROWS_AS(riesz_multiplier(PeriodicGrid{{12, 16}, 1.0, Eigen::VectorXd::Zero(192)}, 1), Error);
}

TEST_CASE("operator kinds") {
  for (const char* name : {"ht", "hr", "hdis", "hsemi", "dir", "tj", "riesz", "riesz-fft"})
    CHECK(to_string(parse_operator_tag(name)) == name);
  CHECK_THROWS_AS(parse_operator_tag("hx"), Error);
  CHECK_THROWS_AS(OperatorKind::semidiscrete(0.0).validate(), Error);
  CHECK_THROWS_AS(OperatorKind::directional((Vector(2) << 1.0, 1.0).finished()).validate(), Error);
  CHECK_THROWS_AS(OperatorKind::operator_tj(2, 3).validate(), Error);
  CHECK_NOTHROW(OperatorKind::riesz_rotations(3, 2, 64).validate());
}
