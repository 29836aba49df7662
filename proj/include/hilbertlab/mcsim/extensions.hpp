#pragma once

#include <complex>

#include "hilbertlab/core/piecewise_function.hpp"

namespace hilbertlab {

using Point2 = std::complex<double>;

/// Poisson integral of a Torus step function at |z| < 1. Per piece [a, b):
///   -(b - a)/(2pi) + (1/pi) arg((e^{ib} - z)/(e^{ia} - z)),  arg in [0, 2pi),
/// the harmonic measure of the arc seen from z.
Vector poisson_extension(const PiecewiseFunction& f, Point2 z);

/// Conjugate Poisson integral, zero at the origin. Per piece [a, b):
///   -(1/pi) log|(e^{ib} - z)/(e^{ia} - z)|,
/// whose boundary values are the periodic Hilbert transform.
Vector conjugate_extension(const PiecewiseFunction& f, Point2 z);

}  // namespace hilbertlab
