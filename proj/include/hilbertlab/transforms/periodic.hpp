#pragma once

#include "hilbertlab/core/grid_function.hpp"
#include "hilbertlab/core/piecewise_function.hpp"

namespace hilbertlab {

/// Conjugate function of a Torus step function at angle t:
///   (1/pi) sum_k x_k log| sin((t - a_k)/2) / sin((t - b_k)/2) |.
/// Throws SingularPoint when t is a breakpoint.
Vector periodic_hilbert_step(const PiecewiseFunction& f, double t);

/// Fourier multiplier -i sgn(k) on a power-of-two Torus grid. Mode 0 and the
/// unpaired Nyquist mode are mapped to zero.
GridFunction periodic_hilbert_fft(const GridFunction& f);
Eigen::VectorXd periodic_hilbert_fft(const Eigen::VectorXd& samples);

/// First column of the circulant matrix A_ij = (1/h) int_{cell i} H(1_{cell j}),
/// i.e. the periodic transform compressed onto n equal cells of [-pi, pi).
/// Entries are second differences of the Clausen function.
Eigen::VectorXd periodic_hilbert_cell_kernel(long n);

}  // namespace hilbertlab
