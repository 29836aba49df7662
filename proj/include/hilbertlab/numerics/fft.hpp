#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace hilbertlab::fft {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Unnormalized forward DFT, X_k = sum_j x_j exp(-2 pi i jk/n).
ComplexVector forward(const ComplexVector& x);
ComplexVector forward(const Eigen::VectorXd& x);
/// Inverse DFT including the 1/n factor.
ComplexVector inverse(const ComplexVector& X);

/// Signed integer frequency of bin k in a length-n transform, in (-n/2, n/2].
inline long frequency(long k, long n) { return k <= n / 2 ? k : k - n; }

/// In-place multi-dimensional transform of a row-major array with the given
/// extents (last index fastest).
void forward_nd(ComplexVector& data, const std::vector<long>& extents);
void inverse_nd(ComplexVector& data, const std::vector<long>& extents);

/// y = T x for the Toeplitz matrix T_{ij} = c[i - j + n - 1], c of length 2n - 1,
/// via circulant embedding. Precompute once per kernel.
class ToeplitzOperator {
 public:
  explicit ToeplitzOperator(const Eigen::VectorXd& diagonals);
  long size() const { return n_; }
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
  Eigen::VectorXd apply_transpose(const Eigen::VectorXd& x) const;

 private:
  Eigen::VectorXd apply_with(const ComplexVector& spectrum, const Eigen::VectorXd& x) const;

  long n_;
  long m_;
  ComplexVector spectrum_;
  ComplexVector spectrum_t_;
};

/// y = C x for the circulant matrix C_{ij} = c[(i - j) mod n].
class CirculantOperator {
 public:
  explicit CirculantOperator(const Eigen::VectorXd& first_column);
  long size() const { return n_; }
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
  Eigen::VectorXd apply_transpose(const Eigen::VectorXd& x) const;

 private:
  long n_;
  ComplexVector spectrum_;
};

}  // namespace hilbertlab::fft
