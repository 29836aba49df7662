#pragma once

#include <memory>
#include <string>

#include <Eigen/Dense>

#include "hilbertlab/core/piecewise_function.hpp"
#include "hilbertlab/numerics/fft.hpp"
#include "hilbertlab/transforms/operator_kind.hpp"

namespace hilbertlab {

/// Square matrix acting on scalar sequences of a fixed length, with its transpose.
class LinearOperator {
 public:
  virtual ~LinearOperator() = default;
  virtual long size() const = 0;
  virtual Eigen::VectorXd apply(const Eigen::VectorXd& x) const = 0;
  virtual Eigen::VectorXd apply_adjoint(const Eigen::VectorXd& x) const = 0;
  virtual std::string name() const = 0;
  /// Domain the witness vectors live on.
  virtual Domain domain() const = 0;
};

class ToeplitzMatrix : public LinearOperator {
 public:
  ToeplitzMatrix(const Eigen::VectorXd& diagonals, std::string name, Domain domain);
  long size() const override { return op_.size(); }
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const override { return op_.apply(x); }
  Eigen::VectorXd apply_adjoint(const Eigen::VectorXd& x) const override { return op_.apply_transpose(x); }
  std::string name() const override { return name_; }
  Domain domain() const override { return domain_; }

 private:
  fft::ToeplitzOperator op_;
  std::string name_;
  Domain domain_;
};

class CirculantMatrix : public LinearOperator {
 public:
  CirculantMatrix(const Eigen::VectorXd& first_column, std::string name);
  long size() const override { return op_.size(); }
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const override { return op_.apply(x); }
  Eigen::VectorXd apply_adjoint(const Eigen::VectorXd& x) const override { return op_.apply_transpose(x); }
  std::string name() const override { return name_; }
  Domain domain() const override { return Domain::Torus; }

 private:
  fft::CirculantOperator op_;
  std::string name_;
};

/// The multiplier -i sgn(k) on n torus samples; the adjoint is its negative.
class SpectralPeriodicHilbert : public LinearOperator {
 public:
  explicit SpectralPeriodicHilbert(long n);
  long size() const override { return n_; }
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const override;
  Eigen::VectorXd apply_adjoint(const Eigen::VectorXd& x) const override { return -apply(x); }
  std::string name() const override { return "ht-fft"; }
  Domain domain() const override { return Domain::Torus; }

 private:
  long n_;
};

class DenseOperator : public LinearOperator {
 public:
  explicit DenseOperator(Eigen::MatrixXd a, std::string name = "dense");
  static DenseOperator identity(long n) { return DenseOperator(Eigen::MatrixXd::Identity(n, n), "identity"); }
  long size() const override { return a_.rows(); }
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const override { return a_ * x; }
  Eigen::VectorXd apply_adjoint(const Eigen::VectorXd& x) const override { return a_.transpose() * x; }
  std::string name() const override { return name_; }
  Domain domain() const override { return Domain::Integers; }

 private:
  Eigen::MatrixXd a_;
  std::string name_;
};

/// Size-n compressions used by the estimators. All are contractive images of
/// the full operator, so their p-norms bound the true norm from below.
///   PeriodicHilbert  cell averages on n equal arcs (Clausen circulant)
///   RealHilbert      cell averages on n unit cells (Toeplitz)
///   DiscreteHilbert  the n x n section of 1/(pi (s - t))
std::unique_ptr<LinearOperator> make_truncated_operator(OperatorKind::Tag tag, long n);

/// The torus grid operator: spectral multiplier on n = 2^k samples.
std::unique_ptr<LinearOperator> make_grid_operator(long n);

}  // namespace hilbertlab
