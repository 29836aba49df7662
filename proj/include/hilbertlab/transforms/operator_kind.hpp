#pragma once

#include <string>

#include "hilbertlab/core/normed_space.hpp"

namespace hilbertlab {

/// Tag plus parameters naming one of the singular integral operators.
struct OperatorKind {
  enum class Tag {
    PeriodicHilbert,      // H^T
    RealHilbert,          // H^R
    DiscreteHilbert,      // H^dis
    SemidiscreteHilbert,  // lattice sum with spacing eps
    DirectionalHilbert,   // H_theta on R^d
    HilbertOperatorTj,    // half-space T_j
    RieszRotations,       // R_j by sphere quadrature
    RieszMultiplier,      // R_j by FFT
  };

  Tag tag = Tag::PeriodicHilbert;
  double eps = 1.0;
  Vector theta;
  int d = 1;
  int j = 1;
  int nodes = 256;

  static OperatorKind of(Tag tag) {
    OperatorKind k;
    k.tag = tag;
    return k;
  }
  static OperatorKind periodic() { return of(Tag::PeriodicHilbert); }
  static OperatorKind real_line() { return of(Tag::RealHilbert); }
  static OperatorKind discrete() { return of(Tag::DiscreteHilbert); }
  static OperatorKind semidiscrete(double eps);
  static OperatorKind directional(Vector theta);
  static OperatorKind operator_tj(int d, int j);
  static OperatorKind riesz_rotations(int d, int j, int nodes);
  static OperatorKind riesz_multiplier(int d, int j);

  /// Throws InvalidArgument unless eps > 0, |theta| = 1 within 1e-12 and 1 <= j <= d.
  void validate() const;
};

/// Short CLI names: ht, hr, hdis, hsemi, dir, tj, riesz, riesz-fft.
std::string to_string(OperatorKind::Tag tag);
OperatorKind::Tag parse_operator_tag(const std::string& name);

}  // namespace hilbertlab
