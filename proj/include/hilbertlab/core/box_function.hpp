#pragma once

#include <vector>

#include "hilbertlab/core/normed_space.hpp"

namespace hilbertlab {

/// Axis-aligned box [lo, hi) in R^d with a constant vector value.
struct Box {
  Vector lo;
  Vector hi;
  Vector value;
};

/// Step function on R^d: a finite sum of box indicators.
class BoxFunction {
 public:
  BoxFunction(int d, NormedSpace space, std::vector<Box> boxes = {});

  static BoxFunction unit_cube(int d, double value = 1.0);

  int ambient_dim() const { return d_; }
  const NormedSpace& space() const { return space_; }
  const std::vector<Box>& boxes() const { return boxes_; }

  Vector operator()(const Vector& x) const;
  /// True when x lies on the boundary of some box (within tol).
  bool on_face(const Vector& x, double tol = 1e-14) const;

 private:
  int d_;
  NormedSpace space_;
  std::vector<Box> boxes_;
};

}  // namespace hilbertlab
