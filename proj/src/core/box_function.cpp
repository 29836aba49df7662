#include "hilbertlab/core/box_function.hpp"

#include <cmath>

namespace hilbertlab {

BoxFunction::BoxFunction(int d, NormedSpace space, std::vector<Box> boxes)
    : d_(d), space_(space), boxes_(std::move(boxes)) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "ambient dimension must be >= 1");
  for (const Box& b : boxes_) {
    if (b.lo.size() != d || b.hi.size() != d)
      throw Error(ErrorKind::DimensionMismatch, "box corners must have the ambient dimension");
    space_.check(b.value);
    if (!(b.lo.array() < b.hi.array()).all()) throw Error(ErrorKind::InvalidArgument, "box needs lo < hi");
  }
}

BoxFunction BoxFunction::unit_cube(int d, double value) {
  return BoxFunction(d, NormedSpace::scalar(), {{Vector::Zero(d), Vector::Ones(d), Vector::Constant(1, value)}});
}

Vector BoxFunction::operator()(const Vector& x) const {
  Vector out = Vector::Zero(space_.dim());
  for (const Box& b : boxes_)
    if ((x.array() >= b.lo.array()).all() && (x.array() < b.hi.array()).all()) out += b.value;
  return out;
}

bool BoxFunction::on_face(const Vector& x, double tol) const {
  for (const Box& b : boxes_) {
    const bool inside_closure = ((x.array() >= b.lo.array() - tol) && (x.array() <= b.hi.array() + tol)).all();
    if (!inside_closure) continue;
    for (int i = 0; i < d_; ++i)
      if (std::abs(x[i] - b.lo[i]) <= tol || std::abs(x[i] - b.hi[i]) <= tol) return true;
  }
  return false;
}

}  // namespace hilbertlab
