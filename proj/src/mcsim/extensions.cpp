#include "hilbertlab/mcsim/extensions.hpp"

#include <cmath>

namespace hilbertlab {

namespace {

void check_disc(const PiecewiseFunction& f, Point2 z) {
  if (f.domain() != Domain::Torus) throw Error(ErrorKind::Domain, "extensions take Torus boundary data");
  if (!(std::abs(z) < 1.0)) throw Error(ErrorKind::Domain, "extension point must lie in the open unit disc");
}

}  // namespace

Vector poisson_extension(const PiecewiseFunction& f, Point2 z) {
  check_disc(f, z);
  Vector out = f.zero();
  for (const Piece& p : f.pieces()) {
    const double len = p.hi - p.lo;
    if (len >= kTwoPi) {
      out += p.value;
      continue;
    }
    double angle = std::arg((std::polar(1.0, p.hi) - z) / (std::polar(1.0, p.lo) - z));
    if (angle < 0.0) angle += kTwoPi;
    out += (angle / kPi - len / kTwoPi) * p.value;
  }
  return out;
}

Vector conjugate_extension(const PiecewiseFunction& f, Point2 z) {
  check_disc(f, z);
  Vector out = f.zero();
  if (z == Point2(0.0, 0.0)) return out;
  for (const Piece& p : f.pieces()) {
    if (p.hi - p.lo >= kTwoPi) continue;
    const double ratio = std::abs(std::polar(1.0, p.hi) - z) / std::abs(std::polar(1.0, p.lo) - z);
    out -= (std::log(ratio) / kPi) * p.value;
  }
  return out;
}

}  // namespace hilbertlab
