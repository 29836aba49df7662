#include "hilbertlab/transforms/operator_kind.hpp"

#include <array>
#include <cmath>
#include <utility>

namespace hilbertlab {

namespace {

constexpr std::array<std::pair<OperatorKind::Tag, const char*>, 8> kNames{{
    {OperatorKind::Tag::PeriodicHilbert, "ht"},
    {OperatorKind::Tag::RealHilbert, "hr"},
    {OperatorKind::Tag::DiscreteHilbert, "hdis"},
    {OperatorKind::Tag::SemidiscreteHilbert, "hsemi"},
    {OperatorKind::Tag::DirectionalHilbert, "dir"},
    {OperatorKind::Tag::HilbertOperatorTj, "tj"},
    {OperatorKind::Tag::RieszRotations, "riesz"},
    {OperatorKind::Tag::RieszMultiplier, "riesz-fft"},
}};

}  // namespace

OperatorKind OperatorKind::semidiscrete(double eps) {
  OperatorKind k = of(Tag::SemidiscreteHilbert);
  k.eps = eps;
  k.validate();
  return k;
}

OperatorKind OperatorKind::directional(Vector theta) {
  OperatorKind k = of(Tag::DirectionalHilbert);
  k.d = static_cast<int>(theta.size());
  k.theta = std::move(theta);
  k.validate();
  return k;
}

OperatorKind OperatorKind::operator_tj(int d, int j) {
  OperatorKind k = of(Tag::HilbertOperatorTj);
  k.d = d;
  k.j = j;
  k.validate();
  return k;
}

OperatorKind OperatorKind::riesz_rotations(int d, int j, int nodes) {
  OperatorKind k = of(Tag::RieszRotations);
  k.d = d;
  k.j = j;
  k.nodes = nodes;
  k.validate();
  return k;
}

OperatorKind OperatorKind::riesz_multiplier(int d, int j) {
  OperatorKind k = of(Tag::RieszMultiplier);
  k.d = d;
  k.j = j;
  k.validate();
  return k;
}

void OperatorKind::validate() const {
  if (!(eps > 0.0)) throw Error(ErrorKind::InvalidArgument, "eps must be positive");
  if (d < 1 || j < 1 || j > d) throw Error(ErrorKind::InvalidArgument, "index j must satisfy 1 <= j <= d");
  if (tag == Tag::DirectionalHilbert && std::abs(theta.norm() - 1.0) > 1e-12)
    throw Error(ErrorKind::InvalidArgument, "direction must be a unit vector");
  if (tag == Tag::RieszRotations && nodes < 2) throw Error(ErrorKind::InvalidArgument, "need at least 2 nodes");
}

std::string to_string(OperatorKind::Tag tag) {
  for (const auto& [t, name] : kNames)
    if (t == tag) return name;
  return "?";
}

OperatorKind::Tag parse_operator_tag(const std::string& name) {
  for (const auto& [t, n] : kNames)
    if (name == n) return t;
  throw Error(ErrorKind::Parse, "unknown operator '" + name + "'");
}

}  // namespace hilbertlab
