#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "hilbertlab/core/box_function.hpp"
#include "hilbertlab/core/piecewise_function.hpp"

namespace hilbertlab {

// Line-oriented step-function format.
//
//   <domain>; <q>; <n>;
//   a b v1 ... vn          (Torus, RealLine)
//   k v1 ... vn            (Integers)
//   a1 b1 ... ad bd v1 ... vn   (Box<d>, e.g. "Box2")
//
// Blank lines and text after '#' are ignored. q may be "inf". Endpoints accept
// plain numbers and the forms pi, -pi, pi/4, 3*pi, -3*pi/4.

using StepInput = std::variant<PiecewiseFunction, BoxFunction>;

StepInput read_step_function(std::istream& in);
StepInput read_step_function_file(const std::string& path);
PiecewiseFunction read_piecewise(std::istream& in);

void write_step_function(std::ostream& out, const PiecewiseFunction& f);
void write_step_function(std::ostream& out, const BoxFunction& f);

/// Parses a real number or a multiple of pi.
double parse_real(const std::string& token);

}  // namespace hilbertlab
