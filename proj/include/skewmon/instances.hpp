#pragma once

#include "skewmon/bialgebroid.hpp"

namespace skewmon {

// The bundled desk-scale instances.
//   b1: R = k = H = F_2, everything trivial
//   b2: the group algebra F_3[C_2] as a bialgebra over k (Hopf)
//   b3: the monoid bialgebra F_3{1,x}, x^2 = x (not Hopf)
//   b4: the enveloping bialgebroid R^e over R = F_2 x F_2
BialgebroidRef instance_b1();
BialgebroidRef instance_b2();
BialgebroidRef instance_b3();
BialgebroidRef instance_b4();

AlgebraRef algebra_f2xf2();

// Single-entry corruption used by mutation tests and the CLI mutation gate.
enum class BgdComponent { base_mult, s_map, t_map, total_mult, total_unit, delta, counit };

const char* to_string(BgdComponent c);

RightBialgebroid mutate_entry(const RightBialgebroid& b, BgdComponent c, std::size_t i,
                              std::size_t j, std::int64_t bump = 1);

} // namespace skewmon
