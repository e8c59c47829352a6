#pragma once

#include <string_view>

#include "dioph/exact_reals.hpp"
#include "dioph/geometry.hpp"
#include "dioph/words.hpp"

namespace dioph {

// Textual forms accepted by the CLI and config files.
//
//   real    := "cf:" cf | "word:" word | "sq:" real | "poly:" coeffs ":" real | "rat:" rational
//   cf      := "[" int [";" int {"," int}] ["|" word] "]"
//   word    := "fib(" a "," b ")" | "sturm(" cf "," a "," b ")"
//            | "per(" int {"," int} ")" | "expl(" int {"," int} ")"
//   coeffs  := rational {"," rational}          (c0 first)
//   conic   := "parabola" | "conic:poly:" c_xx "," c_xy "," c_yy "," c_x "," c_y "," c_1
//
// "cf:[a0;a1,...,ak]" is the finite expansion, "cf:[a0;a1,...|w]" continues
// with the letters of w, and "word:w" is shorthand for "cf:[0|w]".
// Whitespace is not allowed. Errors throw ParseError (or DomainError for
// well-formed input that breaks an invariant, e.g. fib(1,1)).
RealSpec parse_real_spec(std::string_view text);
WordSpec parse_word_spec(std::string_view text);
QuotientStream parse_cf(std::string_view text);
ConicForm parse_conic(std::string_view text);

}  // namespace dioph
