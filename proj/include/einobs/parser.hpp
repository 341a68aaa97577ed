#pragma once

// Textual connected-sum expressions:
//
//   Expr  := Term ('#' Term)*
//   Term  := [Nat '*'] Block
//   Block := 'CP2' | '~CP2' | 'S1xS3' | 'K3' | 'S4'
//          | 'Chen(' Int ',' Int ')'
//          | 'Custom(' Name ',' Int ',' Int ',' Nat ')'
//
// Whitespace is allowed between tokens. Errors are SyntaxError with the
// byte offset of the offending token.

#include <string>
#include <string_view>

#include "einobs/manifold.hpp"

namespace einobs {

ManifoldExpr parse(std::string_view text);

// Canonical form: equal blocks merged, fixed block order
// (Chen, K3, CP2, ~CP2, S1xS3, S4, Custom), "n*Block" for n >= 2.
std::string format(const ManifoldExpr& expr);

}  // namespace einobs
