#pragma once

// Textual function specs:
//   threshold:n=<n>,theta=<t>
//   delta:n=<n>,theta=<t>
//   interval:n=<n>,a=<a>,b=<b>
//   union:n=<n>,intervals=<a1>-<b1>;<a2>-<b2>;...
//   levels:n=<n>,set=<k1>,<k2>,...
// parse_function_spec throws parse_error with the offending position;
// to_spec_string emits the canonical form (threshold/delta/interval/union).

#include <string>

#include "boolcomm/symfunc.hpp"

namespace boolcomm {

SymmetricFunction parse_function_spec(const std::string& spec);
std::string to_spec_string(const SymmetricFunction& f);

}  // namespace boolcomm
