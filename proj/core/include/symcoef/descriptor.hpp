#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "symcoef/legendre.hpp"

namespace symcoef {

/// Raised when a textual function descriptor cannot be parsed or names
/// invalid parameters.
class DescriptorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the textual function-descriptor grammar used by the CLI:
///
///   abs_pow(p=4)
///   two_norm_pow(p=4, dim=3)
///   p_norm_pow(p=4, dim=2)
///   pw_quad(a=1e-7, b=1)
///   sum(0.25*abs_pow(p=4), 0.75*abs_pow(p=1.3333333333333333))
///
/// Parameters are keyword-only and may appear in any order; `coeff` is an
/// optional extra keyword for the three power families (default 1).
/// Whitespace is ignored everywhere. Throws DescriptorError on malformed
/// input and std::invalid_argument on parameter-domain violations.
ReferenceFunction parse_descriptor(std::string_view text);

}  // namespace symcoef
