#pragma once

#include <string_view>

namespace wt {

/// Decimal literals ("0.25", "-1e-3") or rational multiples of pi:
/// "pi", "-pi/3", "3pi/4", "3*pi/4", "2*pi", "pi*3/4". Throws DomainError.
double parse_time(std::string_view text);

}  // namespace wt
