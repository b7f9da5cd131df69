#pragma once

#include <string>

#include "zetareg/arith.hpp"

namespace zetareg {

/// %.17g; non-finite values become "nan", "inf" or "-inf".
std::string fmt17(double x);
/// As fmt17, but non-finite values become null.
std::string json_number(double x);
std::string json_string(const std::string& s);

}  // namespace zetareg
