#pragma once

#include <string>
#include <string_view>

#include "c34/curve.hpp"

namespace c34 {

/// Curve files: one `key=value` per line with keys p, p2, p1, p0, q2, q1, q0
/// and decimal values; blank lines and `#` comments are skipped. Unknown or
/// repeated keys, missing keys and non-residues are Error{InvalidInput};
/// field and smoothness errors propagate.
Curve parse_curve(std::string_view text);
std::string format_curve(const Curve& curve);
Curve load_curve(const std::string& path);

}  // namespace c34
