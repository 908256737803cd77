#pragma once

#include "cbsg/body.hpp"

#include <string>
#include <string_view>

namespace cbsg {

// Body description in a small TOML subset:
//
//   [body]
//   kind = "polygon"
//   vertices = [["1", "1"], ["2", "1/2 + 1/10*sqrt(2)"], ["3/2", "0"]]
//
// circle: center, radius; segment: direction (integers), alpha, beta.
// Numbers may be quoted or bare. Throws ParseError.
ConvexBody2 parse_body_spec(std::string_view text);
ConvexBody2 load_body_spec(const std::string& path);

} // namespace cbsg
