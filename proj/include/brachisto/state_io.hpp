#pragma once

#include <iosfwd>
#include <string>

#include "brachisto/state.hpp"

namespace brachisto {

// "AxB" or "AxBxC" with every local dimension >= 2, e.g. "2x2x2"
Shape parse_shape(const std::string& text);
std::string shape_name(const Shape& shape);

// One amplitude per line as "re im"; blank lines and '#' comments are
// skipped. Throws ParseError with a 1-based line number on malformed input
// or a count mismatch.
PureState read_state(std::istream& in, const Shape& shape);
PureState load_state_file(const std::string& path, const Shape& shape);

// locale-independent formatting with 17 significant digits
std::string format_double(double value);

}  // namespace brachisto
