#include "brachisto/state_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

namespace brachisto {

Shape parse_shape(const std::string& text) {
  Shape shape;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = text.find('x', pos);
    const std::string part =
        text.substr(pos, next == std::string::npos ? next : next - pos);
    int dim = 0;
    const auto [ptr, ec] =
        std::from_chars(part.data(), part.data() + part.size(), dim);
    if (ec != std::errc() || ptr != part.data() + part.size() || dim < 2) {
      throw ConfigError("bad shape '" + text + "' (expected e.g. 2x2 or 2x2x2)");
    }
    shape.push_back(dim);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (shape.empty()) throw ConfigError("empty shape");
  return shape;
}

std::string shape_name(const Shape& shape) {
  std::string out;
  for (std::size_t k = 0; k < shape.size(); ++k) {
    if (k > 0) out += 'x';
    out += std::to_string(shape[k]);
  }
  return out;
}

PureState read_state(std::istream& in, const Shape& shape) {
  const int dim = shape_dim(shape);
  Vector amps = Vector::Zero(dim);
  int count = 0;
  int line_number = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (count >= dim) {
      throw ParseError("more amplitudes than the shape allows", line_number);
    }
    std::istringstream fields(line);
    double re = 0.0, im = 0.0;
    if (!(fields >> re >> im)) {
      throw ParseError("expected two numbers 're im'", line_number);
    }
    std::string extra;
    if (fields >> extra) {
      throw ParseError("trailing content after 're im'", line_number);
    }
    amps(count++) = Complex(re, im);
  }
  if (count != dim) {
    throw ParseError("expected " + std::to_string(dim) + " amplitudes, got " +
                         std::to_string(count),
                     line_number);
  }
  return PureState(std::move(amps), shape);
}

PureState load_state_file(const std::string& path, const Shape& shape) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open state file '" + path + "'", 0);
  return read_state(in, shape);
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                       std::chars_format::general, 17);
  return std::string(buf, ptr);
}

}  // namespace brachisto
