#include "alextop/rational.hpp"

#include <cstddef>

namespace alextop {

Rat parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const std::int64_t n = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Rat(n);
    }
    const std::int64_t n = std::stoll(text.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument(text);
    const std::string den = text.substr(slash + 1);
    const std::int64_t d = std::stoll(den, &used);
    if (used != den.size()) throw std::invalid_argument(text);
    return Rat(n, d);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
}

}  // namespace alextop
