#include "text.hpp"

#include <array>
#include <cmath>

namespace moviepop::text {

std::string format_number(double v) {
  if (v == 0) return "0";
  std::array<char, 64> buf{};
  if (std::abs(v) < 1e15 && v == std::trunc(v)) {
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(),
                                   static_cast<long long>(v));
    return std::string(buf.data(), ptr);
  }
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

}  // namespace moviepop::text
