#include "moviepop/popularity.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "moviepop/errors.hpp"

namespace moviepop {

std::string_view to_string(PopularityClass c) {
  switch (c) {
    case PopularityClass::Excellent: return "Excellent";
    case PopularityClass::Average: return "Average";
    case PopularityClass::Poor: return "Poor";
    case PopularityClass::Terrible: return "Terrible";
  }
  return "Excellent";
}

std::optional<PopularityClass> popularity_from_string(std::string_view s) {
  for (auto c : kAllClasses) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

PopularityClass assign_class(Rating rating) {
  const int t = rating.tenths();
  if (t >= 75) return PopularityClass::Excellent;
  if (t >= 50) return PopularityClass::Average;
  if (t >= 25) return PopularityClass::Poor;
  return PopularityClass::Terrible;
}

PopularityClass assign_class(double rating) {
  if (!std::isfinite(rating)) throw DomainError("rating is not finite");
  auto tenths = std::llround(rating * 10.0);
  auto r = Rating::from_tenths(static_cast<int>(
      std::clamp<long long>(tenths, Rating::kMinTenths - 1, Rating::kMaxTenths + 1)));
  if (!r) throw DomainError(fmt::format("rating {} outside [1.0, 10.0]", rating));
  return assign_class(*r);
}

}  // namespace moviepop
