#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "moviepop/ingest.hpp"

namespace moviepop {

/// The four popularity labels. Declaration order is the fixed label order
/// used everywhere (tables, matrices, tie breaks): Excellent ranks highest.
enum class PopularityClass : std::uint8_t { Excellent = 0, Average = 1, Poor = 2, Terrible = 3 };

inline constexpr std::size_t kClassCount = 4;
inline constexpr std::array<PopularityClass, kClassCount> kAllClasses{
    PopularityClass::Excellent, PopularityClass::Average, PopularityClass::Poor,
    PopularityClass::Terrible};

constexpr std::size_t index_of(PopularityClass c) { return static_cast<std::size_t>(c); }
constexpr PopularityClass class_at(std::size_t i) { return static_cast<PopularityClass>(i); }

std::string_view to_string(PopularityClass c);
std::optional<PopularityClass> popularity_from_string(std::string_view s);

/// Rating bins: Excellent 7.5-10, Average 5.0-7.4, Poor 2.5-4.9,
/// Terrible 1.0-2.4. The rating is rounded to one decimal first so the bins
/// partition the range. Throws DomainError outside [1.0, 10.0].
PopularityClass assign_class(double rating);
PopularityClass assign_class(Rating rating);

}  // namespace moviepop
