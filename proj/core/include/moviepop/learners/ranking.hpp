#pragma once

#include <string>
#include <vector>

#include "moviepop/dataset.hpp"

namespace moviepop {

struct AttributeRank {
  std::size_t attribute = 0;  // schema index
  std::string name;
  double gain = 0;     // bits, best single threshold
  double percent = 0;  // gain / class entropy * 100
};

/// Information gain of every feature at its best threshold (no minimum
/// branch size), highest first; equal gains keep schema order.
std::vector<AttributeRank> rank_attributes(const Dataset& dataset);

}  // namespace moviepop
