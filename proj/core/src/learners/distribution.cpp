#include "moviepop/learners/distribution.hpp"

#include <cmath>

#include "moviepop/errors.hpp"

namespace moviepop {

double ClassDistribution::total() const {
  double t = 0;
  for (double w : weights) t += w;
  return t;
}

PopularityClass ClassDistribution::majority() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < weights.size(); ++i) {
    if (weights[i] > weights[best]) best = i;
  }
  return class_at(best);
}

std::size_t ClassDistribution::present_classes() const {
  std::size_t n = 0;
  for (double w : weights) n += w > 0 ? 1 : 0;
  return n;
}

bool ClassDistribution::pure() const { return present_classes() <= 1; }

double entropy_of(std::span<const double> weights) {
  double total = 0;
  for (double w : weights) total += w;
  if (total <= 0) return 0;
  double h = 0;
  for (double w : weights) {
    if (w > 0) {
      double p = w / total;
      h -= p * std::log2(p);
    }
  }
  return h;
}

double entropy(const ClassDistribution& dist) {
  if (!(dist.total() > 0)) throw DomainError("entropy of an empty distribution");
  return entropy_of(dist.weights);
}

}  // namespace moviepop
