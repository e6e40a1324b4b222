#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fumine/core.hpp"

namespace fumine {

struct Region {
  std::uint32_t index = 0;  // contiguous from 0, declaration order
  std::string label;
};

struct CurveVertex {
  Money utility = 0.0;
  double degree = 0.0;  // in [0, 1]
};

// One fuzzy membership degree per region, aligned with the region order.
using FuzzySet = std::vector<double>;

// Piecewise-linear membership curves, one per linguistic region. Evaluation
// interpolates between vertices and clamps to the end vertices outside the
// breakpoint range.
class MembershipFunction {
 public:
  MembershipFunction(std::vector<Region> regions,
                     std::vector<std::vector<CurveVertex>> curves);

  std::size_t region_count() const { return regions_.size(); }
  const Region& region(std::uint32_t k) const { return regions_.at(k); }
  const std::vector<Region>& regions() const { return regions_; }
  const std::vector<CurveVertex>& curve(std::uint32_t k) const {
    return curves_.at(k);
  }
  std::optional<std::uint32_t> region_by_label(std::string_view label) const;

  double membership(std::uint32_t region, Money utility) const;
  FuzzySet fuzzify(Money utility) const;

 private:
  std::vector<Region> regions_;
  std::vector<std::vector<CurveVertex>> curves_;  // one per region
};

}  // namespace fumine
