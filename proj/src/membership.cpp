#include "fumine/membership.hpp"

#include <set>

namespace fumine {

MembershipFunction::MembershipFunction(
    std::vector<Region> regions, std::vector<std::vector<CurveVertex>> curves)
    : regions_(std::move(regions)), curves_(std::move(curves)) {
  if (regions_.empty()) throw ValidationError("membership needs >= 1 region");
  if (curves_.size() != regions_.size()) {
    throw ValidationError("one curve per region required");
  }
  std::set<std::string> labels;
  for (std::size_t k = 0; k < regions_.size(); ++k) {
    if (regions_[k].index != k) {
      throw ValidationError("region indices must be contiguous from 0");
    }
    if (!labels.insert(regions_[k].label).second) {
      throw ValidationError("duplicate region label '" + regions_[k].label +
                            "'");
    }
    const auto& curve = curves_[k];
    if (curve.empty()) throw ValidationError("empty membership curve");
    for (std::size_t v = 0; v < curve.size(); ++v) {
      if (curve[v].degree < 0.0 || curve[v].degree > 1.0) {
        throw ValidationError("membership degree outside [0,1]");
      }
      if (v > 0 && !(curve[v].utility > curve[v - 1].utility)) {
        throw ValidationError("curve breakpoints must strictly increase");
      }
    }
  }
}

std::optional<std::uint32_t> MembershipFunction::region_by_label(
    std::string_view label) const {
  for (const auto& r : regions_) {
    if (r.label == label) return r.index;
  }
  return std::nullopt;
}

double MembershipFunction::membership(std::uint32_t region,
                                      Money utility) const {
  const auto& curve = curves_.at(region);
  if (utility <= curve.front().utility) return curve.front().degree;
  if (utility >= curve.back().utility) return curve.back().degree;
  for (std::size_t v = 1; v < curve.size(); ++v) {
    if (utility <= curve[v].utility) {
      const auto& lo = curve[v - 1];
      const auto& hi = curve[v];
      double t = (utility - lo.utility) / (hi.utility - lo.utility);
      return lo.degree + t * (hi.degree - lo.degree);
    }
  }
  return curve.back().degree;  // unreachable
}

FuzzySet MembershipFunction::fuzzify(Money utility) const {
  FuzzySet degrees(region_count());
  for (std::uint32_t k = 0; k < region_count(); ++k) {
    degrees[k] = membership(k, utility);
  }
  return degrees;
}

}  // namespace fumine
