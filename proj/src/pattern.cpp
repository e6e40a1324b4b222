#include "fumine/pattern.hpp"

namespace fumine {

std::size_t FSequence::length() const {
  std::size_t n = 0;
  for (const auto& x : itemsets) n += x.size();
  return n;
}

const FItem& FSequence::last_item() const {
  if (itemsets.empty() || itemsets.back().empty()) {
    throw ValidationError("empty f-sequence has no last item");
  }
  return itemsets.back().back();
}

FSequence FSequence::single(FItem fi) {
  FSequence fs;
  fs.itemsets.push_back({fi});
  return fs;
}

FSequence FSequence::i_extended(FItem fi) const {
  FSequence out;
  out.itemsets = itemsets;
  if (out.itemsets.empty()) throw ValidationError("cannot I-extend the empty pattern");
  out.itemsets.back().push_back(fi);
  return out;
}

FSequence FSequence::s_extended(FItem fi) const {
  FSequence out;
  out.itemsets = itemsets;
  out.itemsets.push_back({fi});
  return out;
}

std::strong_ordering compare_structure(const FSequence& a, const FSequence& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  // Flattened f-items, then the itemset layout as a tie break.
  std::size_t ia = 0, ja = 0, ib = 0, jb = 0;
  while (ia < a.itemsets.size() && ib < b.itemsets.size()) {
    const FItem& fa = a.itemsets[ia][ja];
    const FItem& fb = b.itemsets[ib][jb];
    if (auto c = fa <=> fb; c != 0) return c;
    if (++ja == a.itemsets[ia].size()) { ja = 0; ++ia; }
    if (++jb == b.itemsets[ib].size()) { jb = 0; ++ib; }
  }
  auto sizes = [](const FSequence& fs) {
    std::vector<std::size_t> out;
    out.reserve(fs.itemsets.size());
    for (const auto& x : fs.itemsets) out.push_back(x.size());
    return out;
  };
  auto sa = sizes(a);
  auto sb = sizes(b);
  if (sa < sb) return std::strong_ordering::less;
  if (sb < sa) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool pattern_less(const FSequence& a, const FSequence& b) {
  return compare_structure(a, b) < 0;
}

bool pattern_equal(const FSequence& a, const FSequence& b) {
  return compare_structure(a, b) == 0;
}

}  // namespace fumine
