#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "fumine/core.hpp"

namespace fumine {

struct FItem {
  ItemId item = 0;
  std::uint32_t region = 0;

  friend auto operator<=>(const FItem&, const FItem&) = default;
};

// Item ids strictly ascending, hence distinct.
using FItemset = std::vector<FItem>;

// A candidate or result pattern. `fu` is a cache the miners fill in; it is
// ignored by the structural comparison helpers below.
struct FSequence {
  std::vector<FItemset> itemsets;
  Money fu = 0.0;

  std::size_t length() const;  // total f-item count
  bool empty() const { return itemsets.empty(); }
  const FItem& last_item() const;

  static FSequence single(FItem fi);
  FSequence i_extended(FItem fi) const;  // append to the last f-itemset
  FSequence s_extended(FItem fi) const;  // open a new f-itemset
};

// Total order used for result determinism: shorter patterns first, then the
// flattened (item, region) pairs, then the itemset boundary layout.
std::strong_ordering compare_structure(const FSequence& a, const FSequence& b);
bool pattern_less(const FSequence& a, const FSequence& b);
bool pattern_equal(const FSequence& a, const FSequence& b);

}  // namespace fumine
