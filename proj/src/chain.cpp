#include "fumine/chain.hpp"

#include <algorithm>
#include <numeric>

namespace fumine {

std::span<const ChainElement> FuzzyUtilityChain::elements(
    std::size_t head_idx) const {
  return {elements_.data() + offsets_[head_idx],
          offsets_[head_idx + 1] - offsets_[head_idx]};
}

Money FuzzyUtilityChain::pattern_fu() const {
  Money total = 0.0;
  for (std::size_t h = 0; h < head_.size(); ++h) {
    Money best = 0.0;
    for (const auto& e : elements(h)) best = std::max(best, e.fu);
    total += best;
  }
  return total;
}

Money FuzzyUtilityChain::sdfu_total() const {
  Money total = 0.0;
  for (const auto& h : head_) total += h.sdfu;
  return total;
}

void FuzzyUtilityChain::append_sequence(HeadEntry entry,
                                        std::vector<ChainElement> elems) {
  if (elems.empty()) return;
  if (!head_.empty() && entry.sid <= head_.back().sid) {
    throw ValidationError("chain heads must ascend by sid");
  }
  head_.push_back(entry);
  elements_.insert(elements_.end(), elems.begin(), elems.end());
  offsets_.push_back(static_cast<std::uint32_t>(elements_.size()));
}

namespace {

// Per-sequence SDFU: best fu + mrfu over the extension positions, counting
// only positions that still have something after them.
Money sequence_sdfu(const std::vector<ChainElement>& elems) {
  Money best = 0.0;
  for (const auto& e : elems) {
    if (e.mrfu > 0.0) best = std::max(best, e.fu + e.mrfu);
  }
  return best;
}

}  // namespace

std::map<FItem, FuzzyUtilityChain> build_initial_chains(
    const FMatrixSet& fms, const MembershipFunction& mf) {
  std::vector<std::uint32_t> order(fms.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return fms.matrix_at(a).sid() < fms.matrix_at(b).sid();
  });
  std::map<FItem, FuzzyUtilityChain> chains;
  std::map<FItem, std::vector<ChainElement>> per_item;
  for (std::uint32_t s : order) {
    const FMatrix& fm = fms.matrix_at(s);
    per_item.clear();
    for (std::size_t j = 0; j < fm.itemset_count(); ++j) {
      for (std::size_t idx = 0; idx < fm.cells_in(j); ++idx) {
        FCellView cell = fm.cell(j, idx);
        for (std::uint32_t k = 0; k < mf.region_count(); ++k) {
          if (cell.degrees[k] > 0.0) {
            per_item[FItem{cell.item, k}].push_back(
                ChainElement{{static_cast<std::uint32_t>(j + 1),
                              static_cast<std::uint32_t>(idx)},
                             cell.fu(k), cell.remaining});
          }
        }
      }
    }
    for (auto& [fi, elems] : per_item) {
      chains[fi].append_sequence(HeadEntry{fm.sid(), sequence_sdfu(elems), s},
                                 std::move(elems));
    }
  }
  return chains;
}

FuzzyUtilityChain project(const FSequence& prefix,
                          const FuzzyUtilityChain& chain, FItem ext,
                          ExtensionKind kind, const FMatrixSet& fms) {
  if (kind == ExtensionKind::I && ext.item <= prefix.last_item().item) {
    throw ValidationError(
        "I-extension item must exceed the prefix's last item");
  }
  FuzzyUtilityChain out;
  std::vector<ChainElement> elems;
  for (std::size_t h = 0; h < chain.sequence_count(); ++h) {
    const HeadEntry& head = chain.head()[h];
    const FMatrix& fm = fms.matrix_at(head.seq_index);
    elems.clear();
    if (kind == ExtensionKind::I) {
      // The extension must land in the anchor's own q-itemset, after the
      // anchor. A chain holds at most one anchor per itemset and the item
      // sits at most once in it, so no dedup is needed.
      for (const auto& e : chain.elements(h)) {
        std::size_t j0 = e.id.itemset_index - 1;
        auto pos = fm.find_item(j0, ext.item);
        if (!pos || *pos <= e.id.item_index) continue;
        FCellView cell = fm.cell(j0, *pos);
        if (!(cell.degrees[ext.region] > 0.0)) continue;
        elems.push_back(ChainElement{{e.id.itemset_index, *pos},
                                     e.fu + cell.fu(ext.region),
                                     cell.remaining});
      }
    } else {
      // S-extension: any occurrence strictly after some anchor's itemset.
      // Anchors ascend by itemset, so a running best prefix fu covers the
      // max over compatible anchors.
      auto anchors = chain.elements(h);
      std::size_t a = 0;
      Money best_prefix_fu = 0.0;
      std::uint32_t first = anchors.front().id.itemset_index;  // 1-based
      for (std::uint32_t j = first + 1; j <= fm.itemset_count(); ++j) {
        while (a < anchors.size() && anchors[a].id.itemset_index < j) {
          best_prefix_fu = std::max(best_prefix_fu, anchors[a].fu);
          ++a;
        }
        auto pos = fm.find_item(j - 1, ext.item);
        if (!pos) continue;
        FCellView cell = fm.cell(j - 1, *pos);
        if (!(cell.degrees[ext.region] > 0.0)) continue;
        elems.push_back(ChainElement{
            {j, *pos}, best_prefix_fu + cell.fu(ext.region), cell.remaining});
      }
    }
    if (!elems.empty()) {
      out.append_sequence(
          HeadEntry{head.sid, sequence_sdfu(elems), head.seq_index}, elems);
    }
  }
  return out;
}

}  // namespace fumine
