#include "fumine/fuzzy.hpp"

#include <algorithm>

namespace fumine {

FuzzySet fuzzify(Money utility, const MembershipFunction& mf) {
  return mf.fuzzify(utility);
}

namespace {

const QItemset& itemset_at(const QSequence& qs, std::uint32_t j) {
  if (j < 1 || j > qs.itemsets.size()) {
    throw ValidationError("q-itemset index out of range");
  }
  return qs.itemsets[j - 1];
}

}  // namespace

Money fu_fitem(FItem fi, ExtensionAnchor at, const QSequence& qs,
               const UtilityTable& tbl, const MembershipFunction& mf) {
  const QItemset& qx = itemset_at(qs, at.itemset_index);
  if (at.item_index >= qx.size()) {
    throw ValidationError("anchor item index out of range");
  }
  const QItem& qi = qx.items[at.item_index];
  if (qi.item != fi.item) {
    throw ValidationError("anchor does not address the f-item's item");
  }
  Money u = utility_of_qitem(qi, tbl);
  return u * mf.membership(fi.region, u);
}

bool contains_itemset(const FItemset& fx, std::uint32_t j, const QSequence& qs,
                      const UtilityTable& tbl, const MembershipFunction& mf) {
  const QItemset& qx = itemset_at(qs, j);
  // Both sides ascend by item id, so the order-preserving injection exists
  // exactly when every f-item's id is present with positive degree.
  for (const FItem& fi : fx) {
    auto pos = qx.find(fi.item);
    if (!pos) return false;
    Money u = utility_of_qitem(qx.items[*pos], tbl);
    if (!(mf.membership(fi.region, u) > 0.0)) return false;
  }
  return true;
}

std::vector<InstancePosition> find_instances(const FSequence& fs,
                                             const QSequence& qs,
                                             const UtilityTable& tbl,
                                             const MembershipFunction& mf) {
  std::vector<InstancePosition> out;
  if (fs.itemsets.empty()) return out;
  const std::size_t m = fs.itemsets.size();
  const std::size_t n = qs.itemsets.size();
  std::vector<std::uint32_t> indices(m, 0);
  // DFS over strictly increasing q-itemset index tuples.
  std::size_t depth = 0;
  std::uint32_t next = 1;
  while (true) {
    if (next > n) {
      if (depth == 0) break;
      --depth;
      next = indices[depth] + 1;
      continue;
    }
    if (contains_itemset(fs.itemsets[depth], next, qs, tbl, mf)) {
      indices[depth] = next;
      if (depth + 1 == m) {
        out.push_back(InstancePosition{std::vector<std::uint32_t>(
            indices.begin(), indices.end())});
        ++next;
      } else {
        ++depth;
        next = indices[depth - 1] + 1;
      }
    } else {
      ++next;
    }
  }
  return out;
}

Money fu_fitemset_at(const FItemset& fx, std::uint32_t j, const QSequence& qs,
                     const UtilityTable& tbl, const MembershipFunction& mf) {
  if (!contains_itemset(fx, j, qs, tbl, mf)) {
    throw ValidationError("f-itemset not contained in the q-itemset");
  }
  const QItemset& qx = itemset_at(qs, j);
  Money total = 0.0;
  for (const FItem& fi : fx) {
    auto pos = qx.find(fi.item);
    total += fu_fitem(fi, ExtensionAnchor{j, *pos}, qs, tbl, mf);
  }
  return total;
}

Money fu_at_position(const FSequence& fs, const InstancePosition& p,
                     const QSequence& qs, const UtilityTable& tbl,
                     const MembershipFunction& mf) {
  if (p.itemset_indices.size() != fs.itemsets.size()) {
    throw ValidationError("instance position arity mismatch");
  }
  Money total = 0.0;
  std::uint32_t prev = 0;
  for (std::size_t v = 0; v < fs.itemsets.size(); ++v) {
    std::uint32_t j = p.itemset_indices[v];
    if (j <= prev) throw ValidationError("instance position must ascend");
    prev = j;
    total += fu_fitemset_at(fs.itemsets[v], j, qs, tbl, mf);
  }
  return total;
}

Money fu_in_sequence(const FSequence& fs, const QSequence& qs,
                     const UtilityTable& tbl, const MembershipFunction& mf) {
  Money best = 0.0;
  for (const auto& p : find_instances(fs, qs, tbl, mf)) {
    best = std::max(best, fu_at_position(fs, p, qs, tbl, mf));
  }
  return best;
}

Money fu_in_database(const FSequence& fs, const QDatabase& db,
                     const MembershipFunction& mf) {
  Money total = 0.0;
  for (const auto& qs : db.sequences()) {
    total += fu_in_sequence(fs, qs, db.utility_table(), mf);
  }
  return total;
}

Money mfui(ItemId item, std::uint32_t j, const QSequence& qs,
           const UtilityTable& tbl, const MembershipFunction& mf) {
  const QItemset& qx = itemset_at(qs, j);
  auto pos = qx.find(item);
  if (!pos) throw ValidationError("item absent from the q-itemset");
  Money u = utility_of_qitem(qx.items[*pos], tbl);
  Money best = 0.0;
  for (std::uint32_t k = 0; k < mf.region_count(); ++k) {
    best = std::max(best, u * mf.membership(k, u));
  }
  return best;
}

Money mfsu(const QSequence& qs, const UtilityTable& tbl,
           const MembershipFunction& mf) {
  Money total = 0.0;
  for (std::uint32_t j = 1; j <= qs.itemsets.size(); ++j) {
    for (const QItem& qi : qs.itemsets[j - 1].items) {
      total += mfui(qi.item, j, qs, tbl, mf);
    }
  }
  return total;
}

Money mrfu(const FSequence& fs, ExtensionAnchor anchor, const QSequence& qs,
           const UtilityTable& tbl, const MembershipFunction& mf) {
  const QItemset& qx = itemset_at(qs, anchor.itemset_index);
  if (anchor.item_index >= qx.size()) {
    throw ValidationError("anchor item index out of range");
  }
  if (qx.items[anchor.item_index].item != fs.last_item().item) {
    throw ValidationError("anchor does not address the pattern's last item");
  }
  bool anchored = false;
  for (const auto& p : find_instances(fs, qs, tbl, mf)) {
    if (p.itemset_indices.back() == anchor.itemset_index) {
      anchored = true;
      break;
    }
  }
  if (!anchored) {
    throw ValidationError("no instance of the pattern ends at the anchor");
  }
  Money total = 0.0;
  for (std::uint32_t idx = anchor.item_index + 1; idx < qx.size(); ++idx) {
    total += mfui(qx.items[idx].item, anchor.itemset_index, qs, tbl, mf);
  }
  for (std::uint32_t j = anchor.itemset_index + 1; j <= qs.itemsets.size();
       ++j) {
    for (const QItem& qi : qs.itemsets[j - 1].items) {
      total += mfui(qi.item, j, qs, tbl, mf);
    }
  }
  return total;
}

}  // namespace fumine
