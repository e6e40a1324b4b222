#include "fumine/core.hpp"

#include <algorithm>
#include <set>

namespace fumine {

ItemCatalog::ItemCatalog(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  names_ = std::move(names);
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    index_.emplace(names_[i], static_cast<ItemId>(i));
  }
}

std::optional<ItemId> ItemCatalog::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ItemId ItemCatalog::id_of(std::string_view name) const {
  auto id = find(name);
  if (!id) throw ValidationError("unknown item '" + std::string(name) + "'");
  return *id;
}

const std::string& ItemCatalog::name(ItemId id) const {
  if (id >= names_.size()) throw ValidationError("item id out of range");
  return names_[id];
}

std::optional<std::uint32_t> QItemset::find(ItemId id) const {
  auto it = std::lower_bound(
      items.begin(), items.end(), id,
      [](const QItem& qi, ItemId target) { return qi.item < target; });
  if (it == items.end() || it->item != id) return std::nullopt;
  return static_cast<std::uint32_t>(it - items.begin());
}

std::size_t QSequence::length() const {
  std::size_t n = 0;
  for (const auto& x : itemsets) n += x.size();
  return n;
}

UtilityTable::UtilityTable(std::size_t catalog_size)
    : profit_(catalog_size, 0.0), present_(catalog_size, false) {}

void UtilityTable::set(ItemId id, Money unit_profit) {
  if (id >= profit_.size()) throw ValidationError("item id out of range");
  if (!(unit_profit > 0.0)) {
    throw ValidationError("external utility must be positive");
  }
  profit_[id] = unit_profit;
  present_[id] = true;
}

bool UtilityTable::has(ItemId id) const {
  return id < present_.size() && present_[id];
}

Money UtilityTable::profit(ItemId id) const {
  if (!has(id)) throw ValidationError("item has no external utility entry");
  return profit_[id];
}

QDatabase::QDatabase(ItemCatalog catalog, std::vector<QSequence> sequences,
                     UtilityTable utility)
    : catalog_(std::move(catalog)),
      sequences_(std::move(sequences)),
      utility_(std::move(utility)) {
  std::set<int> sids;
  for (const auto& qs : sequences_) {
    if (qs.itemsets.empty()) throw ValidationError("empty q-sequence");
    if (!sids.insert(qs.sid).second) {
      throw ValidationError("duplicate sid " + std::to_string(qs.sid));
    }
    for (const auto& qx : qs.itemsets) {
      if (qx.items.empty()) throw ValidationError("empty q-itemset");
      ItemId prev = 0;
      bool first = true;
      for (const auto& qi : qx.items) {
        if (!first && qi.item <= prev) {
          throw ValidationError("q-itemset items must strictly ascend");
        }
        first = false;
        prev = qi.item;
        if (qi.quantity < 1) throw ValidationError("quantity must be >= 1");
        if (!utility_.has(qi.item)) {
          throw ValidationError("item '" + catalog_.name(qi.item) +
                                "' missing from the utility table");
        }
        total_utility_ += utility_of_qitem(qi, utility_);
      }
    }
  }
}

Money utility_of_qitem(const QItem& qi, const UtilityTable& tbl) {
  return static_cast<Money>(qi.quantity) * tbl.profit(qi.item);
}

Money utility_of_qsequence(const QSequence& qs, const UtilityTable& tbl) {
  Money total = 0.0;
  for (const auto& qx : qs.itemsets) {
    for (const auto& qi : qx.items) total += utility_of_qitem(qi, tbl);
  }
  return total;
}

Money utility_of_database(const QDatabase& db) { return db.total_utility(); }

}  // namespace fumine
