#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fumine {

using ItemId = std::uint32_t;
using Money = double;

// Absolute tolerance used for every utility comparison in the project.
inline constexpr double kValueTol = 1e-9;

// value >= threshold, up to the shared tolerance.
inline bool qualifies(Money value, Money threshold) {
  return value >= threshold - kValueTol;
}

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text; message carries file:line:col where known.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally well-formed input that breaks a domain invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Enumeration guard of the reference miners tripped.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Interned item alphabet. Ids are ranks in ascending lexicographic order of
// the item names, so comparing ids compares names.
class ItemCatalog {
 public:
  ItemCatalog() = default;
  explicit ItemCatalog(std::vector<std::string> names);

  std::optional<ItemId> find(std::string_view name) const;
  ItemId id_of(std::string_view name) const;  // throws ValidationError
  const std::string& name(ItemId id) const;
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;  // ascending, unique
  std::unordered_map<std::string, ItemId> index_;
};

struct QItem {
  ItemId item = 0;
  std::uint32_t quantity = 0;  // internal utility, >= 1
};

struct QItemset {
  std::vector<QItem> items;  // ascending by item id, ids distinct

  std::size_t size() const { return items.size(); }
  // Position of `id` inside the itemset, if present.
  std::optional<std::uint32_t> find(ItemId id) const;
};

struct QSequence {
  int sid = 0;
  std::vector<QItemset> itemsets;

  std::size_t itemset_count() const { return itemsets.size(); }
  std::size_t length() const;  // total q-items
};

// Per-item external utility (unit profit), all strictly positive.
class UtilityTable {
 public:
  UtilityTable() = default;
  UtilityTable(std::size_t catalog_size);

  void set(ItemId id, Money unit_profit);  // throws on non-positive profit
  bool has(ItemId id) const;
  Money profit(ItemId id) const;  // throws ValidationError when missing

 private:
  std::vector<Money> profit_;
  std::vector<bool> present_;
};

class QDatabase {
 public:
  // Validates every invariant (ascending distinct items per itemset,
  // positive quantities, unique sids, known utilities) and caches u(D).
  QDatabase(ItemCatalog catalog, std::vector<QSequence> sequences,
            UtilityTable utility);

  const ItemCatalog& catalog() const { return catalog_; }
  const std::vector<QSequence>& sequences() const { return sequences_; }
  const UtilityTable& utility_table() const { return utility_; }
  Money total_utility() const { return total_utility_; }
  std::size_t size() const { return sequences_.size(); }

 private:
  ItemCatalog catalog_;
  std::vector<QSequence> sequences_;
  UtilityTable utility_;
  Money total_utility_ = 0.0;
};

Money utility_of_qitem(const QItem& qi, const UtilityTable& tbl);
Money utility_of_qsequence(const QSequence& qs, const UtilityTable& tbl);
Money utility_of_database(const QDatabase& db);

}  // namespace fumine
