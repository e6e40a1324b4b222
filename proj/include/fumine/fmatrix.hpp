#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "fumine/core.hpp"
#include "fumine/fuzzy.hpp"
#include "fumine/membership.hpp"

namespace fumine {

// One present (item, q-itemset) cell of an f-matrix.
struct FCellView {
  ItemId item = 0;
  Money utility = 0.0;    // q * p
  Money remaining = 0.0;  // sum of MFUI of all q-items strictly after this one
  std::span<const double> degrees;

  Money fu(std::uint32_t region) const { return utility * degrees[region]; }
  Money max_region_fu() const;  // MFUI of the occurrence
};

// Per-sequence matrix of (utility, membership vector, remaining) cells.
// Stored sparsely: only present cells, grouped by q-itemset in item order.
class FMatrix {
 public:
  FMatrix(const QSequence& qs, const UtilityTable& tbl,
          const MembershipFunction& mf);

  int sid() const { return sid_; }
  std::size_t itemset_count() const { return offsets_.size() - 1; }
  std::size_t cell_count() const { return items_.size(); }
  std::size_t region_count() const { return region_count_; }
  Money mfsu() const { return mfsu_; }

  std::size_t cells_in(std::size_t j0) const {
    return offsets_[j0 + 1] - offsets_[j0];
  }
  FCellView cell(std::size_t j0, std::size_t idx) const;
  // Position of `id` inside q-itemset j0 (0-based), if present.
  std::optional<std::uint32_t> find_item(std::size_t j0, ItemId id) const;
  bool item_occurs(ItemId id) const;

 private:
  int sid_ = 0;
  std::size_t region_count_ = 0;
  std::vector<std::uint32_t> offsets_;  // itemset_count + 1 entries
  std::vector<ItemId> items_;
  std::vector<Money> utilities_;
  std::vector<Money> remaining_;
  std::vector<double> degrees_;  // cell_count * region_count, row per cell
  Money mfsu_ = 0.0;
};

class FMatrixSet {
 public:
  FMatrixSet(std::vector<FMatrix> matrices);

  std::size_t size() const { return matrices_.size(); }
  const FMatrix& matrix_at(std::size_t seq_index) const {
    return matrices_[seq_index];
  }
  const FMatrix* matrix_for(int sid) const;
  Money mfsu_of(int sid) const;  // throws ValidationError on unknown sid

 private:
  std::vector<FMatrix> matrices_;  // aligned with QDatabase::sequences
  std::unordered_map<int, std::size_t> by_sid_;
};

FMatrixSet build_fmatrix_set(const QDatabase& db, const MembershipFunction& mf);

}  // namespace fumine
