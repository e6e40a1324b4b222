#include "fumine/fmatrix.hpp"

#include <algorithm>

namespace fumine {

Money FCellView::max_region_fu() const {
  Money best = 0.0;
  for (double d : degrees) best = std::max(best, utility * d);
  return best;
}

FMatrix::FMatrix(const QSequence& qs, const UtilityTable& tbl,
                 const MembershipFunction& mf)
    : sid_(qs.sid), region_count_(mf.region_count()) {
  const std::size_t cells = qs.length();
  offsets_.reserve(qs.itemset_count() + 1);
  items_.reserve(cells);
  utilities_.reserve(cells);
  degrees_.reserve(cells * region_count_);
  offsets_.push_back(0);
  for (const auto& qx : qs.itemsets) {
    for (const auto& qi : qx.items) {
      Money u = utility_of_qitem(qi, tbl);
      items_.push_back(qi.item);
      utilities_.push_back(u);
      for (std::uint32_t k = 0; k < region_count_; ++k) {
        degrees_.push_back(mf.membership(k, u));
      }
    }
    offsets_.push_back(static_cast<std::uint32_t>(items_.size()));
  }
  // Backward pass fills the remaining field and the sequence MFSU.
  remaining_.assign(cells, 0.0);
  Money suffix = 0.0;
  for (std::size_t c = cells; c-- > 0;) {
    remaining_[c] = suffix;
    Money best = 0.0;
    for (std::uint32_t k = 0; k < region_count_; ++k) {
      best = std::max(best, utilities_[c] * degrees_[c * region_count_ + k]);
    }
    suffix += best;
  }
  mfsu_ = suffix;
}

FCellView FMatrix::cell(std::size_t j0, std::size_t idx) const {
  std::size_t c = offsets_[j0] + idx;
  return FCellView{items_[c], utilities_[c], remaining_[c],
                   {degrees_.data() + c * region_count_, region_count_}};
}

std::optional<std::uint32_t> FMatrix::find_item(std::size_t j0,
                                                ItemId id) const {
  auto begin = items_.begin() + offsets_[j0];
  auto end = items_.begin() + offsets_[j0 + 1];
  auto it = std::lower_bound(begin, end, id);
  if (it == end || *it != id) return std::nullopt;
  return static_cast<std::uint32_t>(it - begin);
}

bool FMatrix::item_occurs(ItemId id) const {
  return std::find(items_.begin(), items_.end(), id) != items_.end();
}

FMatrixSet::FMatrixSet(std::vector<FMatrix> matrices)
    : matrices_(std::move(matrices)) {
  by_sid_.reserve(matrices_.size());
  for (std::size_t i = 0; i < matrices_.size(); ++i) {
    by_sid_.emplace(matrices_[i].sid(), i);
  }
}

const FMatrix* FMatrixSet::matrix_for(int sid) const {
  auto it = by_sid_.find(sid);
  return it == by_sid_.end() ? nullptr : &matrices_[it->second];
}

Money FMatrixSet::mfsu_of(int sid) const {
  const FMatrix* fm = matrix_for(sid);
  if (!fm) throw ValidationError("unknown sid " + std::to_string(sid));
  return fm->mfsu();
}

FMatrixSet build_fmatrix_set(const QDatabase& db,
                             const MembershipFunction& mf) {
  std::vector<FMatrix> matrices;
  matrices.reserve(db.size());
  for (const auto& qs : db.sequences()) {
    matrices.emplace_back(qs, db.utility_table(), mf);
  }
  return FMatrixSet(std::move(matrices));
}

}  // namespace fumine
