#pragma once

#include <cstdint>
#include <vector>

#include "fumine/core.hpp"
#include "fumine/membership.hpp"
#include "fumine/pattern.hpp"

namespace fumine {

// Where an f-sequence instance sits inside a q-sequence: one q-itemset index
// per f-itemset, 1-based and strictly increasing.
struct InstancePosition {
  std::vector<std::uint32_t> itemset_indices;

  friend bool operator==(const InstancePosition&,
                         const InstancePosition&) = default;
};

// Occurrence of a pattern's extension item: 1-based q-itemset index plus the
// 0-based position of the matched q-item inside that itemset.
struct ExtensionAnchor {
  std::uint32_t itemset_index = 0;
  std::uint32_t item_index = 0;

  friend auto operator<=>(const ExtensionAnchor&,
                          const ExtensionAnchor&) = default;
};

// Definitional, scan-based fuzzy utility engine. Everything here works on
// the raw q-sequences; the compressed structures are cross-checked against
// these functions.

FuzzySet fuzzify(Money utility, const MembershipFunction& mf);

Money fu_fitem(FItem fi, ExtensionAnchor at, const QSequence& qs,
               const UtilityTable& tbl, const MembershipFunction& mf);

bool contains_itemset(const FItemset& fx, std::uint32_t j, const QSequence& qs,
                      const UtilityTable& tbl, const MembershipFunction& mf);

std::vector<InstancePosition> find_instances(const FSequence& fs,
                                             const QSequence& qs,
                                             const UtilityTable& tbl,
                                             const MembershipFunction& mf);

Money fu_fitemset_at(const FItemset& fx, std::uint32_t j, const QSequence& qs,
                     const UtilityTable& tbl, const MembershipFunction& mf);

Money fu_at_position(const FSequence& fs, const InstancePosition& p,
                     const QSequence& qs, const UtilityTable& tbl,
                     const MembershipFunction& mf);

Money fu_in_sequence(const FSequence& fs, const QSequence& qs,
                     const UtilityTable& tbl, const MembershipFunction& mf);

Money fu_in_database(const FSequence& fs, const QDatabase& db,
                     const MembershipFunction& mf);

// Max-over-regions fuzzy utility of one q-item occurrence.
Money mfui(ItemId item, std::uint32_t j, const QSequence& qs,
           const UtilityTable& tbl, const MembershipFunction& mf);

// Sum of mfui over every q-item occurrence of the sequence.
Money mfsu(const QSequence& qs, const UtilityTable& tbl,
           const MembershipFunction& mf);

// Sum of mfui over all q-items strictly after the anchor, in flattened
// order: the rest of the anchor's itemset first, then all later itemsets.
Money mrfu(const FSequence& fs, ExtensionAnchor anchor, const QSequence& qs,
           const UtilityTable& tbl, const MembershipFunction& mf);

}  // namespace fumine
