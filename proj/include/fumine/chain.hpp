#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "fumine/core.hpp"
#include "fumine/fmatrix.hpp"
#include "fumine/fuzzy.hpp"
#include "fumine/pattern.hpp"

namespace fumine {

enum class ExtensionKind { I, S };

// One extension position of the pattern in a q-sequence. `fu` is the best
// fuzzy utility over the instances anchored here, `mrfu` the f-matrix
// remaining field at the anchor.
struct ChainElement {
  ExtensionAnchor id;
  Money fu = 0.0;
  Money mrfu = 0.0;
};

struct HeadEntry {
  int sid = 0;
  Money sdfu = 0.0;            // per-sequence SDFU (zero when no mrfu > 0)
  std::uint32_t seq_index = 0;  // position in the database / f-matrix set
};

// A pattern's projected database: per containing sequence, the list of its
// extension positions. Heads ascend by sid, elements by anchor.
class FuzzyUtilityChain {
 public:
  FuzzyUtilityChain() = default;

  std::span<const HeadEntry> head() const { return head_; }
  std::span<const ChainElement> elements(std::size_t head_idx) const;
  std::size_t sequence_count() const { return head_.size(); }
  std::size_t element_count() const { return elements_.size(); }
  bool empty() const { return head_.empty(); }

  // Fuzzy utility of the pattern in the database: sum over heads of the
  // best element fu.
  Money pattern_fu() const;
  // Sum over heads of the per-sequence SDFU.
  Money sdfu_total() const;

  void append_sequence(HeadEntry entry, std::vector<ChainElement> elems);

 private:
  std::vector<HeadEntry> head_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<ChainElement> elements_;
};

// Chains of every 1-f-sequence that occurs with positive degree somewhere.
std::map<FItem, FuzzyUtilityChain> build_initial_chains(
    const FMatrixSet& fms, const MembershipFunction& mf);

// Chain of the pattern obtained by extending `prefix` with `ext`. For
// I-extension, ext.item must be strictly greater than the last f-item of the
// prefix's last f-itemset (ValidationError otherwise).
FuzzyUtilityChain project(const FSequence& prefix,
                          const FuzzyUtilityChain& chain, FItem ext,
                          ExtensionKind kind, const FMatrixSet& fms);

}  // namespace fumine
