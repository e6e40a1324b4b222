#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fumine/chain.hpp"
#include "fumine/core.hpp"
#include "fumine/fmatrix.hpp"
#include "fumine/pattern.hpp"

namespace fumine {

struct MiningConfig {
  double xi = 0.1;  // minimum fuzzy utility threshold ratio, in (0, 1]
  bool enable_ppo = true;
  bool enable_eud = true;
  bool enable_pes = true;
  std::optional<std::uint32_t> max_length;  // cap on pattern length
  std::uint32_t parallel_width = 0;         // 0 = sequential
};

struct MiningStats {
  std::uint64_t candidates = 0;    // patterns whose fu was evaluated
  std::uint64_t chains_built = 0;
  std::uint64_t pruned_ppo = 0;
  std::uint64_t pruned_eud = 0;
  std::uint64_t pruned_pes = 0;
  std::uint64_t peak_live_elements = 0;
  std::uint64_t runtime_ms = 0;
};

struct MiningResult {
  std::vector<FSequence> patterns;  // sorted by pattern_less, fu filled in
  MiningStats stats;
};

// Sum of MFSU over the sequences containing the 1-f-sequence `fs`.
Money hfsuub(const FSequence& fs, const QDatabase& db, const FMatrixSet& fms,
             const MembershipFunction& mf);

// Sum over head entries of the per-sequence SDFU.
Money sdfu(const FuzzyUtilityChain& chain);

struct ExtensionCandidate {
  FItem item;
  ExtensionKind kind = ExtensionKind::I;
  Money eifu = 0.0;
};

// Single scan of the prefix chain: every I-/S-extension f-item reachable
// from some anchor, with its EIFU accumulated per containing sequence.
// I-extensions first, each group ordered by (item id, region index). The
// anchors already pin the prefix's last item, so the chain alone suffices.
std::vector<ExtensionCandidate> scan_extensions(const FuzzyUtilityChain& chain,
                                                const FMatrixSet& fms);

std::pair<std::vector<FItem>, std::vector<FItem>> enumerate_extensions(
    const FuzzyUtilityChain& chain, const FMatrixSet& fms);

std::map<std::pair<FItem, ExtensionKind>, Money> eifu_of_extensions(
    const FuzzyUtilityChain& chain, const FMatrixSet& fms);

// Depth-first extension search below `prefix`. The caller must already have
// applied the EUD gate to the prefix chain; results accumulate into `acc`
// unsorted (mine() sorts).
void recursive_mining(const FSequence& prefix, const FuzzyUtilityChain& chain,
                      const MiningConfig& cfg, MiningResult& acc,
                      const FMatrixSet& fms, const QDatabase& db,
                      const MembershipFunction& mf);

// The full pattern-growth miner.
MiningResult mine(const QDatabase& db, const MembershipFunction& mf,
                  const MiningConfig& cfg);

}  // namespace fumine
