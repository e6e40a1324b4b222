#include "fumine/miner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "fumine/fuzzy.hpp"

namespace fumine {

namespace {

void validate(const MiningConfig& cfg) {
  if (!(cfg.xi > 0.0) || cfg.xi > 1.0) {
    throw ConfigError("minimum fuzzy utility ratio must be in (0, 1]");
  }
  if (cfg.max_length && *cfg.max_length < 1) {
    throw ConfigError("max pattern length must be >= 1");
  }
}

Money hfsuub_from_chain(const FuzzyUtilityChain& chain, const FMatrixSet& fms) {
  Money total = 0.0;
  for (const auto& h : chain.head()) {
    total += fms.matrix_at(h.seq_index).mfsu();
  }
  return total;
}

struct MiningContext {
  const QDatabase& db;
  const FMatrixSet& fms;
  const MembershipFunction& mf;
  const MiningConfig& cfg;
  Money threshold;
};

struct BranchAccumulator {
  std::vector<FSequence> patterns;
  MiningStats stats;
  std::uint64_t live_elements = 0;
  std::uint64_t peak_elements = 0;
};

void mine_below(const FSequence& prefix, const FuzzyUtilityChain& chain,
                const MiningContext& ctx, BranchAccumulator& acc) {
  auto candidates = scan_extensions(chain, ctx.fms);
  for (const auto& cand : candidates) {
    if (ctx.cfg.enable_pes && !qualifies(cand.eifu, ctx.threshold)) {
      ++acc.stats.pruned_pes;
      continue;  // no projection at all for a PES-pruned extension
    }
    FSequence child = cand.kind == ExtensionKind::I
                          ? prefix.i_extended(cand.item)
                          : prefix.s_extended(cand.item);
    FuzzyUtilityChain child_chain =
        project(prefix, chain, cand.item, cand.kind, ctx.fms);
    ++acc.stats.chains_built;
    acc.live_elements += child_chain.element_count();
    acc.peak_elements = std::max(acc.peak_elements, acc.live_elements);
    ++acc.stats.candidates;
    Money fu = child_chain.pattern_fu();
    if (qualifies(fu, ctx.threshold)) {
      child.fu = fu;
      acc.patterns.push_back(child);
    }
    bool depth_left =
        !ctx.cfg.max_length || child.length() < *ctx.cfg.max_length;
    if (depth_left) {
      if (ctx.cfg.enable_eud && !qualifies(sdfu(child_chain), ctx.threshold)) {
        ++acc.stats.pruned_eud;
      } else {
        mine_below(child, child_chain, ctx, acc);
      }
    }
    acc.live_elements -= child_chain.element_count();
  }
}

// Depth-1 node: fu test plus the EUD recursion gate (Algorithm 1 shape).
void mine_branch(const FItem& fi, const FuzzyUtilityChain& chain,
                 const MiningContext& ctx, BranchAccumulator& acc) {
  ++acc.stats.candidates;
  FSequence fs = FSequence::single(fi);
  Money fu = chain.pattern_fu();
  if (qualifies(fu, ctx.threshold)) {
    fs.fu = fu;
    acc.patterns.push_back(fs);
    fs.fu = 0.0;
  }
  if (ctx.cfg.max_length && *ctx.cfg.max_length <= 1) return;
  if (ctx.cfg.enable_eud && !qualifies(sdfu(chain), ctx.threshold)) {
    ++acc.stats.pruned_eud;
    return;
  }
  mine_below(fs, chain, ctx, acc);
}

}  // namespace

Money hfsuub(const FSequence& fs, const QDatabase& db, const FMatrixSet& fms,
             const MembershipFunction& mf) {
  if (fs.length() != 1) {
    throw ValidationError("hfsuub is defined for 1-f-sequences");
  }
  const FItem fi = fs.itemsets.front().front();
  Money total = 0.0;
  for (std::size_t s = 0; s < fms.size(); ++s) {
    const FMatrix& fm = fms.matrix_at(s);
    bool contained = false;
    for (std::size_t j = 0; j < fm.itemset_count() && !contained; ++j) {
      auto pos = fm.find_item(j, fi.item);
      if (pos && fm.cell(j, *pos).degrees[fi.region] > 0.0) contained = true;
    }
    if (contained) total += fm.mfsu();
  }
  (void)db;
  (void)mf;
  return total;
}

Money sdfu(const FuzzyUtilityChain& chain) { return chain.sdfu_total(); }

std::vector<ExtensionCandidate> scan_extensions(const FuzzyUtilityChain& chain,
                                                const FMatrixSet& fms) {
  struct Acc {
    Money eifu_i = 0.0, eifu_s = 0.0;
    std::int64_t last_i = -1, last_s = -1;
    bool i_seen = false, s_seen = false;
  };
  std::map<FItem, Acc> found;

  for (std::size_t h = 0; h < chain.sequence_count(); ++h) {
    const HeadEntry& head = chain.head()[h];
    const FMatrix& fm = fms.matrix_at(head.seq_index);
    auto anchors = chain.elements(h);

    for (const auto& e : anchors) {
      std::size_t j0 = e.id.itemset_index - 1;
      for (std::size_t idx = e.id.item_index + 1; idx < fm.cells_in(j0);
           ++idx) {
        // Positions after the anchor hold ids above the prefix's last item.
        FCellView cell = fm.cell(j0, idx);
        for (std::uint32_t k = 0; k < cell.degrees.size(); ++k) {
          if (!(cell.degrees[k] > 0.0)) continue;
          Acc& a = found[FItem{cell.item, k}];
          if (a.last_i != static_cast<std::int64_t>(h)) {
            a.last_i = static_cast<std::int64_t>(h);
            a.i_seen = true;
            a.eifu_i += head.sdfu;
          }
        }
      }
    }

    // Everything in itemsets strictly after the first anchor's itemset is an
    // S-extension occurrence.
    std::size_t first = anchors.front().id.itemset_index;  // 1-based
    for (std::size_t j0 = first; j0 < fm.itemset_count(); ++j0) {
      for (std::size_t idx = 0; idx < fm.cells_in(j0); ++idx) {
        FCellView cell = fm.cell(j0, idx);
        for (std::uint32_t k = 0; k < cell.degrees.size(); ++k) {
          if (!(cell.degrees[k] > 0.0)) continue;
          Acc& a = found[FItem{cell.item, k}];
          if (a.last_s != static_cast<std::int64_t>(h)) {
            a.last_s = static_cast<std::int64_t>(h);
            a.s_seen = true;
            a.eifu_s += head.sdfu;
          }
        }
      }
    }
  }

  std::vector<ExtensionCandidate> out;
  for (const auto& [fi, acc] : found) {
    if (acc.i_seen) out.push_back({fi, ExtensionKind::I, acc.eifu_i});
  }
  for (const auto& [fi, acc] : found) {
    if (acc.s_seen) out.push_back({fi, ExtensionKind::S, acc.eifu_s});
  }
  return out;
}

std::pair<std::vector<FItem>, std::vector<FItem>> enumerate_extensions(
    const FuzzyUtilityChain& chain, const FMatrixSet& fms) {
  std::pair<std::vector<FItem>, std::vector<FItem>> out;
  for (const auto& cand : scan_extensions(chain, fms)) {
    (cand.kind == ExtensionKind::I ? out.first : out.second)
        .push_back(cand.item);
  }
  return out;
}

std::map<std::pair<FItem, ExtensionKind>, Money> eifu_of_extensions(
    const FuzzyUtilityChain& chain, const FMatrixSet& fms) {
  std::map<std::pair<FItem, ExtensionKind>, Money> out;
  for (const auto& cand : scan_extensions(chain, fms)) {
    out.emplace(std::make_pair(cand.item, cand.kind), cand.eifu);
  }
  return out;
}

void recursive_mining(const FSequence& prefix, const FuzzyUtilityChain& chain,
                      const MiningConfig& cfg, MiningResult& acc,
                      const FMatrixSet& fms, const QDatabase& db,
                      const MembershipFunction& mf) {
  validate(cfg);
  MiningContext ctx{db, fms, mf, cfg, db.total_utility() * cfg.xi};
  BranchAccumulator branch;
  mine_below(prefix, chain, ctx, branch);
  acc.patterns.insert(acc.patterns.end(), branch.patterns.begin(),
                      branch.patterns.end());
  acc.stats.candidates += branch.stats.candidates;
  acc.stats.chains_built += branch.stats.chains_built;
  acc.stats.pruned_eud += branch.stats.pruned_eud;
  acc.stats.pruned_pes += branch.stats.pruned_pes;
  acc.stats.peak_live_elements =
      std::max(acc.stats.peak_live_elements, branch.peak_elements);
}

MiningResult mine(const QDatabase& db, const MembershipFunction& mf,
                  const MiningConfig& cfg) {
  validate(cfg);
  auto started = std::chrono::steady_clock::now();

  MiningResult result;
  FMatrixSet fms = build_fmatrix_set(db, mf);
  auto chains = build_initial_chains(fms, mf);
  MiningContext ctx{db, fms, mf, cfg, db.total_utility() * cfg.xi};

  result.stats.chains_built = chains.size();
  std::uint64_t initial_elements = 0;
  for (const auto& [fi, chain] : chains) {
    initial_elements += chain.element_count();
  }

  struct Branch {
    const FItem* fi;
    const FuzzyUtilityChain* chain;
  };
  std::vector<Branch> branches;
  branches.reserve(chains.size());
  for (const auto& [fi, chain] : chains) {
    if (cfg.enable_ppo &&
        !qualifies(hfsuub_from_chain(chain, fms), ctx.threshold)) {
      ++result.stats.pruned_ppo;
      continue;
    }
    branches.push_back({&fi, &chain});
  }

  std::vector<BranchAccumulator> branch_out(branches.size());
  unsigned width = cfg.parallel_width;
  if (width > 1 && branches.size() > 1) {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t b = next.fetch_add(1); b < branches.size();
           b = next.fetch_add(1)) {
        mine_branch(*branches[b].fi, *branches[b].chain, ctx, branch_out[b]);
      }
    };
    std::vector<std::thread> pool;
    unsigned n = std::min<std::size_t>(width, branches.size());
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  } else {
    for (std::size_t b = 0; b < branches.size(); ++b) {
      mine_branch(*branches[b].fi, *branches[b].chain, ctx, branch_out[b]);
    }
  }

  std::uint64_t deepest_branch = 0;
  for (auto& b : branch_out) {
    result.patterns.insert(result.patterns.end(), b.patterns.begin(),
                           b.patterns.end());
    result.stats.candidates += b.stats.candidates;
    result.stats.chains_built += b.stats.chains_built;
    result.stats.pruned_eud += b.stats.pruned_eud;
    result.stats.pruned_pes += b.stats.pruned_pes;
    deepest_branch = std::max(deepest_branch, b.peak_elements);
  }
  // Initial chains stay alive for the whole run; only one branch's projected
  // chains are charged, which makes the figure identical in parallel mode.
  result.stats.peak_live_elements = initial_elements + deepest_branch;

  std::sort(result.patterns.begin(), result.patterns.end(), pattern_less);
  result.stats.runtime_ms =
      static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - started)
                                     .count());
  return result;
}

}  // namespace fumine
