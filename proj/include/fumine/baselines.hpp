#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fumine/core.hpp"
#include "fumine/membership.hpp"
#include "fumine/miner.hpp"

namespace fumine {

struct OracleConfig {
  double xi = 0.1;
  std::uint32_t max_length = 0;  // 0 = bounded only by the longest sequence
  std::uint64_t node_budget = 5'000'000;  // evaluated patterns before aborting
};

// Exhaustive reference miner: enumerates every f-sequence contained in at
// least one q-sequence (a pattern contained nowhere has fu 0 and cannot
// qualify) and evaluates fu_in_database from scratch for each. Throws
// BudgetError past cfg.node_budget evaluated patterns.
MiningResult brute_force_mine(const QDatabase& db, const MembershipFunction& mf,
                              const OracleConfig& cfg);

// Level-wise generate-and-test baseline: level-k candidates extend the
// level-(k-1) survivors by the surviving 1-f-sequences; a candidate survives
// on the sum of MFSU over its containing sequences. Output set matches the
// exhaustive miner.
MiningResult pfus_like_mine(const QDatabase& db, const MembershipFunction& mf,
                            const OracleConfig& cfg);

struct CompareReport {
  std::vector<FSequence> only_first;
  std::vector<FSequence> only_second;
  std::size_t common = 0;
  Money max_fu_delta = 0.0;

  bool match(double tol) const {
    return only_first.empty() && only_second.empty() && max_fu_delta <= tol;
  }
};

CompareReport compare_results(const MiningResult& a, const MiningResult& b,
                              double tol);

std::string describe(const CompareReport& report, const ItemCatalog& catalog,
                     const MembershipFunction& mf, double tol);

}  // namespace fumine
