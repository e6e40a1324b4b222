#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "fumine/core.hpp"
#include "fumine/membership.hpp"
#include "fumine/miner.hpp"

namespace fumine {

// Database text: one q-sequence per line, `item:quantity` tokens, `-1`
// closes a q-itemset, `-2` closes the sequence, `#` starts a comment line.
// Utility text: one `item profit` pair per line. Sids are assigned by line
// order starting at 1.
QDatabase parse_database_text(std::string_view db_text,
                              std::string_view utility_text,
                              std::string_view db_name = "<db>",
                              std::string_view utility_name = "<utility>");
QDatabase parse_database(const std::filesystem::path& db_path,
                         const std::filesystem::path& utility_path);

std::string render_database(const QDatabase& db);
std::string render_utility_table(const QDatabase& db);
void write_database(const QDatabase& db, const std::filesystem::path& db_path,
                    const std::filesystem::path& utility_path);

// Membership text: one region per line, `region <label> u1:f1 u2:f2 ...`,
// strictly increasing breakpoints, degrees in [0, 1].
MembershipFunction parse_membership_text(std::string_view text,
                                         std::string_view name = "<membership>");
MembershipFunction parse_membership(const std::filesystem::path& path);
std::string render_membership(const MembershipFunction& mf);
void write_membership(const MembershipFunction& mf,
                      const std::filesystem::path& path);

// Result file: one pattern per line, itemsets separated by -1, terminated by
// `-2 #FU: <value>` with the fuzzy utility at 4 decimal places; a trailing
// `# patterns: N` comment closes the file.
std::string render_pattern(const FSequence& fs, const ItemCatalog& catalog,
                           const MembershipFunction& mf);
std::string render_results(const MiningResult& result,
                           const ItemCatalog& catalog,
                           const MembershipFunction& mf);
void write_results(const MiningResult& result, const ItemCatalog& catalog,
                   const MembershipFunction& mf,
                   const std::filesystem::path& path);
std::vector<FSequence> parse_results_text(std::string_view text,
                                          const ItemCatalog& catalog,
                                          const MembershipFunction& mf,
                                          std::string_view name = "<results>");
std::vector<FSequence> parse_results(const std::filesystem::path& path,
                                     const ItemCatalog& catalog,
                                     const MembershipFunction& mf);

// Dataset shape, always recomputed from the parsed database.
struct DatasetDescriptors {
  std::size_t sequences = 0;       // |D|
  std::size_t distinct_items = 0;  // |I|, items actually occurring
  double avg_length = 0.0;         // avg(S)
  std::size_t max_length = 0;      // max(S)
  double avg_itemsets = 0.0;       // q-itemsets per sequence
  double avg_itemset_size = 0.0;   // q-items per q-itemset
};

DatasetDescriptors describe_dataset(const QDatabase& db);

struct StatsReport {
  std::string algorithm;
  double xi = 0.0;
  bool ppo = true, eud = true, pes = true;
  std::uint32_t max_length = 0;  // 0 = unbounded
  std::uint32_t parallel = 0;
  DatasetDescriptors dataset;
  Money total_utility = 0.0;
  Money threshold = 0.0;
  std::size_t patterns = 0;
  MiningStats stats;
};

std::string render_stats(const StatsReport& report);
void write_stats(const StatsReport& report, const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace fumine
