#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "fumine/core.hpp"

namespace fumine {

struct GeneratorParams {
  std::uint64_t n_sequences = 100;
  std::uint64_t n_items = 50;
  std::uint64_t max_seq_itemsets = 8;
  std::uint64_t max_itemset_size = 4;
  std::uint64_t max_quantity = 5;
  Money utility_min = 0.5;
  Money utility_max = 5.0;
  std::uint64_t seed = 1;
};

struct GeneratedText {
  std::string database;
  std::string utility;
};

// Deterministic synthetic q-sequence database: same params -> identical
// bytes, independent of platform.
GeneratedText generate_synthetic_text(const GeneratorParams& params);
void generate_synthetic(const GeneratorParams& params,
                        const std::filesystem::path& db_out,
                        const std::filesystem::path& utility_out);

}  // namespace fumine
