#include "fumine/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace fumine {

namespace {

struct Token {
  std::string_view text;
  std::size_t line;  // 1-based
  std::size_t col;   // 1-based
};

[[noreturn]] void fail(std::string_view file, std::size_t line,
                       std::size_t col, const std::string& message) {
  std::ostringstream os;
  os << file << ":" << line << ":" << col << ": " << message;
  throw ParseError(os.str());
}

// Lines of `text`, already split into whitespace-separated tokens. Blank
// lines and lines starting with '#' are dropped.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
      }
      tokens.push_back(Token{line.substr(start, i - start), line_no, start + 1});
    }
    if (tokens.empty() || tokens.front().text.front() == '#') continue;
    out.push_back(std::move(tokens));
  }
  return out;
}

double parse_number(std::string_view file, const Token& tok,
                    std::string_view what) {
  double value = 0.0;
  auto [p, ec] = std::from_chars(tok.text.begin(), tok.text.end(), value);
  if (ec != std::errc() || p != tok.text.end()) {
    fail(file, tok.line, tok.col,
         "malformed " + std::string(what) + " '" + std::string(tok.text) + "'");
  }
  return value;
}

std::uint64_t parse_count(std::string_view file, const Token& tok,
                          std::string_view what) {
  std::uint64_t value = 0;
  auto [p, ec] = std::from_chars(tok.text.begin(), tok.text.end(), value);
  if (ec != std::errc() || p != tok.text.end()) {
    fail(file, tok.line, tok.col,
         "malformed " + std::string(what) + " '" + std::string(tok.text) + "'");
  }
  return value;
}

std::string format_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, p);
}

std::string format_fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

QDatabase parse_database_text(std::string_view db_text,
                              std::string_view utility_text,
                              std::string_view db_name,
                              std::string_view utility_name) {
  // Utility table first: item name followed by a positive unit profit.
  std::map<std::string, Money> profits;
  for (const auto& line : tokenize(utility_text)) {
    if (line.size() != 2) {
      fail(utility_name, line.front().line, line.front().col,
           "expected 'item profit'");
    }
    std::string name(line[0].text);
    double profit = parse_number(utility_name, line[1], "external utility");
    if (!(profit > 0.0)) {
      fail(utility_name, line[1].line, line[1].col,
           "external utility must be positive");
    }
    if (!profits.emplace(name, profit).second) {
      fail(utility_name, line[0].line, line[0].col,
           "duplicate utility entry for '" + name + "'");
    }
  }

  struct RawItem {
    std::string name;
    std::uint32_t quantity;
    std::size_t line, col;
  };
  std::vector<std::vector<std::vector<RawItem>>> raw_sequences;
  std::set<std::string> names;
  for (const auto& [name, profit] : profits) names.insert(name);

  for (const auto& line : tokenize(db_text)) {
    std::vector<std::vector<RawItem>> itemsets;
    std::vector<RawItem> current;
    bool closed = false;
    for (const auto& tok : line) {
      if (closed) {
        fail(db_name, tok.line, tok.col, "token after sequence terminator");
      }
      if (tok.text == "-1") {
        if (current.empty()) {
          fail(db_name, tok.line, tok.col, "q-itemset closed while empty");
        }
        itemsets.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (tok.text == "-2") {
        if (!current.empty()) {
          fail(db_name, tok.line, tok.col,
               "q-itemset not closed before sequence terminator");
        }
        if (itemsets.empty()) {
          fail(db_name, tok.line, tok.col, "empty q-sequence");
        }
        closed = true;
        continue;
      }
      std::size_t sep = tok.text.rfind(':');
      if (sep == std::string_view::npos || sep == 0 ||
          sep + 1 == tok.text.size()) {
        fail(db_name, tok.line, tok.col,
             "expected 'item:quantity', got '" + std::string(tok.text) + "'");
      }
      std::string name(tok.text.substr(0, sep));
      Token qty_tok{tok.text.substr(sep + 1), tok.line, tok.col + sep + 1};
      std::uint64_t qty = parse_count(db_name, qty_tok, "quantity");
      if (qty < 1) {
        fail(db_name, qty_tok.line, qty_tok.col, "quantity must be >= 1");
      }
      if (profits.find(name) == profits.end()) {
        fail(db_name, tok.line, tok.col,
             "item '" + name + "' has no external utility entry");
      }
      for (const auto& other : current) {
        if (other.name == name) {
          fail(db_name, tok.line, tok.col,
               "duplicate item '" + name + "' in q-itemset");
        }
      }
      current.push_back(RawItem{std::move(name),
                                static_cast<std::uint32_t>(qty), tok.line,
                                tok.col});
      names.insert(current.back().name);
    }
    if (!closed) {
      fail(db_name, line.back().line, line.back().col,
           "missing sequence terminator -2");
    }
    raw_sequences.push_back(std::move(itemsets));
  }

  ItemCatalog catalog(std::vector<std::string>(names.begin(), names.end()));
  UtilityTable table(catalog.size());
  for (const auto& [name, profit] : profits) {
    table.set(catalog.id_of(name), profit);
  }

  std::vector<QSequence> sequences;
  sequences.reserve(raw_sequences.size());
  int sid = 1;  // by line order
  for (auto& raw : raw_sequences) {
    QSequence qs;
    qs.sid = sid++;
    for (auto& raw_set : raw) {
      QItemset qx;
      for (auto& ri : raw_set) {
        qx.items.push_back(QItem{catalog.id_of(ri.name), ri.quantity});
      }
      std::sort(qx.items.begin(), qx.items.end(),
                [](const QItem& a, const QItem& b) { return a.item < b.item; });
      qs.itemsets.push_back(std::move(qx));
    }
    sequences.push_back(std::move(qs));
  }
  return QDatabase(std::move(catalog), std::move(sequences), std::move(table));
}

QDatabase parse_database(const std::filesystem::path& db_path,
                         const std::filesystem::path& utility_path) {
  return parse_database_text(read_text_file(db_path),
                             read_text_file(utility_path), db_path.string(),
                             utility_path.string());
}

std::string render_database(const QDatabase& db) {
  std::ostringstream os;
  for (const auto& qs : db.sequences()) {
    bool first = true;
    for (const auto& qx : qs.itemsets) {
      for (const auto& qi : qx.items) {
        if (!first) os << ' ';
        first = false;
        os << db.catalog().name(qi.item) << ':' << qi.quantity;
      }
      os << " -1";
    }
    os << " -2\n";
  }
  return os.str();
}

std::string render_utility_table(const QDatabase& db) {
  std::ostringstream os;
  for (ItemId id = 0; id < db.catalog().size(); ++id) {
    if (!db.utility_table().has(id)) continue;
    os << db.catalog().name(id) << ' '
       << format_double(db.utility_table().profit(id)) << '\n';
  }
  return os.str();
}

void write_database(const QDatabase& db, const std::filesystem::path& db_path,
                    const std::filesystem::path& utility_path) {
  write_text_file(db_path, render_database(db));
  write_text_file(utility_path, render_utility_table(db));
}

MembershipFunction parse_membership_text(std::string_view text,
                                         std::string_view name) {
  std::vector<Region> regions;
  std::vector<std::vector<CurveVertex>> curves;
  for (const auto& line : tokenize(text)) {
    if (line[0].text != "region" || line.size() < 3) {
      fail(name, line[0].line, line[0].col,
           "expected 'region <label> u1:f1 ...'");
    }
    std::string label(line[1].text);
    if (label.find('.') != std::string::npos) {
      fail(name, line[1].line, line[1].col,
           "region label must not contain '.'");
    }
    std::vector<CurveVertex> curve;
    for (std::size_t t = 2; t < line.size(); ++t) {
      const Token& tok = line[t];
      std::size_t sep = tok.text.find(':');
      if (sep == std::string_view::npos) {
        fail(name, tok.line, tok.col, "expected 'utility:degree'");
      }
      Token u_tok{tok.text.substr(0, sep), tok.line, tok.col};
      Token f_tok{tok.text.substr(sep + 1), tok.line, tok.col + sep + 1};
      double u = parse_number(name, u_tok, "breakpoint utility");
      double f = parse_number(name, f_tok, "membership degree");
      if (f < 0.0 || f > 1.0) {
        fail(name, f_tok.line, f_tok.col, "membership degree outside [0,1]");
      }
      if (!curve.empty() && !(u > curve.back().utility)) {
        fail(name, u_tok.line, u_tok.col,
             "breakpoints must strictly increase");
      }
      curve.push_back(CurveVertex{u, f});
    }
    regions.push_back(Region{static_cast<std::uint32_t>(regions.size()),
                             std::move(label)});
    curves.push_back(std::move(curve));
  }
  if (regions.empty()) {
    throw ParseError(std::string(name) + ": no regions defined");
  }
  try {
    return MembershipFunction(std::move(regions), std::move(curves));
  } catch (const ValidationError& e) {
    throw ParseError(std::string(name) + ": " + e.what());
  }
}

MembershipFunction parse_membership(const std::filesystem::path& path) {
  return parse_membership_text(read_text_file(path), path.string());
}

std::string render_membership(const MembershipFunction& mf) {
  std::ostringstream os;
  for (std::uint32_t k = 0; k < mf.region_count(); ++k) {
    os << "region " << mf.region(k).label;
    for (const auto& v : mf.curve(k)) {
      os << ' ' << format_double(v.utility) << ':' << format_double(v.degree);
    }
    os << '\n';
  }
  return os.str();
}

void write_membership(const MembershipFunction& mf,
                      const std::filesystem::path& path) {
  write_text_file(path, render_membership(mf));
}

std::string render_pattern(const FSequence& fs, const ItemCatalog& catalog,
                           const MembershipFunction& mf) {
  std::ostringstream os;
  for (std::size_t x = 0; x < fs.itemsets.size(); ++x) {
    if (x > 0) os << "-1 ";
    for (const FItem& fi : fs.itemsets[x]) {
      os << catalog.name(fi.item) << '.' << mf.region(fi.region).label << ' ';
    }
  }
  os << "-2";
  return os.str();
}

std::string render_results(const MiningResult& result,
                           const ItemCatalog& catalog,
                           const MembershipFunction& mf) {
  std::ostringstream os;
  for (const FSequence& fs : result.patterns) {
    os << render_pattern(fs, catalog, mf) << " #FU: " << format_fixed4(fs.fu)
       << '\n';
  }
  os << "# patterns: " << result.patterns.size() << '\n';
  return os.str();
}

void write_results(const MiningResult& result, const ItemCatalog& catalog,
                   const MembershipFunction& mf,
                   const std::filesystem::path& path) {
  write_text_file(path, render_results(result, catalog, mf));
}

std::vector<FSequence> parse_results_text(std::string_view text,
                                          const ItemCatalog& catalog,
                                          const MembershipFunction& mf,
                                          std::string_view name) {
  std::vector<FSequence> out;
  for (const auto& line : tokenize(text)) {
    FSequence fs;
    FItemset current;
    std::size_t t = 0;
    bool closed = false;
    for (; t < line.size(); ++t) {
      const Token& tok = line[t];
      if (tok.text == "-1") {
        if (current.empty()) fail(name, tok.line, tok.col, "empty f-itemset");
        fs.itemsets.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (tok.text == "-2") {
        if (current.empty()) fail(name, tok.line, tok.col, "empty f-itemset");
        fs.itemsets.push_back(std::move(current));
        current.clear();
        closed = true;
        ++t;
        break;
      }
      std::size_t sep = tok.text.rfind('.');
      if (sep == std::string_view::npos) {
        fail(name, tok.line, tok.col, "expected 'item.Region'");
      }
      auto item = catalog.find(tok.text.substr(0, sep));
      if (!item) {
        fail(name, tok.line, tok.col,
             "unknown item '" + std::string(tok.text.substr(0, sep)) + "'");
      }
      auto region = mf.region_by_label(tok.text.substr(sep + 1));
      if (!region) {
        fail(name, tok.line, tok.col,
             "unknown region '" + std::string(tok.text.substr(sep + 1)) + "'");
      }
      current.push_back(FItem{*item, *region});
    }
    if (!closed) {
      fail(name, line.back().line, line.back().col, "missing -2 terminator");
    }
    if (t + 2 != line.size() || line[t].text != "#FU:") {
      fail(name, line.back().line, line.back().col,
           "expected trailing '#FU: <value>'");
    }
    fs.fu = parse_number(name, line[t + 1], "fuzzy utility");
    out.push_back(std::move(fs));
  }
  return out;
}

std::vector<FSequence> parse_results(const std::filesystem::path& path,
                                     const ItemCatalog& catalog,
                                     const MembershipFunction& mf) {
  return parse_results_text(read_text_file(path), catalog, mf, path.string());
}

DatasetDescriptors describe_dataset(const QDatabase& db) {
  DatasetDescriptors d;
  d.sequences = db.size();
  std::set<ItemId> items;
  std::size_t total_items = 0;
  std::size_t total_itemsets = 0;
  for (const auto& qs : db.sequences()) {
    std::size_t len = qs.length();
    total_items += len;
    total_itemsets += qs.itemset_count();
    d.max_length = std::max(d.max_length, len);
    for (const auto& qx : qs.itemsets) {
      for (const auto& qi : qx.items) items.insert(qi.item);
    }
  }
  d.distinct_items = items.size();
  if (d.sequences > 0) {
    d.avg_length = static_cast<double>(total_items) / d.sequences;
    d.avg_itemsets = static_cast<double>(total_itemsets) / d.sequences;
  }
  if (total_itemsets > 0) {
    d.avg_itemset_size = static_cast<double>(total_items) / total_itemsets;
  }
  return d;
}

std::string render_stats(const StatsReport& r) {
  std::ostringstream os;
  os << "algorithm: " << r.algorithm << '\n';
  os << "min_ratio: " << format_double(r.xi) << '\n';
  os << "ppo: " << (r.ppo ? "on" : "off") << '\n';
  os << "eud: " << (r.eud ? "on" : "off") << '\n';
  os << "pes: " << (r.pes ? "on" : "off") << '\n';
  os << "max_length: " << r.max_length << '\n';
  os << "parallel: " << r.parallel << '\n';
  os << "sequences: " << r.dataset.sequences << '\n';
  os << "distinct_items: " << r.dataset.distinct_items << '\n';
  os << "avg_seq_length: " << format_fixed4(r.dataset.avg_length) << '\n';
  os << "max_seq_length: " << r.dataset.max_length << '\n';
  os << "avg_itemsets_per_seq: " << format_fixed4(r.dataset.avg_itemsets)
     << '\n';
  os << "avg_items_per_itemset: " << format_fixed4(r.dataset.avg_itemset_size)
     << '\n';
  os << "total_utility: " << format_fixed4(r.total_utility) << '\n';
  os << "threshold: " << format_fixed4(r.threshold) << '\n';
  os << "patterns: " << r.patterns << '\n';
  os << "candidates: " << r.stats.candidates << '\n';
  os << "chains_built: " << r.stats.chains_built << '\n';
  os << "pruned_ppo: " << r.stats.pruned_ppo << '\n';
  os << "pruned_eud: " << r.stats.pruned_eud << '\n';
  os << "pruned_pes: " << r.stats.pruned_pes << '\n';
  os << "peak_live_elements: " << r.stats.peak_live_elements << '\n';
  os << "runtime_ms: " << r.stats.runtime_ms << '\n';
  return os.str();
}

void write_stats(const StatsReport& report,
                 const std::filesystem::path& path) {
  write_text_file(path, render_stats(report));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path,
                     std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace fumine
