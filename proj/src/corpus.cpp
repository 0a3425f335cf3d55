#include "singulens/corpus.hpp"

#include <algorithm>
#include <fstream>

#include "singulens/errors.hpp"

namespace singulens {

namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string CorpusEntry::name() const {
  const auto it = expected.find("name");
  return it == expected.end() ? polynomial : it->second;
}

const std::vector<std::string>& corpus_keys() {
  static const std::vector<std::string> keys{"name", "mu",       "tau",      "qh",   "g",
                                             "bound", "equality", "refuted1", "class"};
  return keys;
}

std::vector<CorpusEntry> parse_corpus(std::istream& in) {
  std::vector<CorpusEntry> entries;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    raw = trim(raw);
    if (raw.empty()) continue;
    CorpusEntry e;
    e.line = line;
    const auto semi = raw.find(';');
    e.polynomial = trim(raw.substr(0, semi));
    if (semi != std::string::npos) {
      std::string rest = raw.substr(semi + 1);
      std::size_t start = 0;
      while (start <= rest.size()) {
        const auto comma = rest.find(',', start);
        const std::string item = trim(rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (!item.empty()) {
          const auto eq = item.find('=');
          if (eq == std::string::npos) throw Error("line " + std::to_string(line) + ": expected key=value");
          const std::string key = trim(item.substr(0, eq));
          const auto& keys = corpus_keys();
          if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            throw Error("line " + std::to_string(line) + ": unknown key '" + key + "'");
          }
          e.expected[key] = trim(item.substr(eq + 1));
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    if (e.polynomial.empty()) throw Error("line " + std::to_string(line) + ": missing polynomial");
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file '" + path + "'");
  return parse_corpus(in);
}

std::string equality_label(const AnalysisReport& r) {
  if (!r.equality) return {};
  switch (r.equality->kind) {
    case EqualityKind::proven_at_level: return "level" + std::to_string(r.equality->level);
    case EqualityKind::proven_by_descent: return "descent";
    case EqualityKind::unknown_up_to: return "unknown" + std::to_string(r.equality->level);
  }
  return {};
}

std::vector<CorpusCheck> check_entry(const CorpusEntry& entry, const AnalysisReport& r) {
  std::vector<CorpusCheck> out;
  for (const auto& [key, expected] : entry.expected) {
    std::string actual = "n/a";
    bool ok = false;
    if (key == "name") continue;
    if (key == "mu" && r.milnor) actual = std::to_string(*r.milnor);
    if (key == "tau" && r.tjurina) actual = std::to_string(*r.tjurina);
    if (key == "qh" && r.qh) actual = yes_no(r.qh->quasi_homogeneous);
    if (key == "g" && r.genus) actual = std::to_string(r.genus->genus);
    if (key == "bound" && r.length_lower_bound) actual = std::to_string(*r.length_lower_bound);
    if (key == "class" && r.cls) actual = r.cls->to_string();
    if (key == "refuted1" && r.equality) actual = yes_no(r.equality->refuted_at_level1);
    if (key == "equality") {
      actual = equality_label(r);
      // "proven" accepts any proof, levelwise or by descent.
      ok = expected == "proven" ? (actual.starts_with("level") || actual == "descent") : actual == expected;
    } else {
      ok = actual == expected;
    }
    out.push_back(CorpusCheck{key, expected, actual, ok});
  }
  return out;
}

}  // namespace singulens
