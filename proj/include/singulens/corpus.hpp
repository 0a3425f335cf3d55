#pragma once

#include <istream>
#include <map>
#include <string>
#include <vector>

#include "singulens/analyzer.hpp"

namespace singulens {

/// One line "<poly> ; key=value, ..." of a corpus file.
struct CorpusEntry {
  std::string polynomial;
  std::map<std::string, std::string> expected;
  std::size_t line = 0;

  std::string name() const;
};

/// Blank lines and '#' comments are skipped. Unknown keys are rejected with Error.
std::vector<CorpusEntry> parse_corpus(std::istream& in);
std::vector<CorpusEntry> load_corpus(const std::string& path);

/// Keys understood in annotations; "name" is a label and is not checked.
const std::vector<std::string>& corpus_keys();

struct CorpusCheck {
  std::string key;
  std::string expected;
  std::string actual;
  bool ok = false;
};

/// Compares every annotation of the entry with the analysis report.
std::vector<CorpusCheck> check_entry(const CorpusEntry& entry, const AnalysisReport& report);

/// "level<k>", "descent" or "unknown<K>"; empty when no equality verdict exists.
std::string equality_label(const AnalysisReport& report);

}  // namespace singulens
