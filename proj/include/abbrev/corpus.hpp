#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "abbrev/text.hpp"

namespace abbrev {

// Loads a corpus from a JSONL file (one {"id": ..., "text": ...} object per
// line) or from a directory of .txt files whose names become document ids.
std::vector<Document> load_corpus(const std::string& path,
                                  const LanguageProfile& profile);

struct PairCounts {
  long long cooc = 0;                  // documents with both forms
  std::optional<long long> min_dist;   // token distance, absent if never seen
  long long freq_sf = 0;
  long long freq_lf = 0;
};

// Immutable occurrence index over folded tokens. Queries are thread safe;
// the pair cache is guarded internally.
class CorpusIndex {
 public:
  static CorpusIndex build(const std::vector<Document>& docs,
                           const LanguageProfile& profile);

  // Document co-occurrence, minimum token distance (between the first tokens
  // of the nearest occurrences), and corpus-wide frequencies for a
  // short-form token and a long-form token sequence. Matching is
  // case-folded; the long form must appear contiguously.
  PairCounts pair_counts(const std::string& sf,
                         const std::vector<std::string>& lf_tokens) const;

  long long term_freq(const std::string& term) const;
  size_t doc_count() const { return docs_.size(); }
  size_t vocab_size() const { return vocab_.size(); }
  const std::vector<int>& doc_terms(size_t doc) const { return docs_[doc]; }
  const std::string& doc_id(size_t doc) const { return doc_ids_[doc]; }
  int term_id(const std::string& folded_term) const;  // -1 if unseen

 private:
  std::unordered_map<std::string, int> vocab_;
  std::vector<long long> term_freq_;
  std::vector<std::vector<int>> postings_;  // term id -> sorted doc indices
  std::vector<std::vector<int>> docs_;      // doc index -> term ids in order
  std::vector<std::string> doc_ids_;

  mutable std::mutex cache_mu_;
  mutable std::map<std::pair<std::string, std::string>, PairCounts> cache_;

  PairCounts compute_pair(const std::string& sf,
                          const std::vector<std::string>& lf_tokens) const;
};

}  // namespace abbrev
