#include "abbrev/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "abbrev/util.hpp"
#include "json.hpp"

namespace abbrev {

namespace fs = std::filesystem;

std::vector<Document> load_corpus(const std::string& path,
                                  const LanguageProfile& profile) {
  std::vector<Document> docs;
  if (fs::is_directory(path)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path))
      if (entry.is_regular_file() && entry.path().extension() == ".txt")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      std::ifstream in(f);
      std::stringstream buf;
      buf << in.rdbuf();
      docs.push_back(make_document(f.stem().string(), buf.str(), profile));
    }
    return docs;
  }

  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus: " + path);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    if (line.empty() || line[0] == '#') continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object())
      throw std::runtime_error("corpus line " + std::to_string(lineno) +
                               ": not a JSON object");
    if (j.contains("_config_hash")) continue;  // provenance footer
    docs.push_back(make_document(j.at("id").get<std::string>(),
                                 j.at("text").get<std::string>(), profile));
  }
  return docs;
}

CorpusIndex CorpusIndex::build(const std::vector<Document>& docs,
                               const LanguageProfile& profile) {
  (void)profile;
  CorpusIndex idx;
  idx.docs_.reserve(docs.size());
  idx.doc_ids_.reserve(docs.size());
  for (const auto& doc : docs) {
    std::vector<int> ids;
    ids.reserve(doc.tokens.size());
    for (const auto& tok : doc.tokens) {
      std::string folded = fold_case(tok.surface);
      auto [it, inserted] =
          idx.vocab_.emplace(std::move(folded), static_cast<int>(idx.vocab_.size()));
      if (inserted) {
        idx.term_freq_.push_back(0);
        idx.postings_.emplace_back();
      }
      int id = it->second;
      idx.term_freq_[id]++;
      auto& post = idx.postings_[id];
      if (post.empty() || post.back() != static_cast<int>(idx.docs_.size()))
        post.push_back(static_cast<int>(idx.docs_.size()));
      ids.push_back(id);
    }
    idx.docs_.push_back(std::move(ids));
    idx.doc_ids_.push_back(doc.id);
  }
  return idx;
}

long long CorpusIndex::term_freq(const std::string& term) const {
  auto it = vocab_.find(fold_case(term));
  return it == vocab_.end() ? 0 : term_freq_[it->second];
}

int CorpusIndex::term_id(const std::string& folded_term) const {
  auto it = vocab_.find(folded_term);
  return it == vocab_.end() ? -1 : it->second;
}

namespace {

// Sorted intersection.
std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<long long> seq_starts(const std::vector<int>& doc,
                                  const std::vector<int>& seq) {
  std::vector<long long> starts;
  if (seq.empty() || doc.size() < seq.size()) return starts;
  for (size_t i = 0; i + seq.size() <= doc.size(); i++) {
    bool match = true;
    for (size_t k = 0; k < seq.size(); k++)
      if (doc[i + k] != seq[k]) {
        match = false;
        break;
      }
    if (match) starts.push_back(static_cast<long long>(i));
  }
  return starts;
}

}  // namespace

PairCounts CorpusIndex::compute_pair(
    const std::string& sf, const std::vector<std::string>& lf_tokens) const {
  PairCounts pc;
  pc.freq_sf = term_freq(sf);

  int sf_id = term_id(fold_case(sf));
  std::vector<int> lf_ids;
  lf_ids.reserve(lf_tokens.size());
  bool lf_known = !lf_tokens.empty();
  for (const auto& t : lf_tokens) {
    int id = term_id(fold_case(t));
    if (id < 0) {
      lf_known = false;
      break;
    }
    lf_ids.push_back(id);
  }
  if (!lf_known) return pc;

  // Documents that contain every long-form token.
  std::vector<int> lf_docs = postings_[lf_ids[0]];
  for (size_t k = 1; k < lf_ids.size() && !lf_docs.empty(); k++)
    lf_docs = intersect(lf_docs, postings_[lf_ids[k]]);

  for (int d : lf_docs) {
    auto lf_starts = seq_starts(docs_[d], lf_ids);
    if (lf_starts.empty()) continue;
    pc.freq_lf += static_cast<long long>(lf_starts.size());
    if (sf_id < 0) continue;
    if (!std::binary_search(postings_[sf_id].begin(), postings_[sf_id].end(), d))
      continue;
    std::vector<long long> sf_starts;
    const auto& doc = docs_[d];
    for (size_t i = 0; i < doc.size(); i++)
      if (doc[i] == sf_id) sf_starts.push_back(static_cast<long long>(i));
    pc.cooc++;
    // Nearest pair of occurrence starts; both lists are sorted.
    long long best = pc.min_dist ? *pc.min_dist : -1;
    size_t j = 0;
    for (long long s : sf_starts) {
      while (j + 1 < lf_starts.size() && lf_starts[j + 1] <= s) j++;
      long long d1 = std::llabs(s - lf_starts[j]);
      if (j + 1 < lf_starts.size())
        d1 = std::min(d1, std::llabs(lf_starts[j + 1] - s));
      if (best < 0 || d1 < best) best = d1;
    }
    pc.min_dist = best;
  }
  return pc;
}

PairCounts CorpusIndex::pair_counts(
    const std::string& sf, const std::vector<std::string>& lf_tokens) const {
  std::string lf_key;
  for (const auto& t : lf_tokens) {
    if (!lf_key.empty()) lf_key += ' ';
    lf_key += fold_case(t);
  }
  auto key = std::make_pair(fold_case(sf), std::move(lf_key));
  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  PairCounts pc = compute_pair(sf, lf_tokens);
  std::lock_guard<std::mutex> lock(cache_mu_);
  cache_.emplace(std::move(key), pc);
  return pc;
}

}  // namespace abbrev
