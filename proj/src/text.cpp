#include "abbrev/text.hpp"

#include "abbrev/util.hpp"

namespace abbrev {

LanguageProfile LanguageProfile::for_code(const std::string& code) {
  LanguageProfile p;
  p.code = code.empty() ? "en" : code;
  if (p.code == "ja") {
    p.case_sensitive = false;
    p.token_mode = TokenMode::char_ngram;
  }
  return p;
}

namespace {

struct Piece {
  uint32_t cp;
  size_t begin;
  size_t end;
};

// Strips edge punctuation from the code points in [first, last). Stripped
// sentence terminals survive as standalone tokens; other stripped marks are
// dropped.
void flush_run(const std::vector<Piece>& run, const std::string& text,
               TokenSequence& out) {
  size_t lo = 0, hi = run.size();
  std::vector<size_t> leading, trailing;
  while (lo < hi && is_strippable_punct(run[lo].cp)) leading.push_back(lo++);
  while (hi > lo && is_strippable_punct(run[hi - 1].cp)) trailing.push_back(--hi);

  auto emit_cp = [&](size_t i) {
    if (!is_sentence_terminal(run[i].cp)) return;
    out.push_back({text.substr(run[i].begin, run[i].end - run[i].begin),
                   run[i].begin, run[i].end});
  };

  for (size_t i : leading) emit_cp(i);
  if (lo < hi) {
    size_t b = run[lo].begin, e = run[hi - 1].end;
    out.push_back({text.substr(b, e - b), b, e});
  }
  for (auto it = trailing.rbegin(); it != trailing.rend(); ++it) emit_cp(*it);
}

}  // namespace

TokenSequence tokenize(const std::string& text,
                       const LanguageProfile& profile) {
  TokenSequence out;
  std::vector<Piece> run;
  const bool char_mode = profile.token_mode == TokenMode::char_ngram;

  auto flush = [&] {
    if (!run.empty()) {
      flush_run(run, text, out);
      run.clear();
    }
  };

  for (size_t i = 0; i < text.size();) {
    auto [cp, len] = decode_utf8(text, i);
    size_t end = i + len;
    if (is_space_cp(cp)) {
      flush();
    } else if (is_paren(cp)) {
      flush();
      out.push_back({text.substr(i, len), i, end});
    } else if (char_mode && is_cjk(cp)) {
      flush();
      out.push_back({text.substr(i, len), i, end});
    } else {
      run.push_back({cp, i, end});
    }
    i = end;
  }
  flush();
  return out;
}

std::vector<Span> split_sentences(const TokenSequence& tokens) {
  std::vector<Span> spans;
  if (tokens.empty()) return spans;

  auto is_terminal_token = [&](size_t i) {
    const auto& s = tokens[i].surface;
    auto [cp, len] = decode_utf8(s, 0);
    return static_cast<size_t>(len) == s.size() && is_sentence_terminal(cp);
  };
  auto paren_delta = [&](size_t i) -> int {
    const auto& s = tokens[i].surface;
    auto [cp, len] = decode_utf8(s, 0);
    if (static_cast<size_t>(len) != s.size()) return 0;
    if (is_open_paren(cp)) return 1;
    if (is_close_paren(cp)) return -1;
    return 0;
  };

  size_t start = 0;
  int depth = 0;
  for (size_t i = 0; i < tokens.size(); i++) {
    depth += paren_delta(i);
    if (depth < 0) depth = 0;  // stray close paren
    bool boundary = depth == 0 && is_terminal_token(i) &&
                    (i + 1 == tokens.size() || !is_terminal_token(i + 1));
    if (boundary) {
      spans.push_back({start, i + 1});
      start = i + 1;
    }
  }
  if (start < tokens.size()) spans.push_back({start, tokens.size()});
  return spans;
}

Document make_document(std::string id, std::string text,
                       const LanguageProfile& profile) {
  Document doc;
  doc.id = std::move(id);
  doc.text = std::move(text);
  doc.tokens = tokenize(doc.text, profile);
  doc.sentences = split_sentences(doc.tokens);
  return doc;
}

}  // namespace abbrev
