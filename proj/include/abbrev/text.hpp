#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace abbrev {

enum class TokenMode { whitespace_punct, char_ngram };

struct LanguageProfile {
  std::string code = "en";
  bool case_sensitive = true;
  TokenMode token_mode = TokenMode::whitespace_punct;

  // Known codes: en, de, fr, it, es, ru (word tokens, cased) and
  // ja (character tokens, caseless). Unknown codes get the default rules.
  static LanguageProfile for_code(const std::string& code);
};

struct Token {
  std::string surface;
  size_t begin = 0;  // byte offset into the source text
  size_t end = 0;    // one past the last byte
};

using TokenSequence = std::vector<Token>;

struct Span {
  size_t begin = 0;  // token index
  size_t end = 0;    // one past the last token
  size_t size() const { return end - begin; }
};

struct Document {
  std::string id;
  std::string text;
  TokenSequence tokens;
  std::vector<Span> sentences;
};

// Splits on whitespace, strips edge punctuation, and keeps parentheses and
// sentence-final marks as standalone tokens. char_ngram mode additionally
// breaks CJK runs into single-character tokens while keeping Latin/digit runs
// whole.
TokenSequence tokenize(const std::string& text, const LanguageProfile& profile);

// Sentence spans over a token sequence. A sentence ends after a terminal
// punctuation token at parenthesis depth zero; runs of terminals stay in one
// sentence. Without terminals the whole sequence is a single span.
std::vector<Span> split_sentences(const TokenSequence& tokens);

Document make_document(std::string id, std::string text,
                       const LanguageProfile& profile);

}  // namespace abbrev
