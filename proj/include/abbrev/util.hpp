#pragma once

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace abbrev {

// ---- UTF-8 ----------------------------------------------------------------

// Decodes the code point starting at byte `pos`. Malformed bytes are passed
// through one byte at a time so offsets never go out of sync.
inline std::pair<uint32_t, int> decode_utf8(std::string_view s, size_t pos) {
  const auto b = [&](size_t i) { return static_cast<unsigned char>(s[i]); };
  unsigned char c = b(pos);
  if (c < 0x80) return {c, 1};
  auto cont = [&](size_t i) { return i < s.size() && (b(i) & 0xC0) == 0x80; };
  if ((c & 0xE0) == 0xC0 && cont(pos + 1))
    return {uint32_t(c & 0x1F) << 6 | (b(pos + 1) & 0x3F), 2};
  if ((c & 0xF0) == 0xE0 && cont(pos + 1) && cont(pos + 2))
    return {uint32_t(c & 0x0F) << 12 | uint32_t(b(pos + 1) & 0x3F) << 6 |
                (b(pos + 2) & 0x3F),
            3};
  if ((c & 0xF8) == 0xF0 && cont(pos + 1) && cont(pos + 2) && cont(pos + 3))
    return {uint32_t(c & 0x07) << 18 | uint32_t(b(pos + 1) & 0x3F) << 12 |
                uint32_t(b(pos + 2) & 0x3F) << 6 | (b(pos + 3) & 0x3F),
            4};
  return {c, 1};
}

inline void append_utf8(std::string& out, uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::vector<uint32_t> to_codepoints(std::string_view s) {
  std::vector<uint32_t> cps;
  cps.reserve(s.size());
  for (size_t i = 0; i < s.size();) {
    auto [cp, len] = decode_utf8(s, i);
    cps.push_back(cp);
    i += len;
  }
  return cps;
}

inline size_t codepoint_length(std::string_view s) {
  size_t n = 0;
  for (size_t i = 0; i < s.size(); n++) i += decode_utf8(s, i).second;
  return n;
}

// ---- Character classes ----------------------------------------------------
// Covers ASCII, Latin-1 supplement, basic Cyrillic, and CJK ranges. That is
// enough for the supported language profiles; anything else is passed through
// unclassified.

inline bool is_space_cp(uint32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' ||
         cp == '\v' || cp == 0x00A0 || cp == 0x3000;
}

inline bool is_open_paren(uint32_t cp) { return cp == '(' || cp == 0xFF08; }
inline bool is_close_paren(uint32_t cp) { return cp == ')' || cp == 0xFF09; }
inline bool is_paren(uint32_t cp) {
  return is_open_paren(cp) || is_close_paren(cp);
}

inline bool is_sentence_terminal(uint32_t cp) {
  return cp == '.' || cp == '!' || cp == '?' || cp == 0x3002 /* 。 */ ||
         cp == 0xFF01 /* ！ */ || cp == 0xFF1F /* ？ */;
}

inline bool is_ascii_digit(uint32_t cp) { return cp >= '0' && cp <= '9'; }

inline bool is_cjk(uint32_t cp) {
  return (cp >= 0x4E00 && cp <= 0x9FFF) ||   // Han
         (cp >= 0x3400 && cp <= 0x4DBF) ||   // Han ext A
         (cp >= 0x3040 && cp <= 0x309F) ||   // Hiragana
         (cp >= 0x30A0 && cp <= 0x30FF) ||   // Katakana
         (cp >= 0xFF66 && cp <= 0xFF9D);     // halfwidth Katakana
}

inline bool is_upper_cp(uint32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return true;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return true;  // Latin-1
  if (cp >= 0x410 && cp <= 0x42F) return true;              // Cyrillic
  if (cp == 0x401) return true;                             // Ё
  return false;
}

inline bool is_lower_cp(uint32_t cp) {
  if (cp >= 'a' && cp <= 'z') return true;
  if (cp >= 0xDF && cp <= 0xFF && cp != 0xF7) return true;
  if (cp >= 0x430 && cp <= 0x44F) return true;
  if (cp == 0x451) return true;  // ё
  return false;
}

inline bool is_alpha_cp(uint32_t cp) {
  return is_upper_cp(cp) || is_lower_cp(cp) || is_cjk(cp);
}

inline uint32_t fold_cp(uint32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
  if (cp == 0x401) return 0x451;
  return cp;
}

inline std::string fold_case(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size();) {
    auto [cp, len] = decode_utf8(s, i);
    append_utf8(out, fold_cp(cp));
    i += len;
  }
  return out;
}

// Punctuation stripped from token edges. Parentheses are excluded: they are
// emitted as standalone tokens by the tokenizer.
inline bool is_strippable_punct(uint32_t cp) {
  if (cp < 0x80)
    return !is_paren(cp) && std::ispunct(static_cast<int>(cp)) != 0;
  switch (cp) {
    case 0x00AB: case 0x00BB:                          // « »
    case 0x2018: case 0x2019: case 0x201A:             // ‘ ’ ‚
    case 0x201C: case 0x201D: case 0x201E:             // “ ” „
    case 0x2013: case 0x2014: case 0x2026:             // – — …
    case 0x2039: case 0x203A:                          // ‹ ›
    case 0x3001: case 0x3002:                          // 、 。
    case 0xFF01: case 0xFF1F: case 0xFF0C: case 0xFF0E:// ！ ？ ， ．
    case 0xFF1A: case 0xFF1B:                          // ： ；
    case 0x300C: case 0x300D: case 0x300E: case 0x300F:// 「 」 『 』
    case 0x3010: case 0x3011:                          // 【 】
    case 0x30FB:                                       // ・
      return true;
    default:
      return false;
  }
}

// ---- Strings ---------------------------------------------------------------

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); i++) {
    if (i == s.size() || s[i] == sep) {
      out.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

inline std::string join(const std::vector<std::string>& parts,
                        std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); i++) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

inline std::string trim(std::string_view s) {
  size_t a = 0, b = s.size();
  while (a < b && (s[a] == ' ' || s[a] == '\t' || s[a] == '\r' || s[a] == '\n'))
    a++;
  while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t' || s[b - 1] == '\r' ||
                   s[b - 1] == '\n'))
    b--;
  return std::string(s.substr(a, b - a));
}

// Fixed-format float with `digits` significant digits, locale independent.
inline std::string format_sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

inline uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// ---- Deterministic randomness ----------------------------------------------
// std::shuffle and the std distributions are implementation defined, so all
// seeded behavior goes through these helpers.

class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return (eng_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n).
  uint64_t below(uint64_t n) { return n ? eng_() % n : 0; }

  double normal() {
    // Box-Muller; second value discarded for simplicity.
    double u1 = uniform(), u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; i--) {
      size_t j = static_cast<size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace abbrev
