#include "allotax/text.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>

namespace allotax {

namespace {

// Whitespace set used for splitting: what Python's str.split() treats as
// whitespace, which is how comment dumps are conventionally tokenized.
bool is_split_space(char32_t c) {
  switch (c) {
    case U'\t':
    case U'\n':
    case U'\v':
    case U'\f':
    case U'\r':
    case U' ':
    case 0x1C:
    case 0x1D:
    case 0x1E:
    case 0x1F:
    case 0x85:
    case 0xA0:
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

struct Range {
  char32_t lo, hi;
};

// Codepoints stripped from tokens: ASCII non-alphanumerics are handled in
// the fast path; these ranges cover the common Unicode punctuation and
// symbol blocks. U+FFFD carries invalid input bytes out with it.
constexpr std::array<Range, 21> kStripRanges{{
    {0x00A1, 0x00BF},  // Latin-1 punctuation and symbols
    {0x00D7, 0x00D7},  // multiplication sign
    {0x00F7, 0x00F7},  // division sign
    {0x037E, 0x037E},  // Greek question mark
    {0x0387, 0x0387},  // Greek ano teleia
    {0x055A, 0x055F},  // Armenian punctuation
    {0x0589, 0x058A},
    {0x05BE, 0x05BE},  // Hebrew maqaf
    {0x05F3, 0x05F4},
    {0x060C, 0x061F},  // Arabic comma .. question mark (incl. 061B)
    {0x066A, 0x066D},
    {0x06D4, 0x06D4},
    {0x0964, 0x0965},  // Devanagari danda
    {0x2000, 0x206F},  // General Punctuation (incl. U+200B zero-width space)
    {0x2E00, 0x2E7F},  // Supplemental Punctuation
    {0x3001, 0x303F},  // CJK symbols and punctuation
    {0xFE10, 0xFE19},  // vertical forms
    {0xFE30, 0xFE6F},  // CJK compat forms, small form variants
    {0xFF01, 0xFF0F},  // fullwidth punctuation runs
    {0xFF1A, 0xFF20},
    {0xFF3B, 0xFF65},  // fullwidth brackets .. halfwidth forms punct
}};

bool is_stripped(char32_t c) {
  if (c < 0x80)
    return !((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'));
  if (c == 0xFFFD) return true;
  for (const auto& r : kStripRanges)
    if (c >= r.lo && c <= r.hi) return true;
  return false;
}

char32_t to_lower(char32_t c) {
  if (c >= 'A' && c <= 'Z') return c + 32;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 32;   // Latin-1
  if (c >= 0x391 && c <= 0x3AB && c != 0x3A2) return c + 32;  // Greek
  if (c >= 0x410 && c <= 0x42F) return c + 32;              // Cyrillic
  if (c >= 0x400 && c <= 0x40F) return c + 80;
  return c;
}

// Decodes one codepoint starting at s[i]; advances i. Invalid sequences
// yield U+FFFD and advance one byte.
char32_t decode_utf8(std::string_view s, std::size_t& i) {
  const unsigned char b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++i;
    return 0xFFFD;
  }
  if (i + static_cast<std::size_t>(len) > s.size()) {
    ++i;
    return 0xFFFD;
  }
  for (int k = 1; k < len; ++k) {
    const unsigned char bk = static_cast<unsigned char>(s[i + k]);
    if ((bk & 0xC0) != 0x80) {
      ++i;
      return 0xFFFD;
    }
    cp = (cp << 6) | (bk & 0x3F);
  }
  // reject overlong encodings and surrogates
  if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
      (len == 4 && cp < 0x10000) || (cp >= 0xD800 && cp <= 0xDFFF) ||
      cp > 0x10FFFF) {
    ++i;
    return 0xFFFD;
  }
  i += static_cast<std::size_t>(len);
  return cp;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

bool all_ascii(std::string_view s) {
  for (const char c : s)
    if (static_cast<unsigned char>(c) >= 0x80) return false;
  return true;
}

bool is_artifact(std::string_view token, const CleanOptions& opts) {
  for (const auto& a : opts.artifacts)
    if (token == a) return true;
  return false;
}

bool is_link(std::string_view token, const CleanOptions& opts) {
  return !opts.link_marker.empty() &&
         token.find(opts.link_marker) != std::string_view::npos;
}

std::string strip_token(std::string_view token) {
  std::string out;
  out.reserve(token.size());
  if (all_ascii(token)) {
    for (const char c : token)
      if (!is_stripped(static_cast<unsigned char>(c))) out += c;
    return out;
  }
  std::size_t i = 0;
  while (i < token.size()) {
    const char32_t cp = decode_utf8(token, i);
    if (!is_stripped(cp)) append_utf8(out, cp);
  }
  return out;
}

}  // namespace

std::vector<std::string> clean_text(std::string_view body,
                                    const CleanOptions& opts) {
  // lowercase + split in one pass
  std::vector<std::string> raw;
  std::string cur;
  std::size_t i = 0;
  while (i < body.size()) {
    const unsigned char b = static_cast<unsigned char>(body[i]);
    char32_t cp;
    if (b < 0x80) {
      cp = b;
      ++i;
    } else {
      cp = decode_utf8(body, i);
    }
    if (is_split_space(cp)) {
      if (!cur.empty()) raw.push_back(std::move(cur));
      cur.clear();
      continue;
    }
    cp = to_lower(cp);
    if (cp < 0x80)
      cur += static_cast<char>(cp);
    else
      append_utf8(cur, cp);
  }
  if (!cur.empty()) raw.push_back(std::move(cur));

  std::vector<std::string> tokens;
  tokens.reserve(raw.size());
  for (auto& tok : raw) {
    // link and artifact checks run on the intact token so URLs are caught
    // before stripping can dismantle them
    if (is_link(tok, opts) || is_artifact(tok, opts)) continue;
    std::string stripped = strip_token(tok);
    // stripping can reassemble forbidden strings ("ht.tp" -> "http"), so
    // the checks run again on the result
    if (stripped.empty() || is_link(stripped, opts) ||
        is_artifact(stripped, opts))
      continue;
    tokens.push_back(std::move(stripped));
  }
  return tokens;
}

std::vector<std::string> extract_ngrams(const std::vector<std::string>& tokens,
                                        int n) {
  if (n < 1) throw std::invalid_argument("n-gram order must be >= 1");
  std::vector<std::string> out;
  if (tokens.size() < static_cast<std::size_t>(n)) return out;
  const std::size_t count = tokens.size() - static_cast<std::size_t>(n) + 1;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::string g = tokens[i];
    for (int k = 1; k < n; ++k) {
      g += ' ';
      g += tokens[i + static_cast<std::size_t>(k)];
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace allotax
