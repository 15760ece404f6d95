#ifndef NAQIL_UNICODE_HPP
#define NAQIL_UNICODE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// UTF-8 handling and Arabic-script normalization.
//
// Normalization composes the Arabic hamza/madda combining sequences into
// their precomposed letters, then strips the short-vowel marks
// (U+064B..U+0652) and the tatweel (U+0640). The operation is idempotent:
// composed output contains no combining marks and no strippable characters.

namespace naqil {

inline std::vector<char32_t> decode_utf8(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    char32_t cp = 0;
    size_t len = 0;
    if (c < 0x80) {
      cp = c;
      len = 1;
    } else if ((c >> 5) == 0x6) {
      cp = c & 0x1f;
      len = 2;
    } else if ((c >> 4) == 0xe) {
      cp = c & 0x0f;
      len = 3;
    } else if ((c >> 3) == 0x1e) {
      cp = c & 0x07;
      len = 4;
    } else {
      throw std::invalid_argument("invalid UTF-8 lead byte");
    }
    if (i + len > s.size())
      throw std::invalid_argument("truncated UTF-8 sequence");
    for (size_t k = 1; k < len; ++k) {
      const unsigned char cc = static_cast<unsigned char>(s[i + k]);
      if ((cc >> 6) != 0x2)
        throw std::invalid_argument("invalid UTF-8 continuation byte");
      cp = (cp << 6) | (cc & 0x3f);
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

inline void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else {
    out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  }
}

inline std::string encode_utf8(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size() * 2);
  for (char32_t cp : cps) append_utf8(out, cp);
  return out;
}

// Arabic block helpers.
inline bool is_tashkeel(char32_t cp) { return cp >= 0x064b && cp <= 0x0652; }
inline bool is_tatweel(char32_t cp) { return cp == 0x0640; }
inline bool is_arabic_letter(char32_t cp) {
  return (cp >= 0x0621 && cp <= 0x064a) || (cp >= 0x0671 && cp <= 0x06d3);
}

// Compose the hamza/madda combining sequences present in Arabic NFD text.
inline std::vector<char32_t> compose_arabic(const std::vector<char32_t>& in) {
  std::vector<char32_t> out;
  out.reserve(in.size());
  for (char32_t cp : in) {
    if (!out.empty()) {
      const char32_t prev = out.back();
      if (cp == 0x0653 && prev == 0x0627) { out.back() = 0x0622; continue; }  // madda
      if (cp == 0x0654) {                                                     // hamza above
        if (prev == 0x0627) { out.back() = 0x0623; continue; }
        if (prev == 0x0648) { out.back() = 0x0624; continue; }
        if (prev == 0x064a) { out.back() = 0x0626; continue; }
      }
      if (cp == 0x0655 && prev == 0x0627) { out.back() = 0x0625; continue; }  // hamza below
    }
    out.push_back(cp);
  }
  return out;
}

// Canonical form used everywhere: composed, no tashkeel, no tatweel.
inline std::string normalize_arabic(std::string_view s) {
  std::vector<char32_t> cps = compose_arabic(decode_utf8(s));
  std::vector<char32_t> kept;
  kept.reserve(cps.size());
  for (char32_t cp : cps)
    if (!is_tashkeel(cp) && !is_tatweel(cp)) kept.push_back(cp);
  return encode_utf8(kept);
}

// Retrieval-only folding of the alef variants onto bare alef.
inline std::string fold_alef(std::string_view s) {
  std::vector<char32_t> cps = decode_utf8(s);
  for (char32_t& cp : cps)
    if (cp == 0x0622 || cp == 0x0623 || cp == 0x0625 || cp == 0x0671) cp = 0x0627;
  return encode_utf8(cps);
}

inline size_t length_utf8(std::string_view s) { return decode_utf8(s).size(); }

}  // namespace naqil

#endif  // NAQIL_UNICODE_HPP
