#pragma once

#include <string>
#include <string_view>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "valnorm/error.hpp"

namespace valnorm {

namespace detail {

inline bool ascii_only(std::string_view s) {
  for (unsigned char c : s) {
    if (c >= 0x80) return false;
  }
  return true;
}

inline const icu::Normalizer2& nfc_instance() {
  static const icu::Normalizer2* inst = [] {
    UErrorCode ec = U_ZERO_ERROR;
    const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(ec);
    if (U_FAILURE(ec) || n == nullptr) {
      throw Error::validation("ICU NFC normalizer unavailable");
    }
    return n;
  }();
  return *inst;
}

}  // namespace detail

// Canonical composition (NFC). Ill-formed UTF-8 bytes are replaced with
// U+FFFD, so normalization never fails on real-world embedding files.
inline std::string nfc(std::string_view s) {
  if (detail::ascii_only(s)) return std::string(s);
  icu::UnicodeString u = icu::UnicodeString::fromUTF8(
      icu::StringPiece(s.data(), static_cast<int32_t>(s.size())));
  UErrorCode ec = U_ZERO_ERROR;
  icu::UnicodeString out = detail::nfc_instance().normalize(u, ec);
  if (U_FAILURE(ec)) throw Error::validation("NFC normalization failed");
  std::string res;
  out.toUTF8String(res);
  return res;
}

// Per-code-point simple lowercase mapping (locale-independent); used by the
// case-fallback lookup step.
inline std::string simple_lowercase(std::string_view s) {
  if (detail::ascii_only(s)) {
    std::string out(s);
    for (char& c : out) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
  }
  icu::UnicodeString u = icu::UnicodeString::fromUTF8(
      icu::StringPiece(s.data(), static_cast<int32_t>(s.size())));
  icu::UnicodeString lowered;
  for (int32_t i = 0; i < u.length();) {
    UChar32 cp = u.char32At(i);
    lowered.append(static_cast<UChar32>(u_tolower(cp)));
    i += U16_LENGTH(cp);
  }
  std::string res;
  lowered.toUTF8String(res);
  return res;
}

// Strips a UTF-8 byte-order mark (only sensible on a file's first line).
inline void strip_bom(std::string& line) {
  if (line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF &&
      static_cast<unsigned char>(line[1]) == 0xBB &&
      static_cast<unsigned char>(line[2]) == 0xBF) {
    line.erase(0, 3);
  }
}

inline std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  auto is_space = [](unsigned char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
  };
  while (b < e && is_space(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && is_space(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace valnorm
