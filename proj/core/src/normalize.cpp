#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <string>

#include "pubgraph/error.hpp"
#include "pubgraph/record.hpp"
#include "text_util.hpp"

namespace pubgraph {

namespace {

const icu::Normalizer2& nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* instance = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || instance == nullptr) {
    throw Error("ICU NFC normalizer unavailable");
  }
  return *instance;
}

}  // namespace

std::string normalize_name(std::string_view raw) {
  icu::UnicodeString text = icu::UnicodeString::fromUTF8(
      icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())));

  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2& normalizer = nfc();
  icu::UnicodeString composed = normalizer.normalize(text, status);
  if (U_FAILURE(status)) {
    throw InvalidNameError("name cannot be normalized");
  }
  composed.foldCase();
  // Folding can denormalize (e.g. composed forms that fold into
  // sequences), so compose once more.
  icu::UnicodeString folded = normalizer.normalize(composed, status);
  if (U_FAILURE(status)) {
    throw InvalidNameError("name cannot be normalized");
  }

  icu::UnicodeString collapsed;
  bool pending_space = false;
  bool seen_content = false;
  for (int32_t i = 0; i < folded.length();) {
    UChar32 cp = folded.char32At(i);
    i += U16_LENGTH(cp);
    if (u_isUWhiteSpace(cp)) {
      pending_space = seen_content;
      continue;
    }
    if (pending_space) {
      collapsed.append(static_cast<UChar32>(' '));
      pending_space = false;
    }
    collapsed.append(cp);
    seen_content = true;
  }

  if (collapsed.isEmpty()) {
    throw InvalidNameError("name is empty after normalization");
  }
  std::string result;
  collapsed.toUTF8String(result);
  return result;
}

namespace detail {

std::optional<TextPosition> find_invalid_utf8(std::string_view text) {
  TextPosition pos;
  std::size_t i = 0;
  const auto fail = [&]() -> std::optional<TextPosition> { return pos; };
  while (i < text.size()) {
    unsigned char lead = static_cast<unsigned char>(text[i]);
    std::size_t len;
    unsigned cp_min;
    if (lead < 0x80) {
      len = 1;
      cp_min = 0;
    } else if ((lead & 0xE0) == 0xC0) {
      len = 2;
      cp_min = 0x80;
    } else if ((lead & 0xF0) == 0xE0) {
      len = 3;
      cp_min = 0x800;
    } else if ((lead & 0xF8) == 0xF0) {
      len = 4;
      cp_min = 0x10000;
    } else {
      return fail();
    }
    if (i + len > text.size()) return fail();
    unsigned cp = len == 1 ? lead : lead & (0x7F >> len);
    for (std::size_t k = 1; k < len; ++k) {
      unsigned char cont = static_cast<unsigned char>(text[i + k]);
      if ((cont & 0xC0) != 0x80) return fail();
      cp = (cp << 6) | (cont & 0x3F);
    }
    if (cp < cp_min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      return fail();
    }
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      pos.column += len;
    }
    i += len;
  }
  return std::nullopt;
}

}  // namespace detail

}  // namespace pubgraph
