#include "zmt/text_ingest.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "zmt/error.hpp"

namespace zmt {
namespace {

constexpr char32_t kApostrophe = 0x27;
constexpr char32_t kRightQuote = 0x2019;
constexpr char32_t kHyphenMinus = 0x2D;
constexpr char32_t kHyphen = 0x2010;
constexpr char32_t kInvalid = 0xFFFFFFFF;

bool is_letter(char32_t cp) {
  return u_hasBinaryProperty(static_cast<UChar32>(cp), UCHAR_ALPHABETIC) != 0;
}

bool is_mark(char32_t cp) {
  const auto mask = U_GET_GC_MASK(static_cast<UChar32>(cp));
  return (mask & U_GC_M_MASK) != 0;
}

std::string nfc(std::string_view utf8) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* normalizer = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) return std::string(utf8);
  const auto source = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  icu::UnicodeString normalized = normalizer->normalize(source, status);
  if (U_FAILURE(status)) return std::string(utf8);
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

std::vector<char32_t> decode(std::string_view utf8) {
  std::vector<char32_t> cps;
  cps.reserve(utf8.size());
  const auto* bytes = reinterpret_cast<const uint8_t*>(utf8.data());
  const auto length = static_cast<int32_t>(utf8.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 cp = 0;
    U8_NEXT(bytes, i, length, cp);
    cps.push_back(cp < 0 ? kInvalid : static_cast<char32_t>(cp));
  }
  return cps;
}

void append_utf8(std::string& out, char32_t cp) {
  char buffer[U8_MAX_LENGTH];
  int32_t written = 0;
  U8_APPEND_UNSAFE(buffer, written, static_cast<UChar32>(cp));
  out.append(buffer, static_cast<std::size_t>(written));
}

std::vector<std::string> split_words(const std::vector<char32_t>& cps, bool keep_hyphens) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  };
  auto letter_at = [&](std::size_t i) {
    return i < cps.size() && cps[i] != kInvalid && is_letter(cps[i]);
  };

  for (std::size_t i = 0; i < cps.size(); ++i) {
    const char32_t cp = cps[i];
    if (cp == kInvalid) {
      flush();
    } else if (is_letter(cp)) {
      append_utf8(current, static_cast<char32_t>(u_foldCase(static_cast<UChar32>(cp),
                                                            U_FOLD_CASE_DEFAULT)));
    } else if (!current.empty() && is_mark(cp)) {
      append_utf8(current, cp);
    } else if ((cp == kApostrophe || cp == kRightQuote) && !current.empty() &&
               letter_at(i + 1)) {
      current.push_back('\'');
    } else if (keep_hyphens && (cp == kHyphenMinus || cp == kHyphen) && !current.empty() &&
               letter_at(i + 1)) {
      current.push_back('-');
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

std::vector<std::string> split_han(const std::vector<char32_t>& cps) {
  std::vector<std::string> tokens;
  for (char32_t cp : cps) {
    if (cp != kInvalid && is_cjk_unified_ideograph(cp)) {
      std::string token;
      append_utf8(token, cp);
      tokens.push_back(std::move(token));
    }
  }
  return tokens;
}

}  // namespace

bool is_cjk_unified_ideograph(char32_t cp) noexcept {
  return (cp >= 0x4E00 && cp <= 0x9FFF) ||    // main block
         (cp >= 0x3400 && cp <= 0x4DBF) ||    // extension A
         (cp >= 0x20000 && cp <= 0x2A6DF) ||  // extension B
         (cp >= 0x2A700 && cp <= 0x2EBEF) ||  // extensions C-F (+I)
         (cp >= 0x30000 && cp <= 0x323AF);    // extensions G-H
}

TokenSequence tokenize(std::string_view utf8, const TokenizerOptions& options,
                       std::string source_id) {
  const auto cps = decode(nfc(utf8));
  TokenSequence seq;
  seq.mode = options.mode;
  seq.source_id = std::move(source_id);
  seq.tokens = options.mode == TokenMode::kWords ? split_words(cps, options.keep_hyphens)
                                                 : split_han(cps);
  if (seq.tokens.empty()) {
    throw Error(ErrorKind::kNoContent, "no analyzable content");
  }
  return seq;
}

TokenMode parse_token_mode(std::string_view name) {
  if (name == "words") return TokenMode::kWords;
  if (name == "han_chars") return TokenMode::kHanChars;
  throw Error(ErrorKind::kConfiguration, "unknown token mode: " + std::string(name));
}

}  // namespace zmt
