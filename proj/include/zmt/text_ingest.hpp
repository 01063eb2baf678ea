#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace zmt {

enum class TokenMode { kWords, kHanChars };

struct TokenizerOptions {
  TokenMode mode = TokenMode::kWords;
  // Keep '-' (and U+2010) between two letters as part of the word.
  bool keep_hyphens = false;
};

struct TokenSequence {
  std::vector<std::string> tokens;
  TokenMode mode = TokenMode::kWords;
  std::string source_id;

  std::size_t size() const noexcept { return tokens.size(); }
  bool empty() const noexcept { return tokens.empty(); }
};

// Splits UTF-8 text into canonical tokens.
//
// Words mode: maximal runs of Unicode alphabetic code points, case-folded
// (simple folding). An apostrophe (U+0027 or U+2019, stored as U+0027) is kept
// only when a letter sits on both sides. Digits, punctuation and everything
// else separate words.
//
// Han mode: every code point in the CJK Unified Ideographs blocks is a token;
// all other input is dropped.
//
// Throws Error(kNoContent) when no token survives. Invalid UTF-8 sequences are
// treated as separators.
TokenSequence tokenize(std::string_view utf8, const TokenizerOptions& options = {},
                       std::string source_id = {});

bool is_cjk_unified_ideograph(char32_t cp) noexcept;

TokenMode parse_token_mode(std::string_view name);

}  // namespace zmt
