#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tl {

/// Lowercased words split on non-alphanumeric bytes. Bytes >= 0x80 count as
/// word characters so UTF-8 text survives as whole tokens; only ASCII is
/// case-folded.
std::vector<std::string> tokenize_words(std::string_view text);

/// tokenize_words minus single-character tokens and the built-in English
/// stopword list. This is the tokenizer shared by c-TF-IDF, TF-IDF and
/// keyword overlap scoring.
std::vector<std::string> tokenize_content(std::string_view text);

bool is_stopword(std::string_view word);

/// Number of whitespace-delimited tokens. Recognizes ASCII whitespace plus
/// the common Unicode spaces (NBSP, U+2000-200A, U+2028/29, U+202F, U+205F,
/// U+3000). Hyphenated tokens count once.
int count_words(std::string_view text);

/// First n whitespace-delimited words, joined with single spaces.
std::string first_words(std::string_view text, int n);

/// Whitespace tokens of text, in order (same splitter as count_words).
std::vector<std::string> split_whitespace(std::string_view text);

} // namespace tl
