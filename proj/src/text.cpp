#include "tl/text.hpp"

#include <cctype>
#include <unordered_set>

namespace tl {

namespace {

bool is_word_byte(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c >= 0x80; // keep UTF-8 sequences intact
}

// Byte length of the whitespace character at s[i], or 0. ASCII whitespace
// plus NBSP, ogham space, U+2000-200A, U+2028/29, U+202F, U+205F, U+3000.
std::size_t whitespace_len(std::string_view s, std::size_t i) {
    const unsigned char c0 = static_cast<unsigned char>(s[i]);
    if (c0 == ' ' || c0 == '\t' || c0 == '\n' || c0 == '\r' || c0 == '\v' || c0 == '\f') return 1;
    const std::size_t left = s.size() - i;
    auto b = [&](std::size_t k) { return static_cast<unsigned char>(s[i + k]); };
    if (c0 == 0xC2 && left >= 2 && b(1) == 0xA0) return 2;
    if (c0 == 0xE1 && left >= 3 && b(1) == 0x9A && b(2) == 0x80) return 3;
    if (c0 == 0xE2 && left >= 3) {
        if (b(1) == 0x80 &&
            ((b(2) >= 0x80 && b(2) <= 0x8A) || b(2) == 0xA8 || b(2) == 0xA9 || b(2) == 0xAF))
            return 3;
        if (b(1) == 0x81 && b(2) == 0x9F) return 3;
    }
    if (c0 == 0xE3 && left >= 3 && b(1) == 0x80 && b(2) == 0x80) return 3;
    return 0;
}

} // namespace

std::vector<std::string> tokenize_words(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (unsigned char c : text) {
        if (is_word_byte(c)) {
            current.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a')
                                                   : static_cast<char>(c));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

std::vector<std::string> tokenize_content(std::string_view text) {
    std::vector<std::string> tokens;
    for (auto& token : tokenize_words(text)) {
        if (token.size() <= 1) continue;
        if (is_stopword(token)) continue;
        tokens.push_back(std::move(token));
    }
    return tokens;
}

bool is_stopword(std::string_view word) {
    // NLTK's English list, minus apostrophes (the tokenizer splits on them,
    // so contractions arrive as stem + suffix fragments).
    static const std::unordered_set<std::string_view> kStopwords = {
        "about", "above", "after", "again", "against", "ain", "all", "am", "an", "and", "any",
        "are", "aren", "as", "at", "be", "because", "been", "before", "being", "below", "between",
        "both", "but", "by", "can", "couldn", "did", "didn", "do", "does", "doesn", "doing",
        "don", "down", "during", "each", "few", "for", "from", "further", "had", "hadn", "has",
        "hasn", "have", "haven", "having", "he", "her", "here", "hers", "herself", "him",
        "himself", "his", "how", "if", "in", "into", "is", "isn", "it", "its", "itself", "just",
        "ll", "ma", "me", "mightn", "more", "most", "mustn", "my", "myself", "needn", "no",
        "nor", "not", "now", "of", "off", "on", "once", "only", "or", "other", "our", "ours",
        "ourselves", "out", "over", "own", "re", "same", "shan", "she", "should", "shouldn",
        "so", "some", "such", "than", "that", "the", "their", "theirs", "them", "themselves",
        "then", "there", "these", "they", "this", "those", "through", "to", "too", "under",
        "until", "up", "ve", "very", "was", "wasn", "we", "were", "weren", "what", "when",
        "where", "which", "while", "who", "whom", "why", "will", "with", "won", "wouldn",
        "you", "your", "yours", "yourself", "yourselves"};
    return kStopwords.contains(word);
}

std::vector<std::string> split_whitespace(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    std::size_t i = 0;
    while (i < text.size()) {
        const std::size_t ws = whitespace_len(text, i);
        if (ws > 0) {
            if (!current.empty()) {
                tokens.push_back(std::move(current));
                current.clear();
            }
            i += ws;
        } else {
            current.push_back(text[i]);
            ++i;
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

int count_words(std::string_view text) {
    return static_cast<int>(split_whitespace(text).size());
}

std::string first_words(std::string_view text, int n) {
    if (n <= 0) return "";
    const auto tokens = split_whitespace(text);
    std::string out;
    const std::size_t take = std::min(tokens.size(), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < take; ++i) {
        if (i > 0) out.push_back(' ');
        out += tokens[i];
    }
    return out;
}

} // namespace tl
