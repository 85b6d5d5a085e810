#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tl {

struct Document {
    std::string id;
    std::string text; // normalized: \n line endings, outer whitespace trimmed
    std::map<std::string, std::string> meta;

    bool operator==(const Document&) const = default;
};

// Immutable after construction; iteration order is load order.
class Corpus {
public:
    explicit Corpus(std::vector<Document> documents);

    const std::vector<Document>& documents() const { return documents_; }
    std::size_t size() const { return documents_.size(); }
    bool contains(std::string_view id) const;
    const Document& by_id(std::string_view id) const; // UnknownDocIdError

private:
    std::vector<Document> documents_;
    std::unordered_map<std::string, std::size_t> index_;
};

enum class CorpusFormat { jsonl, csv, txt_dir };

CorpusFormat corpus_format_from_name(std::string_view name); // "jsonl" | "csv" | "txt-dir"
std::string corpus_format_name(CorpusFormat format);

struct LoadOptions {
    // Strip a leading RFC-822 style header block (everything through the
    // first blank line) when the document starts with "Key: value" lines.
    // Off by default; intended for newsgroup-style corpora.
    bool strip_headers = false;
};

Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format,
                   const LoadOptions& options = {});

void save_corpus(const Corpus& corpus, const std::filesystem::path& path, CorpusFormat format);

/// Line-ending normalization + outer trim applied to every document at load.
std::string normalize_text(std::string_view raw);

/// Canonical JSONL serialization of the corpus (sorted keys), used for
/// content hashing and the store snapshot.
std::string corpus_canonical_jsonl(const Corpus& corpus);

} // namespace tl
