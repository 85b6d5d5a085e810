#include "tl/corpus.hpp"

#include "tl/errors.hpp"
#include "tl/store.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tl {

using nlohmann::json;

Corpus::Corpus(std::vector<Document> documents) : documents_(std::move(documents)) {
    if (documents_.empty()) throw EmptyCorpusError("corpus has no documents");
    index_.reserve(documents_.size());
    for (std::size_t i = 0; i < documents_.size(); ++i) {
        const auto& doc = documents_[i];
        if (doc.id.empty()) throw MissingIdError("document at position " + std::to_string(i) + " has no id");
        if (doc.text.empty())
            throw MalformedRecordError("document '" + doc.id + "' has empty text");
        if (!index_.emplace(doc.id, i).second)
            throw DuplicateIdError("duplicate document id '" + doc.id + "'");
    }
}

bool Corpus::contains(std::string_view id) const {
    return index_.find(std::string(id)) != index_.end();
}

const Document& Corpus::by_id(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) throw UnknownDocIdError("unknown document id '" + std::string(id) + "'");
    return documents_[it->second];
}

CorpusFormat corpus_format_from_name(std::string_view name) {
    if (name == "jsonl") return CorpusFormat::jsonl;
    if (name == "csv") return CorpusFormat::csv;
    if (name == "txt-dir") return CorpusFormat::txt_dir;
    throw ValidationError("unknown corpus format '" + std::string(name) +
                          "'; expected jsonl, csv or txt-dir");
}

std::string corpus_format_name(CorpusFormat format) {
    switch (format) {
        case CorpusFormat::jsonl: return "jsonl";
        case CorpusFormat::csv: return "csv";
        case CorpusFormat::txt_dir: return "txt-dir";
    }
    return "jsonl";
}

std::string normalize_text(std::string_view raw) {
    std::string text;
    text.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] == '\r') {
            text.push_back('\n');
            if (i + 1 < raw.size() && raw[i + 1] == '\n') ++i;
        } else {
            text.push_back(raw[i]);
        }
    }
    const auto first = text.find_first_not_of(" \t\n\v\f\r");
    if (first == std::string::npos) return "";
    const auto last = text.find_last_not_of(" \t\n\v\f\r");
    return text.substr(first, last - first + 1);
}

namespace {

bool looks_like_header_line(std::string_view line) {
    const auto colon = line.find(':');
    if (colon == std::string_view::npos || colon == 0) return false;
    for (char c : line.substr(0, colon)) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_')) return false;
    }
    return true;
}

// Newsgroup-style preprocessing: drop the leading header block (through the
// first blank line) when the text starts with "Key: value" lines.
std::string strip_header_block(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || !looks_like_header_line(line)) return text;
    std::size_t offset = line.size() + 1;
    while (std::getline(in, line)) {
        offset += line.size() + 1;
        if (line.empty()) break;
    }
    if (offset >= text.size()) return text; // header only, keep as-is
    return text.substr(offset);
}

Document finish_document(std::string id, std::string raw_text,
                         std::map<std::string, std::string> meta, const LoadOptions& options,
                         const std::string& where) {
    std::string text = normalize_text(raw_text);
    if (options.strip_headers) text = normalize_text(strip_header_block(text));
    if (text.empty()) throw MalformedRecordError(where + ": document text is empty");
    return Document{std::move(id), std::move(text), std::move(meta)};
}

std::vector<Document> load_jsonl(const std::filesystem::path& path, const LoadOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailureError("cannot open " + path.string());
    std::vector<Document> docs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::string where = path.filename().string() + ":" + std::to_string(line_no);
        json record;
        try {
            record = json::parse(line);
        } catch (const json::parse_error& e) {
            throw MalformedRecordError(where + ": " + e.what());
        }
        if (!record.is_object()) throw MalformedRecordError(where + ": record is not an object");
        if (!record.contains("id")) throw MissingIdError(where + ": record has no \"id\"");
        if (!record["id"].is_string() || record["id"].get<std::string>().empty())
            throw MissingIdError(where + ": \"id\" must be a non-empty string");
        if (!record.contains("text") || !record["text"].is_string())
            throw MalformedRecordError(where + ": record has no string \"text\"");
        std::map<std::string, std::string> meta;
        if (record.contains("meta")) {
            if (!record["meta"].is_object())
                throw MalformedRecordError(where + ": \"meta\" must be an object");
            for (auto& [key, value] : record["meta"].items()) {
                if (!value.is_string())
                    throw MalformedRecordError(where + ": meta value for \"" + key +
                                               "\" must be a string");
                meta[key] = value.get<std::string>();
            }
        }
        docs.push_back(finish_document(record["id"].get<std::string>(),
                                       record["text"].get<std::string>(), std::move(meta),
                                       options, where));
    }
    return docs;
}

// RFC-4180: quoted fields, doubled quotes, newlines inside quotes.
std::vector<std::vector<std::string>> parse_csv(const std::string& content,
                                                const std::string& where) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool any_field = false;
    std::size_t i = 0;
    while (i < content.size()) {
        const char c = content[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < content.size() && content[i + 1] == '"') {
                    field.push_back('"');
                    i += 2;
                } else {
                    quoted = false;
                    ++i;
                }
            } else {
                field.push_back(c);
                ++i;
            }
        } else if (c == '"') {
            if (!field.empty())
                throw MalformedRecordError(where + ": stray quote in row " +
                                           std::to_string(rows.size() + 1));
            quoted = true;
            any_field = true;
            ++i;
        } else if (c == ',') {
            row.push_back(std::move(field));
            field.clear();
            any_field = true;
            ++i;
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && i + 1 < content.size() && content[i + 1] == '\n') ++i;
            ++i;
            if (any_field || !field.empty() || !row.empty()) {
                row.push_back(std::move(field));
                field.clear();
                rows.push_back(std::move(row));
                row.clear();
                any_field = false;
            }
        } else {
            field.push_back(c);
            any_field = true;
            ++i;
        }
    }
    if (quoted) throw MalformedRecordError(where + ": unterminated quoted field");
    if (any_field || !field.empty() || !row.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Document> load_csv(const std::filesystem::path& path, const LoadOptions& options) {
    const std::string content = read_file(path);
    const std::string where = path.filename().string();
    auto rows = parse_csv(content, where);
    if (rows.empty()) return {};
    const auto& header = rows.front();
    int id_col = -1;
    int text_col = -1;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (header[c] == "id") id_col = static_cast<int>(c);
        if (header[c] == "text") text_col = static_cast<int>(c);
    }
    if (text_col < 0) throw MalformedRecordError(where + ": header has no \"text\" column");
    std::vector<Document> docs;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        const std::string row_where = where + " row " + std::to_string(r);
        if (row.size() != header.size())
            throw MalformedRecordError(row_where + ": expected " + std::to_string(header.size()) +
                                       " fields, got " + std::to_string(row.size()));
        std::string id = id_col >= 0 ? row[id_col] : std::to_string(r - 1);
        if (id.empty()) throw MissingIdError(row_where + ": empty id");
        std::map<std::string, std::string> meta;
        for (std::size_t c = 0; c < header.size(); ++c) {
            if (static_cast<int>(c) == id_col || static_cast<int>(c) == text_col) continue;
            if (!row[c].empty()) meta[header[c]] = row[c];
        }
        docs.push_back(finish_document(std::move(id), row[text_col], std::move(meta), options,
                                       row_where));
    }
    return docs;
}

std::vector<Document> load_txt_dir(const std::filesystem::path& path, const LoadOptions& options) {
    if (!std::filesystem::is_directory(path))
        throw IoFailureError(path.string() + " is not a directory");
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(path)) {
        if (entry.is_regular_file() && entry.path().extension() == ".txt")
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end()); // directory order is not stable; filename order is
    std::vector<Document> docs;
    for (const auto& file : files) {
        docs.push_back(finish_document(file.stem().string(), read_file(file), {}, options,
                                       file.filename().string()));
    }
    return docs;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

} // namespace

Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format,
                   const LoadOptions& options) {
    if (!std::filesystem::exists(path)) throw IoFailureError("no such path: " + path.string());
    std::vector<Document> docs;
    switch (format) {
        case CorpusFormat::jsonl: docs = load_jsonl(path, options); break;
        case CorpusFormat::csv: docs = load_csv(path, options); break;
        case CorpusFormat::txt_dir: docs = load_txt_dir(path, options); break;
    }
    if (docs.empty()) throw EmptyCorpusError("no documents in " + path.string());
    return Corpus(std::move(docs));
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path, CorpusFormat format) {
    switch (format) {
        case CorpusFormat::jsonl: {
            atomic_write_file(path, corpus_canonical_jsonl(corpus));
            return;
        }
        case CorpusFormat::csv: {
            std::vector<std::string> meta_keys;
            for (const auto& doc : corpus.documents())
                for (const auto& [key, value] : doc.meta)
                    if (std::find(meta_keys.begin(), meta_keys.end(), key) == meta_keys.end())
                        meta_keys.push_back(key);
            std::sort(meta_keys.begin(), meta_keys.end());
            std::string out = "id,text";
            for (const auto& key : meta_keys) out += "," + csv_escape(key);
            out.push_back('\n');
            for (const auto& doc : corpus.documents()) {
                out += csv_escape(doc.id) + "," + csv_escape(doc.text);
                for (const auto& key : meta_keys) {
                    auto it = doc.meta.find(key);
                    out += "," + (it == doc.meta.end() ? std::string() : csv_escape(it->second));
                }
                out.push_back('\n');
            }
            atomic_write_file(path, out);
            return;
        }
        case CorpusFormat::txt_dir: {
            std::filesystem::create_directories(path);
            for (const auto& doc : corpus.documents())
                atomic_write_file(path / (doc.id + ".txt"), doc.text);
            return;
        }
    }
}

std::string corpus_canonical_jsonl(const Corpus& corpus) {
    std::string out;
    for (const auto& doc : corpus.documents()) {
        json record;
        record["id"] = doc.id;
        record["text"] = doc.text;
        if (!doc.meta.empty()) record["meta"] = doc.meta;
        out += record.dump(); // nlohmann::json orders keys, so this is canonical
        out.push_back('\n');
    }
    return out;
}

} // namespace tl
