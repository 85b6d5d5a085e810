#pragma once

#include "tl/corpus.hpp"
#include "tl/prompt.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace tl {

struct GenerationRequest {
    std::string prompt; // non-empty
    int max_words_hint = 0;
    double temperature = 0.0;
    std::string model_id;
};

struct Summary {
    std::string doc_id;
    std::string text;
    int word_count = 0; // whitespace-token count of text
    std::string provider;
    bool truncated = false;
};

struct Label {
    int topic_id = 0;
    std::string text;
    int word_count = 0;
    std::string strategy;
    bool fallback_used = false; // 2 <= word_count <= 5 whenever false
};

// Single-attempt transport. Retries, caching and validation live in
// GenerationClient.
class TextProvider {
public:
    virtual ~TextProvider() = default;
    virtual std::string complete_once(const GenerationRequest& request) = 0;
    virtual std::string name() const = 0;
};

// Deterministic stand-in for a hosted LLM; a pure function of the prompt.
//
// Rule (also the test oracle):
//   - prompt containing "keywords:"  -> the comma-separated list after that
//     marker (up to " and representative summaries" or end of line) is
//     parsed and the first three entries are joined with single spaces;
//   - any other prompt is treated as a summarization request: the text after
//     the first ':' (or the whole prompt when there is none) is the source
//     document, and the first min(30, words) whitespace words are returned.
class MockTextProvider : public TextProvider {
public:
    std::string complete_once(const GenerationRequest& request) override;
    std::string name() const override { return "mock"; }
};

struct RetryPolicy {
    int transport_retries = 3;                     // attempts = retries + 1
    std::chrono::milliseconds base_delay{1000};    // 1s, 2s, 4s
    // Injectable so tests never sleep. Defaults to std::this_thread::sleep_for.
    std::function<void(std::chrono::milliseconds)> sleeper;
};

// Disk-backed completion cache; entries are raw completion bytes keyed by
// hash(model_id, prompt, temperature). Safe under concurrent access.
class CompletionCache {
public:
    CompletionCache() = default; // in-memory only
    explicit CompletionCache(std::filesystem::path dir);

    static std::string key_for(const GenerationRequest& request);

    std::optional<std::string> get(const std::string& key);
    void put(const std::string& key, std::string_view value);

private:
    std::filesystem::path dir_;
    std::map<std::string, std::string, std::less<>> memory_;
    mutable std::mutex mutex_;
};

struct GenerationDefaults {
    std::string model_id = "mock";
    double temperature = 0.0;
};

class GenerationClient {
public:
    GenerationClient(std::shared_ptr<TextProvider> provider,
                     std::shared_ptr<CompletionCache> cache,
                     GenerationDefaults defaults = {},
                     RetryPolicy retry = {});

    /// Cached + retried completion. Transport failures are retried with
    /// exponential backoff, then surface as ProviderUnavailable/RateLimited;
    /// an empty completion is EmptyCompletionError.
    std::string complete(const GenerationRequest& request);

    /// 20-40 word summary. Over-long completions get one corrective retry,
    /// then a hard truncation to 40 words (truncated=true). Short ones are
    /// accepted with a warning: a short source cannot be lengthened.
    Summary summarize_document(const Document& doc, const PromptTemplate& tmpl);

    /// 2-5 word topic name. One corrective retry on a word-count violation,
    /// then fallback to the top three keywords joined (fallback_used=true).
    Label generate_label(int topic_id, const std::vector<std::string>& keywords,
                         const std::vector<Summary>& summaries, const PromptTemplate& tmpl,
                         const std::string& strategy);

    const GenerationDefaults& defaults() const { return defaults_; }
    const std::string& provider_name() const { return provider_name_; }

private:
    std::string complete_with_retries(const GenerationRequest& request);

    std::shared_ptr<TextProvider> provider_;
    std::shared_ptr<CompletionCache> cache_;
    GenerationDefaults defaults_;
    RetryPolicy retry_;
    std::string provider_name_;
};

/// Trims whitespace, strips one layer of wrapping quotes and a trailing
/// period. Hosted models decorate short answers; mock output passes through.
std::string clean_label_text(std::string_view raw);

} // namespace tl
