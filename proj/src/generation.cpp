#include "tl/generation.hpp"

#include "tl/errors.hpp"
#include "tl/hash.hpp"
#include "tl/store.hpp"
#include "tl/text.hpp"

#include <iostream>
#include <sstream>
#include <thread>

namespace tl {

namespace {

constexpr int kSummaryMinWords = 20;
constexpr int kSummaryMaxWords = 40;
constexpr int kLabelMinWords = 2;
constexpr int kLabelMaxWords = 5;
constexpr int kMockSummaryWords = 30;
constexpr const char* kKeywordMarker = "keywords:";
constexpr const char* kSummariesMarker = " and representative summaries";

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

} // namespace

std::string MockTextProvider::complete_once(const GenerationRequest& request) {
    if (request.prompt.empty()) throw ValidationError("prompt must be non-empty");
    const auto marker = request.prompt.find(kKeywordMarker);
    if (marker != std::string::npos) {
        auto rest = request.prompt.substr(marker + std::string_view(kKeywordMarker).size());
        auto end = rest.find(kSummariesMarker);
        if (end == std::string::npos) end = rest.find('\n');
        if (end != std::string::npos) rest = rest.substr(0, end);
        std::string label;
        int taken = 0;
        std::size_t start = 0;
        while (taken < 3 && start <= rest.size()) {
            auto comma = rest.find(',', start);
            const auto piece = trim(rest.substr(start, comma == std::string::npos
                                                           ? std::string::npos
                                                           : comma - start));
            if (!piece.empty()) {
                if (taken > 0) label.push_back(' ');
                label += piece;
                ++taken;
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return label;
    }
    const auto colon = request.prompt.find(':');
    const std::string document =
        colon == std::string::npos ? request.prompt : request.prompt.substr(colon + 1);
    return first_words(document, kMockSummaryWords);
}

CompletionCache::CompletionCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::string CompletionCache::key_for(const GenerationRequest& request) {
    std::ostringstream material;
    material.precision(17);
    material << request.model_id << '\x1f' << request.temperature << '\x1f' << request.prompt;
    return sha256_hex(material.str());
}

std::optional<std::string> CompletionCache::get(const std::string& key) {
    std::lock_guard lock(mutex_);
    if (auto it = memory_.find(key); it != memory_.end()) return it->second;
    if (!dir_.empty()) {
        const auto path = dir_ / (key + ".txt");
        if (std::filesystem::exists(path)) {
            auto value = read_file(path);
            memory_[key] = value;
            return value;
        }
    }
    return std::nullopt;
}

void CompletionCache::put(const std::string& key, std::string_view value) {
    std::lock_guard lock(mutex_);
    memory_[key] = std::string(value);
    if (!dir_.empty()) atomic_write_file(dir_ / (key + ".txt"), value);
}

GenerationClient::GenerationClient(std::shared_ptr<TextProvider> provider,
                                   std::shared_ptr<CompletionCache> cache,
                                   GenerationDefaults defaults, RetryPolicy retry)
    : provider_(std::move(provider)),
      cache_(std::move(cache)),
      defaults_(std::move(defaults)),
      retry_(std::move(retry)) {
    if (!provider_) throw ValidationError("generation client needs a provider");
    if (!cache_) cache_ = std::make_shared<CompletionCache>();
    if (!retry_.sleeper)
        retry_.sleeper = [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
    provider_name_ = provider_->name();
}

std::string GenerationClient::complete_with_retries(const GenerationRequest& request) {
    auto delay = retry_.base_delay;
    for (int attempt = 0;; ++attempt) {
        try {
            return provider_->complete_once(request);
        } catch (const ProviderUnavailableError&) {
            if (attempt >= retry_.transport_retries) throw;
        } catch (const RateLimitedError&) {
            if (attempt >= retry_.transport_retries) throw;
        }
        retry_.sleeper(delay);
        delay *= 2;
    }
}

std::string GenerationClient::complete(const GenerationRequest& request) {
    if (request.prompt.empty()) throw ValidationError("prompt must be non-empty");
    const auto key = CompletionCache::key_for(request);
    if (auto hit = cache_->get(key)) return *hit;
    auto text = complete_with_retries(request);
    if (trim(text).empty())
        throw EmptyCompletionError("provider '" + provider_name_ + "' returned an empty completion");
    cache_->put(key, text);
    return text;
}

Summary GenerationClient::summarize_document(const Document& doc, const PromptTemplate& tmpl) {
    tmpl.require_placeholders({"document"});
    GenerationRequest request{tmpl.render({{"document", doc.text}}), kSummaryMaxWords,
                              defaults_.temperature, defaults_.model_id};
    std::string text = trim(complete(request));
    int words = count_words(text);
    if (words > kSummaryMaxWords) {
        GenerationRequest retry_request = request;
        retry_request.prompt += "\n(Use at most 40 words.)";
        text = trim(complete(retry_request));
        words = count_words(text);
    }
    bool truncated = false;
    if (words > kSummaryMaxWords) {
        text = first_words(text, kSummaryMaxWords);
        words = kSummaryMaxWords;
        truncated = true;
    }
    if (words < kSummaryMinWords) {
        std::cerr << "[warn] summary of '" << doc.id << "' has " << words
                  << " words (target 20-40); source too short to lengthen\n";
    }
    return Summary{doc.id, text, words, provider_name_, truncated};
}

std::string clean_label_text(std::string_view raw) {
    std::string text = trim(raw);
    if (text.size() >= 2) {
        const char first = text.front();
        const char last = text.back();
        if ((first == '"' && last == '"') || (first == '\'' && last == '\'')) {
            text = trim(text.substr(1, text.size() - 2));
        }
    }
    while (!text.empty() && (text.back() == '.' || text.back() == '!')) text.pop_back();
    return trim(text);
}

Label GenerationClient::generate_label(int topic_id, const std::vector<std::string>& keywords,
                                       const std::vector<Summary>& summaries,
                                       const PromptTemplate& tmpl, const std::string& strategy) {
    if (keywords.empty()) throw ValidationError("generate_label needs keywords");
    if (summaries.empty()) throw ValidationError("generate_label needs summaries");
    tmpl.require_placeholders({"keywords", "summaries"});

    std::string keyword_list;
    for (std::size_t i = 0; i < keywords.size(); ++i) {
        if (i > 0) keyword_list += ", ";
        keyword_list += keywords[i];
    }
    std::string summary_list;
    for (std::size_t i = 0; i < summaries.size(); ++i) {
        if (i > 0) summary_list += "; ";
        summary_list += summaries[i].text;
    }

    GenerationRequest request{tmpl.render({{"keywords", keyword_list}, {"summaries", summary_list}}),
                              kLabelMaxWords, defaults_.temperature, defaults_.model_id};

    auto is_valid = [](const std::string& text) {
        const int words = count_words(text);
        return words >= kLabelMinWords && words <= kLabelMaxWords;
    };

    // An empty completion counts as a validation failure here, not a hard
    // error: the label path must always emit a Label (valid or fallback).
    auto attempt = [&](const GenerationRequest& r) -> std::string {
        try {
            return clean_label_text(complete(r));
        } catch (const EmptyCompletionError&) {
            return "";
        }
    };

    std::string text = attempt(request);
    if (!is_valid(text)) {
        GenerationRequest retry_request = request;
        retry_request.prompt += "\nRespond with only two to five words.";
        text = attempt(retry_request);
    }

    if (!is_valid(text)) {
        std::string fallback;
        const std::size_t take = std::min<std::size_t>(3, keywords.size());
        for (std::size_t i = 0; i < take; ++i) {
            if (i > 0) fallback.push_back(' ');
            fallback += keywords[i];
        }
        return Label{topic_id, fallback, count_words(fallback), strategy, true};
    }
    return Label{topic_id, text, count_words(text), strategy, false};
}

} // namespace tl
