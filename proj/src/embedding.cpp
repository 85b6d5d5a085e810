#include "tl/embedding.hpp"

#include "tl/errors.hpp"
#include "tl/hash.hpp"
#include "tl/store.hpp"
#include "tl/text.hpp"

#include <cmath>
#include <thread>

#include <json.hpp>

namespace tl {

EmbeddingVector make_unit_vector(std::vector<double> raw) {
    double sum_sq = 0.0;
    for (double v : raw) {
        if (!std::isfinite(v)) throw ValidationError("embedding has a non-finite entry");
        sum_sq += v * v;
    }
    if (sum_sq == 0.0) return EmbeddingVector{std::move(raw), 0.0};
    const double norm = std::sqrt(sum_sq);
    for (double& v : raw) v /= norm;
    return EmbeddingVector{std::move(raw), 1.0};
}

double cosine(const std::vector<double>& u, const std::vector<double>& v) {
    if (u.size() != v.size())
        throw DimensionMismatchError("cosine: dimensions differ (" + std::to_string(u.size()) +
                                     " vs " + std::to_string(v.size()) + ")");
    double dot = 0.0, uu = 0.0, vv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        dot += u[i] * v[i];
        uu += u[i] * u[i];
        vv += v[i] * v[i];
    }
    if (uu == 0.0 || vv == 0.0) return 0.0;
    return dot / (std::sqrt(uu) * std::sqrt(vv));
}

double cosine(const EmbeddingVector& u, const EmbeddingVector& v) {
    return cosine(u.values, v.values);
}

MockEmbeddingProvider::MockEmbeddingProvider(int dim) : dim_(dim) {
    if (dim < 1) throw ValidationError("mock embedding dimension must be >= 1");
}

std::vector<std::vector<double>> MockEmbeddingProvider::embed_batch(
    const std::vector<std::string>& texts) {
    std::vector<std::vector<double>> out;
    out.reserve(texts.size());
    for (const auto& text : texts) {
        std::vector<double> counts(static_cast<std::size_t>(dim_), 0.0);
        for (const auto& word : tokenize_words(text))
            counts[fnv1a64(word) % static_cast<std::uint64_t>(dim_)] += 1.0;
        out.push_back(std::move(counts));
    }
    return out;
}

std::string MockEmbeddingProvider::model_id() const {
    return "mock-d" + std::to_string(dim_);
}

EmbeddingCache::EmbeddingCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::string EmbeddingCache::key_for(const std::string& model_id, const std::string& text) {
    return sha256_hex(model_id + '\x1f' + text);
}

std::optional<std::vector<double>> EmbeddingCache::get(const std::string& key) {
    std::lock_guard lock(mutex_);
    if (auto it = memory_.find(key); it != memory_.end()) return it->second;
    if (!dir_.empty()) {
        const auto path = dir_ / (key + ".json");
        if (std::filesystem::exists(path)) {
            auto values = nlohmann::json::parse(read_file(path)).get<std::vector<double>>();
            memory_[key] = values;
            return values;
        }
    }
    return std::nullopt;
}

void EmbeddingCache::put(const std::string& key, const std::vector<double>& values) {
    std::lock_guard lock(mutex_);
    memory_[key] = values;
    if (!dir_.empty()) atomic_write_file(dir_ / (key + ".json"), nlohmann::json(values).dump());
}

EmbeddingClient::EmbeddingClient(std::shared_ptr<EmbeddingProvider> provider,
                                 std::shared_ptr<EmbeddingCache> cache, RetryPolicy retry)
    : provider_(std::move(provider)), cache_(std::move(cache)), retry_(std::move(retry)) {
    if (!provider_) throw ValidationError("embedding client needs a provider");
    if (!cache_) cache_ = std::make_shared<EmbeddingCache>();
    if (!retry_.sleeper)
        retry_.sleeper = [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
    model_id_ = provider_->model_id();
}

std::vector<EmbeddingVector> EmbeddingClient::embed_texts(const std::vector<std::string>& texts) {
    for (const auto& text : texts)
        if (text.empty()) throw ValidationError("cannot embed an empty string");

    std::vector<std::optional<std::vector<double>>> resolved(texts.size());
    std::vector<std::string> misses;
    std::vector<std::size_t> miss_positions;
    for (std::size_t i = 0; i < texts.size(); ++i) {
        if (auto hit = cache_->get(EmbeddingCache::key_for(model_id_, texts[i]))) {
            resolved[i] = std::move(*hit);
        } else {
            misses.push_back(texts[i]);
            miss_positions.push_back(i);
        }
    }

    if (!misses.empty()) {
        std::vector<std::vector<double>> raw;
        auto delay = retry_.base_delay;
        for (int attempt = 0;; ++attempt) {
            try {
                raw = provider_->embed_batch(misses);
                break;
            } catch (const ProviderUnavailableError&) {
                if (attempt >= retry_.transport_retries) throw;
            } catch (const RateLimitedError&) {
                if (attempt >= retry_.transport_retries) throw;
            }
            retry_.sleeper(delay);
            delay *= 2;
        }
        if (raw.size() != misses.size())
            throw ProviderError("embedding provider returned " + std::to_string(raw.size()) +
                                " vectors for " + std::to_string(misses.size()) + " texts");
        for (std::size_t i = 1; i < raw.size(); ++i) {
            if (raw[i].size() != raw[0].size())
                throw DimensionMismatchError(
                    "embedding batch has inconsistent dimensions (" +
                    std::to_string(raw[0].size()) + " vs " + std::to_string(raw[i].size()) + ")");
        }
        for (std::size_t i = 0; i < raw.size(); ++i) {
            auto unit = make_unit_vector(std::move(raw[i]));
            cache_->put(EmbeddingCache::key_for(model_id_, misses[i]), unit.values);
            resolved[miss_positions[i]] = std::move(unit.values);
        }
    }

    std::vector<EmbeddingVector> out;
    out.reserve(texts.size());
    std::size_t dim = 0;
    for (auto& values : resolved) {
        if (!dim) dim = values->size();
        if (values->size() != dim)
            throw DimensionMismatchError("cached and fresh embeddings disagree on dimension");
        double norm = 0.0;
        for (double v : *values) norm += v * v;
        out.push_back(EmbeddingVector{std::move(*values), norm == 0.0 ? 0.0 : 1.0});
    }
    return out;
}

} // namespace tl
