#pragma once

#include "tl/generation.hpp" // RetryPolicy

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace tl {

// Unit-normalized unless the zero vector; norm is the norm of the stored
// values (1.0, or 0.0 for the zero vector).
struct EmbeddingVector {
    std::vector<double> values;
    double norm = 0.0;

    bool operator==(const EmbeddingVector&) const = default;
};

/// Normalizes in 64-bit arithmetic; the zero vector passes through unchanged.
EmbeddingVector make_unit_vector(std::vector<double> raw);

/// dot(u,v) / (|u||v|); 0 when either vector is zero. DimensionMismatchError
/// when lengths differ.
double cosine(const EmbeddingVector& u, const EmbeddingVector& v);
double cosine(const std::vector<double>& u, const std::vector<double>& v);

class EmbeddingProvider {
public:
    virtual ~EmbeddingProvider() = default;
    /// One raw (not yet normalized) vector per text, same order.
    virtual std::vector<std::vector<double>> embed_batch(const std::vector<std::string>& texts) = 0;
    virtual std::string model_id() const = 0;
};

// Deterministic bag-of-buckets embedding; the metric's offline oracle.
//
// Rule: tokenize to lowercase alphanumeric words, bucket each word by
// fnv1a64(word) % dim, count, unit-normalize. Shared words => similarity.
class MockEmbeddingProvider : public EmbeddingProvider {
public:
    explicit MockEmbeddingProvider(int dim = 16);
    std::vector<std::vector<double>> embed_batch(const std::vector<std::string>& texts) override;
    std::string model_id() const override;
    int dim() const { return dim_; }

private:
    int dim_;
};

// hash(model_id, text) -> JSON array of doubles. nlohmann round-trips
// doubles exactly, so cached vectors are bitwise-stable.
class EmbeddingCache {
public:
    EmbeddingCache() = default;
    explicit EmbeddingCache(std::filesystem::path dir);

    static std::string key_for(const std::string& model_id, const std::string& text);

    std::optional<std::vector<double>> get(const std::string& key);
    void put(const std::string& key, const std::vector<double>& values);

private:
    std::filesystem::path dir_;
    std::map<std::string, std::vector<double>, std::less<>> memory_;
    mutable std::mutex mutex_;
};

class EmbeddingClient {
public:
    EmbeddingClient(std::shared_ptr<EmbeddingProvider> provider,
                    std::shared_ptr<EmbeddingCache> cache, RetryPolicy retry = {});

    /// One unit vector per text, same order. Uncached texts go to the
    /// provider in a single batch; a batch with inconsistent dimensions is
    /// DimensionMismatchError.
    std::vector<EmbeddingVector> embed_texts(const std::vector<std::string>& texts);

    const std::string& model_id() const { return model_id_; }

private:
    std::shared_ptr<EmbeddingProvider> provider_;
    std::shared_ptr<EmbeddingCache> cache_;
    RetryPolicy retry_;
    std::string model_id_;
};

} // namespace tl
