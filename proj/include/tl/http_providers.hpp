#pragma once

#include "tl/embedding.hpp"
#include "tl/generation.hpp"

#include <string>
#include <vector>

namespace tl {

// OpenAI-compatible HTTP endpoint. api selects the completion wire shape:
// "chat" posts /v1/chat/completions, "completions" posts /v1/completions.
struct LiveEndpointConfig {
    std::string base_url; // e.g. "https://api.openai.com" or "http://127.0.0.1:8089"
    std::string model;
    std::string api = "chat";
    std::string api_key; // from TL_API_KEY
    int timeout_seconds = 60;
};

/// Reads TL_API_KEY; empty when unset.
std::string api_key_from_env();

// A transport failure or 5xx throws ProviderUnavailableError, HTTP 429
// throws RateLimitedError; both are retried by the calling client.
class LiveTextProvider : public TextProvider {
public:
    explicit LiveTextProvider(LiveEndpointConfig config);
    std::string complete_once(const GenerationRequest& request) override;
    std::string name() const override;

private:
    LiveEndpointConfig config_;
};

class LiveEmbeddingProvider : public EmbeddingProvider {
public:
    explicit LiveEmbeddingProvider(LiveEndpointConfig config);
    std::vector<std::vector<double>> embed_batch(const std::vector<std::string>& texts) override;
    std::string model_id() const override;

private:
    LiveEndpointConfig config_;
};

} // namespace tl
