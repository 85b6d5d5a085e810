#include "tl/http_providers.hpp"

#include "tl/errors.hpp"

#include <cstdlib>

#include <httplib.h>
#include <json.hpp>

namespace tl {

using nlohmann::json;

namespace {

json post_json(const LiveEndpointConfig& config, const std::string& path, const json& body) {
    httplib::Client client(config.base_url);
    client.set_connection_timeout(config.timeout_seconds, 0);
    client.set_read_timeout(config.timeout_seconds, 0);
    httplib::Headers headers;
    if (!config.api_key.empty())
        headers.emplace("Authorization", "Bearer " + config.api_key);
    auto result = client.Post(path, headers, body.dump(), "application/json");
    if (!result)
        throw ProviderUnavailableError("POST " + config.base_url + path + ": " +
                                       httplib::to_string(result.error()));
    if (result->status == 429)
        throw RateLimitedError("POST " + config.base_url + path + ": HTTP 429");
    if (result->status >= 500)
        throw ProviderUnavailableError("POST " + config.base_url + path + ": HTTP " +
                                       std::to_string(result->status));
    if (result->status != 200)
        throw ProviderError("POST " + config.base_url + path + ": HTTP " +
                            std::to_string(result->status) + " " + result->body);
    try {
        return json::parse(result->body);
    } catch (const json::parse_error& e) {
        throw ProviderError("provider returned invalid JSON: " + std::string(e.what()));
    }
}

} // namespace

std::string api_key_from_env() {
    const char* key = std::getenv("TL_API_KEY");
    return key ? key : "";
}

LiveTextProvider::LiveTextProvider(LiveEndpointConfig config) : config_(std::move(config)) {
    if (config_.base_url.empty()) throw ValidationError("live provider needs a base_url");
    if (config_.api != "chat" && config_.api != "completions")
        throw ValidationError("provider api must be 'chat' or 'completions'");
}

std::string LiveTextProvider::name() const {
    return "live:" + config_.model;
}

std::string LiveTextProvider::complete_once(const GenerationRequest& request) {
    if (config_.api == "chat") {
        json body{{"model", config_.model},
                  {"temperature", request.temperature},
                  {"messages", json::array({{{"role", "user"}, {"content", request.prompt}}})}};
        auto response = post_json(config_, "/v1/chat/completions", body);
        try {
            return response.at("choices").at(0).at("message").at("content").get<std::string>();
        } catch (const json::exception& e) {
            throw ProviderError("unexpected chat response shape: " + std::string(e.what()));
        }
    }
    json body{{"model", config_.model},
              {"temperature", request.temperature},
              {"prompt", request.prompt},
              {"max_tokens", 256}};
    auto response = post_json(config_, "/v1/completions", body);
    try {
        return response.at("choices").at(0).at("text").get<std::string>();
    } catch (const json::exception& e) {
        throw ProviderError("unexpected completions response shape: " + std::string(e.what()));
    }
}

LiveEmbeddingProvider::LiveEmbeddingProvider(LiveEndpointConfig config)
    : config_(std::move(config)) {
    if (config_.base_url.empty()) throw ValidationError("live embeddings need a base_url");
}

std::string LiveEmbeddingProvider::model_id() const {
    return config_.model;
}

std::vector<std::vector<double>> LiveEmbeddingProvider::embed_batch(
    const std::vector<std::string>& texts) {
    json body{{"model", config_.model}, {"input", texts}};
    auto response = post_json(config_, "/v1/embeddings", body);
    std::vector<std::vector<double>> out;
    try {
        for (const auto& row : response.at("data"))
            out.push_back(row.at("embedding").get<std::vector<double>>());
    } catch (const json::exception& e) {
        throw ProviderError("unexpected embeddings response shape: " + std::string(e.what()));
    }
    return out;
}

} // namespace tl
