#pragma once

#include "tl/corpus.hpp"
#include "tl/http_providers.hpp"
#include "tl/metric.hpp"
#include "tl/selection.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace tl {

// Minimal INI: [section] headers, key = value lines, '#'/';' comments.
// Section and key order preserved for error reporting.
struct IniDoc {
    std::map<std::string, std::map<std::string, std::string>> sections;

    bool has(const std::string& section, const std::string& key) const;
    std::string get(const std::string& section, const std::string& key,
                    const std::string& fallback = "") const;
};

IniDoc parse_ini(const std::string& text);
IniDoc load_ini(const std::filesystem::path& path);

struct RunConfig {
    // [corpus]
    std::filesystem::path corpus_path;
    CorpusFormat corpus_format = CorpusFormat::jsonl;
    bool strip_headers = false;

    // [provider]
    std::string provider = "mock"; // mock | live
    LiveEndpointConfig text_endpoint;

    // [embedding]
    std::string embedding_provider = "mock"; // mock | live
    LiveEndpointConfig embedding_endpoint;
    int embedding_dim = 16; // mock dimension

    // [run]
    int k = 0;     // 0 -> default_k(N)
    int k_sub = 0; // 0 -> default_k_sub(topic size)
    std::uint64_t seed = 0;
    std::vector<Strategy> strategies{Strategy::overlap, Strategy::centrality,
                                     Strategy::dominant_subtopic, Strategy::diverse};
    DocSource doc_source = DocSource::raw;
    bool include_outliers = false;
    std::string model_on = "summary"; // summary | raw (ablation escape hatch)
    std::filesystem::path out_dir = "out";
    std::filesystem::path topics_import; // use an external topic assignment
    int max_inflight = 4;

    // [prompts]
    std::string summarize_template; // empty -> default
    std::string label_template;
};

/// Strict parse: unknown sections/keys or out-of-range values are
/// ValidationError. Relative paths resolve against the config file's
/// directory.
RunConfig load_run_config(const std::filesystem::path& path);
RunConfig run_config_from_ini(const IniDoc& ini, const std::filesystem::path& base_dir);

/// Fail-fast checks that need no network: strategy list non-empty, live
/// providers have TL_API_KEY, corpus path exists.
void validate_run_config(const RunConfig& config);

/// Canonical key=value serialization of everything that affects results
/// (out_dir excluded); hashed for drift detection.
std::string config_canonical(const RunConfig& config);
std::string config_fingerprint(const RunConfig& config);

std::vector<Strategy> parse_strategy_list(const std::string& csv);

} // namespace tl
