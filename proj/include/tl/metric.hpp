#pragma once

#include "tl/corpus.hpp"
#include "tl/embedding.hpp"
#include "tl/generation.hpp"
#include "tl/topic_model.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tl {

enum class DocSource { raw, summary };
std::string doc_source_name(DocSource source);
DocSource doc_source_from_name(std::string_view name);

struct TopicScore {
    int topic_id = 0;
    std::string label;
    double score = 0.0;
    int n_docs = 0; // >= 1
};

struct MetricReport {
    std::vector<TopicScore> per_topic; // ascending topic id
    double corpus_score = 0.0;         // sum(n_t * s_t) / sum(n_t)
    std::string embedding_model;
    std::string doc_source;
    std::uint64_t seed = 0;
};

/// Mean cosine between the label vector and every document vector.
double topic_score(const EmbeddingVector& label_vector,
                   const std::vector<EmbeddingVector>& doc_vectors);

/// Document-count-weighted mean of (score, n_docs) pairs, i.e. the
/// per-document mean.
double corpus_score(const std::vector<std::pair<double, int>>& per_topic);

/// Scores one label set against the topics' documents. Every labelable topic
/// must have a label (MissingLabelError). Each distinct text is embedded
/// once. doc_source summary requires the summaries map.
MetricReport evaluate(const std::vector<Label>& labels, const TopicModelResult& topics,
                      const Corpus& corpus, EmbeddingClient& embedder, DocSource doc_source,
                      const std::map<std::string, std::string>* summaries_by_doc = nullptr,
                      bool include_outliers = false, std::uint64_t seed = 0);

// {"per_topic":[{"topic_id","label","score","n_docs"}],"corpus_score",
//  "embedding_model","doc_source","seed"}
std::string report_to_json(const MetricReport& report);
MetricReport report_from_json(const std::string& json_text);

/// Human-readable score table, one row per (strategy, corpus_score), scores
/// to 4 decimals.
std::string format_score_grid(const std::vector<std::pair<std::string, double>>& rows);

} // namespace tl
