#pragma once

#include "tl/corpus.hpp"
#include "tl/embedding.hpp"
#include "tl/generation.hpp"
#include "tl/rng.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace tl {

inline constexpr int kOutlierTopicId = -1;
inline constexpr int kTopicKeywords = 10;

struct Topic {
    int id = 0; // >= 0, or kOutlierTopicId for the noise cluster
    std::vector<std::string> keywords; // exactly 10, ranked; empty allowed for the outlier
    std::vector<std::string> doc_ids;  // non-empty, distinct
};

struct TopicModelConfig {
    int k = 0;
    std::uint64_t seed = 0;
    std::string tokenizer = "content-v1";
};

struct TopicModelResult {
    std::vector<Topic> topics;             // ascending id
    std::map<std::string, int> assignment; // doc id -> topic id
    TopicModelConfig config;

    const Topic* find(int id) const;
    bool has_outlier() const;
    /// Topics eligible for selection/labeling/scoring: non-outlier unless
    /// include_outliers.
    std::vector<const Topic*> labelable_topics(bool include_outliers = false) const;
};

struct SubtopicResult {
    int parent_topic_id = 0;
    // (subtopic id, doc ids); doc id lists partition the parent's docs
    std::vector<std::pair<int, std::vector<std::string>>> subtopics;
    std::uint64_t seed = 0;
};

// Seeded k-means++ (squared Euclidean on unit vectors). Assignment ties and
// reductions are resolved in index order, so results are bit-stable.
struct KMeansResult {
    std::vector<int> assignment;
    std::vector<std::vector<double>> centers;
    std::vector<double> objective_history; // within-cluster SSD after each assignment step
    bool degenerate = false;               // all points identical -> one cluster
};

KMeansResult kmeans(const std::vector<EmbeddingVector>& points, int k, Rng& rng);

/// Clusters summaries into k topics and ranks each topic's keywords with
/// c-TF-IDF. Requires |summaries| == |vectors| >= 2 and 2 <= k <= N
/// (KTooLargeError above N). Identical vectors collapse to a single topic
/// with a warning.
TopicModelResult fit_topics(const std::vector<Summary>& summaries,
                            const std::vector<EmbeddingVector>& vectors, int k,
                            std::uint64_t seed);

/// weight(x, c) = tf(x, c) * ln(1 + A / f(x)) with tf over the class's
/// concatenated tokens, A the mean token count per class and f(x) the
/// corpus-wide count of x. Top-k by weight, ties lexicographic.
std::map<int, std::vector<std::string>> ctfidf_keywords(
    const std::map<int, std::vector<std::vector<std::string>>>& class_docs, int top_k = 10);

inline constexpr std::size_t kMinSubtopicSize = 2;

/// Re-clusters one topic's documents. Topics smaller than
/// 2 * kMinSubtopicSize come back as a single subtopic.
SubtopicResult fit_subtopics(const Topic& topic, const std::vector<Summary>& summaries,
                             const std::vector<EmbeddingVector>& vectors, int k_sub,
                             std::uint64_t seed);

int default_k(std::size_t n_docs);      // max(2, round(sqrt(n/2)))
int default_k_sub(std::size_t n_topic); // min(5, max(2, n/4))

// JSON schema:
// {"topics":[{"id":int,"keywords":[10 strings],"doc_ids":[strings]}],
//  "outlier_id":-1?}
std::string topics_to_json(const TopicModelResult& result);
TopicModelResult topics_from_json(const std::string& json_text, const Corpus& corpus);
void export_topics(const TopicModelResult& result, const std::filesystem::path& path);
TopicModelResult import_topics(const std::filesystem::path& path, const Corpus& corpus);

} // namespace tl
