#include "tl/topic_model.hpp"

#include "tl/errors.hpp"
#include "tl/store.hpp"
#include "tl/text.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <set>
#include <unordered_map>

#include <json.hpp>

namespace tl {

using nlohmann::json;

const Topic* TopicModelResult::find(int id) const {
    for (const auto& topic : topics)
        if (topic.id == id) return &topic;
    return nullptr;
}

bool TopicModelResult::has_outlier() const {
    return find(kOutlierTopicId) != nullptr;
}

std::vector<const Topic*> TopicModelResult::labelable_topics(bool include_outliers) const {
    std::vector<const Topic*> out;
    for (const auto& topic : topics)
        if (include_outliers || topic.id != kOutlierTopicId) out.push_back(&topic);
    return out;
}

namespace {

double squared_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

std::vector<double> cluster_mean(const std::vector<const std::vector<double>*>& members,
                                 std::size_t dim) {
    std::vector<double> mean(dim, 0.0);
    for (const auto* m : members)
        for (std::size_t j = 0; j < dim; ++j) mean[j] += (*m)[j];
    for (double& v : mean) v /= static_cast<double>(members.size());
    return mean;
}

} // namespace

KMeansResult kmeans(const std::vector<EmbeddingVector>& points, int k, Rng& rng) {
    const std::size_t n = points.size();
    if (n < 1) throw ValidationError("kmeans needs at least one point");
    const std::size_t dim = points[0].values.size();
    for (const auto& p : points)
        if (p.values.size() != dim)
            throw DimensionMismatchError("kmeans points have inconsistent dimensions");

    bool all_identical = true;
    for (std::size_t i = 1; i < n && all_identical; ++i)
        all_identical = points[i].values == points[0].values;
    if (all_identical) {
        std::cerr << "[warn] all vectors identical; returning a single cluster\n";
        return KMeansResult{std::vector<int>(n, 0), {points[0].values}, {0.0}, true};
    }

    if (k < 2) throw ValidationError("k must be >= 2");
    if (static_cast<std::size_t>(k) > n)
        throw KTooLargeError("k=" + std::to_string(k) + " exceeds the number of points (" +
                             std::to_string(n) + ")");

    // k-means++ seeding: first center uniform, then D^2-weighted.
    std::vector<std::vector<double>> centers;
    centers.reserve(static_cast<std::size_t>(k));
    centers.push_back(points[bounded_uniform(rng, n)].values);
    std::vector<double> dist2(n);
    for (std::size_t i = 0; i < n; ++i) dist2[i] = squared_distance(points[i].values, centers[0]);
    while (centers.size() < static_cast<std::size_t>(k)) {
        double total = 0.0;
        for (double d : dist2) total += d;
        std::size_t chosen;
        if (total <= 0.0) {
            chosen = bounded_uniform(rng, n);
        } else {
            const double r = uniform01(rng) * total;
            double cum = 0.0;
            chosen = n - 1;
            for (std::size_t i = 0; i < n; ++i) {
                cum += dist2[i];
                if (cum > r) {
                    chosen = i;
                    break;
                }
            }
        }
        centers.push_back(points[chosen].values);
        for (std::size_t i = 0; i < n; ++i)
            dist2[i] = std::min(dist2[i], squared_distance(points[i].values, centers.back()));
    }

    std::vector<int> assignment(n, -1);
    std::vector<double> history;
    double prev_objective = -1.0;
    constexpr int kMaxIterations = 100;
    constexpr double kRelTol = 1e-6;

    for (int iteration = 0; iteration < kMaxIterations; ++iteration) {
        bool changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            int best = 0;
            double best_d = squared_distance(points[i].values, centers[0]);
            for (int c = 1; c < k; ++c) {
                const double d = squared_distance(points[i].values, centers[c]);
                if (d < best_d) { // ties keep the lowest index
                    best_d = d;
                    best = c;
                }
            }
            if (assignment[i] != best) changed = true;
            assignment[i] = best;
        }

        // Empty-cluster repair: reseed from the point farthest from its
        // center. Its distance drops to zero, so the objective cannot rise.
        std::vector<std::size_t> counts(static_cast<std::size_t>(k), 0);
        for (int a : assignment) ++counts[static_cast<std::size_t>(a)];
        for (int c = 0; c < k; ++c) {
            if (counts[static_cast<std::size_t>(c)] > 0) continue;
            std::size_t farthest = 0;
            double farthest_d = -1.0;
            for (std::size_t i = 0; i < n; ++i) {
                if (counts[static_cast<std::size_t>(assignment[i])] <= 1) continue;
                const double d = squared_distance(
                    points[i].values, centers[static_cast<std::size_t>(assignment[i])]);
                if (d > farthest_d) {
                    farthest_d = d;
                    farthest = i;
                }
            }
            centers[static_cast<std::size_t>(c)] = points[farthest].values;
            --counts[static_cast<std::size_t>(assignment[farthest])];
            assignment[farthest] = c;
            ++counts[static_cast<std::size_t>(c)];
            changed = true;
        }

        double objective = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            objective +=
                squared_distance(points[i].values, centers[static_cast<std::size_t>(assignment[i])]);
        history.push_back(objective);

        if (!changed) break;
        if (prev_objective >= 0.0 &&
            (prev_objective - objective) < kRelTol * std::max(prev_objective, 1e-12))
            break;
        prev_objective = objective;

        std::vector<std::vector<const std::vector<double>*>> members(
            static_cast<std::size_t>(k));
        for (std::size_t i = 0; i < n; ++i)
            members[static_cast<std::size_t>(assignment[i])].push_back(&points[i].values);
        for (int c = 0; c < k; ++c)
            centers[static_cast<std::size_t>(c)] =
                cluster_mean(members[static_cast<std::size_t>(c)], dim);
    }

    return KMeansResult{std::move(assignment), std::move(centers), std::move(history), false};
}

std::map<int, std::vector<std::string>> ctfidf_keywords(
    const std::map<int, std::vector<std::vector<std::string>>>& class_docs, int top_k) {
    if (class_docs.empty()) throw ValidationError("ctfidf_keywords needs at least one class");
    if (top_k < 1) throw ValidationError("top_k must be >= 1");

    // f(x): total count of x over all classes; A: mean token count per class.
    std::unordered_map<std::string, double> corpus_counts;
    double total_tokens = 0.0;
    std::map<int, std::unordered_map<std::string, double>> class_counts;
    for (const auto& [cls, docs] : class_docs) {
        auto& counts = class_counts[cls];
        for (const auto& doc : docs) {
            for (const auto& token : doc) {
                counts[token] += 1.0;
                corpus_counts[token] += 1.0;
                total_tokens += 1.0;
            }
        }
        if (counts.empty())
            throw EmptyClassError("class " + std::to_string(cls) + " has no tokens");
    }
    const double mean_class_tokens = total_tokens / static_cast<double>(class_docs.size());

    std::map<int, std::vector<std::string>> out;
    for (const auto& [cls, counts] : class_counts) {
        std::vector<std::pair<std::string, double>> weighted;
        weighted.reserve(counts.size());
        for (const auto& [term, tf] : counts) {
            const double weight = tf * std::log(1.0 + mean_class_tokens / corpus_counts[term]);
            weighted.emplace_back(term, weight);
        }
        std::sort(weighted.begin(), weighted.end(), [](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second > b.second;
            return a.first < b.first;
        });
        auto& ranked = out[cls];
        const std::size_t take = std::min<std::size_t>(weighted.size(),
                                                       static_cast<std::size_t>(top_k));
        for (std::size_t i = 0; i < take; ++i) ranked.push_back(weighted[i].first);
    }
    return out;
}

namespace {

std::vector<Topic> topics_from_clusters(const std::vector<Summary>& summaries,
                                        const std::vector<int>& assignment, int n_clusters) {
    std::map<int, std::vector<std::vector<std::string>>> class_tokens;
    std::map<int, std::vector<std::string>> class_doc_ids;
    for (std::size_t i = 0; i < summaries.size(); ++i) {
        class_tokens[assignment[i]].push_back(tokenize_content(summaries[i].text));
        class_doc_ids[assignment[i]].push_back(summaries[i].doc_id);
    }
    auto keywords = ctfidf_keywords(class_tokens, kTopicKeywords);

    std::vector<Topic> topics;
    for (int c = 0; c < n_clusters; ++c) {
        auto ranked = keywords[c];
        if (ranked.size() < static_cast<std::size_t>(kTopicKeywords))
            throw ValidationError("topic " + std::to_string(c) + " has only " +
                                  std::to_string(ranked.size()) +
                                  " distinct content terms; 10 keywords are required "
                                  "(corpus too small or too repetitive)");
        topics.push_back(Topic{c, std::move(ranked), class_doc_ids[c]});
    }
    return topics;
}

} // namespace

TopicModelResult fit_topics(const std::vector<Summary>& summaries,
                            const std::vector<EmbeddingVector>& vectors, int k,
                            std::uint64_t seed) {
    if (summaries.size() != vectors.size())
        throw ValidationError("fit_topics: summaries and vectors must be parallel lists");
    if (summaries.size() < 2) throw ValidationError("fit_topics needs at least 2 documents");
    std::set<std::string> ids;
    for (const auto& s : summaries)
        if (!ids.insert(s.doc_id).second)
            throw DuplicateIdError("duplicate doc id '" + s.doc_id + "' in summaries");

    Rng rng = make_stream(seed, 0, "fit_topics");
    auto clusters = kmeans(vectors, k, rng);
    const int n_clusters = static_cast<int>(clusters.centers.size());

    TopicModelResult result;
    result.topics = topics_from_clusters(summaries, clusters.assignment, n_clusters);
    for (std::size_t i = 0; i < summaries.size(); ++i)
        result.assignment[summaries[i].doc_id] = clusters.assignment[i];
    result.config = TopicModelConfig{k, seed, "content-v1"};
    return result;
}

SubtopicResult fit_subtopics(const Topic& topic, const std::vector<Summary>& summaries,
                             const std::vector<EmbeddingVector>& vectors, int k_sub,
                             std::uint64_t seed) {
    if (summaries.size() != vectors.size())
        throw ValidationError("fit_subtopics: summaries and vectors must be parallel lists");
    if (topic.doc_ids.empty()) throw ValidationError("topic has no documents");

    std::unordered_map<std::string, std::size_t> position;
    for (std::size_t i = 0; i < summaries.size(); ++i) position[summaries[i].doc_id] = i;

    std::vector<std::string> member_ids;
    std::vector<EmbeddingVector> member_vectors;
    for (const auto& doc_id : topic.doc_ids) {
        auto it = position.find(doc_id);
        if (it == position.end())
            throw UnknownDocIdError("topic references doc '" + doc_id + "' with no summary");
        member_ids.push_back(doc_id);
        member_vectors.push_back(vectors[it->second]);
    }

    SubtopicResult result;
    result.parent_topic_id = topic.id;
    result.seed = seed;

    if (member_ids.size() < 2 * kMinSubtopicSize) {
        result.subtopics.emplace_back(0, member_ids);
        return result;
    }

    int k = k_sub > 0 ? k_sub : default_k_sub(member_ids.size());
    k = std::min<int>(k, static_cast<int>(member_ids.size()));
    if (k < 2) {
        result.subtopics.emplace_back(0, member_ids);
        return result;
    }

    Rng rng = make_stream(seed, topic.id, "subtopics");
    auto clusters = kmeans(member_vectors, k, rng);
    const int n_clusters = static_cast<int>(clusters.centers.size());
    result.subtopics.resize(static_cast<std::size_t>(n_clusters));
    for (int c = 0; c < n_clusters; ++c) result.subtopics[static_cast<std::size_t>(c)].first = c;
    for (std::size_t i = 0; i < member_ids.size(); ++i)
        result.subtopics[static_cast<std::size_t>(clusters.assignment[i])].second.push_back(
            member_ids[i]);
    // kmeans never leaves a cluster empty (repair step), but guard anyway
    std::erase_if(result.subtopics, [](const auto& st) { return st.second.empty(); });
    return result;
}

int default_k(std::size_t n_docs) {
    const int k = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n_docs) / 2.0)));
    return std::max(2, k);
}

int default_k_sub(std::size_t n_topic) {
    return std::min(5, std::max(2, static_cast<int>(n_topic / 4)));
}

std::string topics_to_json(const TopicModelResult& result) {
    json doc;
    doc["topics"] = json::array();
    for (const auto& topic : result.topics) {
        json t;
        t["id"] = topic.id;
        t["keywords"] = topic.keywords;
        t["doc_ids"] = topic.doc_ids;
        doc["topics"].push_back(std::move(t));
    }
    if (result.has_outlier()) doc["outlier_id"] = kOutlierTopicId;
    doc["config"] = {{"k", result.config.k},
                     {"seed", result.config.seed},
                     {"tokenizer", result.config.tokenizer}};
    return doc.dump(2) + "\n";
}

TopicModelResult topics_from_json(const std::string& json_text, const Corpus& corpus) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SchemaViolationError("topics file is not valid JSON: " + std::string(e.what()));
    }
    if (!doc.is_object() || !doc.contains("topics") || !doc["topics"].is_array())
        throw SchemaViolationError("topics file must be an object with a \"topics\" array");

    TopicModelResult result;
    std::set<int> seen_ids;
    for (const auto& t : doc["topics"]) {
        if (!t.is_object() || !t.contains("id") || !t["id"].is_number_integer() ||
            !t.contains("keywords") || !t["keywords"].is_array() || !t.contains("doc_ids") ||
            !t["doc_ids"].is_array())
            throw SchemaViolationError("each topic needs integer id, keywords[], doc_ids[]");
        Topic topic;
        topic.id = t["id"].get<int>();
        if (topic.id < 0 && topic.id != kOutlierTopicId)
            throw SchemaViolationError("topic id must be >= 0 or -1, got " +
                                       std::to_string(topic.id));
        if (!seen_ids.insert(topic.id).second)
            throw SchemaViolationError("duplicate topic id " + std::to_string(topic.id));
        for (const auto& kw : t["keywords"]) {
            if (!kw.is_string()) throw SchemaViolationError("keywords must be strings");
            topic.keywords.push_back(kw.get<std::string>());
        }
        if (topic.id != kOutlierTopicId &&
            topic.keywords.size() != static_cast<std::size_t>(kTopicKeywords))
            throw SchemaViolationError("topic " + std::to_string(topic.id) + " has " +
                                       std::to_string(topic.keywords.size()) +
                                       " keywords; exactly 10 required");
        std::set<std::string> kw_set(topic.keywords.begin(), topic.keywords.end());
        if (kw_set.size() != topic.keywords.size())
            throw SchemaViolationError("topic " + std::to_string(topic.id) +
                                       " has duplicate keywords");
        if (t["doc_ids"].empty())
            throw SchemaViolationError("topic " + std::to_string(topic.id) + " has no documents");
        for (const auto& d : t["doc_ids"]) {
            if (!d.is_string()) throw SchemaViolationError("doc_ids must be strings");
            auto doc_id = d.get<std::string>();
            if (!corpus.contains(doc_id))
                throw UnknownDocIdError("topics file references unknown doc id '" + doc_id + "'");
            if (result.assignment.count(doc_id))
                throw SchemaViolationError("doc id '" + doc_id +
                                           "' assigned to more than one topic");
            result.assignment[doc_id] = topic.id;
            topic.doc_ids.push_back(std::move(doc_id));
        }
        result.topics.push_back(std::move(topic));
    }
    if (result.topics.empty()) throw SchemaViolationError("topics file has no topics");
    if (result.assignment.size() != corpus.size())
        throw SchemaViolationError("topics cover " + std::to_string(result.assignment.size()) +
                                   " documents but the corpus has " +
                                   std::to_string(corpus.size()));
    std::sort(result.topics.begin(), result.topics.end(),
              [](const Topic& a, const Topic& b) { return a.id < b.id; });
    if (doc.contains("config") && doc["config"].is_object()) {
        const auto& c = doc["config"];
        if (c.contains("k")) result.config.k = c["k"].get<int>();
        if (c.contains("seed")) result.config.seed = c["seed"].get<std::uint64_t>();
        if (c.contains("tokenizer")) result.config.tokenizer = c["tokenizer"].get<std::string>();
    }
    return result;
}

void export_topics(const TopicModelResult& result, const std::filesystem::path& path) {
    atomic_write_file(path, topics_to_json(result));
}

TopicModelResult import_topics(const std::filesystem::path& path, const Corpus& corpus) {
    return topics_from_json(read_file(path), corpus);
}

} // namespace tl
