#pragma once

#include "tl/generation.hpp"
#include "tl/topic_model.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tl {

enum class Strategy {
    overlap = 1,           // keyword containment ranking
    centrality = 2,        // TF-IDF cosine row sums
    dominant_subtopic = 3, // sample from the largest subtopic
    diverse = 4,           // one document per subtopic
};

inline constexpr Strategy kAllStrategies[] = {Strategy::overlap, Strategy::centrality,
                                              Strategy::dominant_subtopic, Strategy::diverse};

std::string strategy_name(Strategy s);
Strategy strategy_from_number(int n);          // ValidationError listing valid ones
Strategy strategy_from_name(std::string_view); // ValidationError
bool strategy_needs_subtopics(Strategy s);

inline constexpr std::size_t kMaxSelected = 10;

struct Selection {
    int topic_id = 0;
    Strategy strategy = Strategy::overlap;
    std::vector<std::string> doc_ids; // <= 10, subset of the topic, distinct
    std::vector<double> scores;       // parallel to doc_ids when the strategy scores
    std::uint64_t seed = 0;
};

// Rows are L2-normalized sparse (column, weight) pairs in column order;
// empty documents keep a zero row. Vocabulary columns are assigned in
// lexicographic term order.
struct TfidfMatrix {
    std::vector<std::vector<std::pair<int, double>>> rows;
    std::map<std::string, int> vocabulary;
};

/// tf = raw count, idf = ln((1+N)/(1+df)) + 1, rows L2-normalized.
/// Tokenized with tokenize_content.
TfidfMatrix build_tfidf(const std::vector<std::string>& texts);

/// Dense pairwise cosine matrix of the rows (zero rows give zero, including
/// the diagonal).
std::vector<std::vector<double>> cosine_matrix(const TfidfMatrix& tfidf);

/// Rank by |{distinct top-10 keywords present in the tokenized summary}|;
/// ties by total keyword occurrences, then ascending doc id.
Selection select_overlap(const Topic& topic, const std::vector<Summary>& summaries);

/// Rank by row sums of the topic's pairwise TF-IDF cosine matrix
/// (self-similarity included); ties by ascending doc id.
Selection select_centrality(const Topic& topic, const std::vector<Summary>& summaries);

/// min(10, size) documents sampled uniformly without replacement from the
/// largest subtopic (tie: lowest subtopic id). Output sorted by doc id.
Selection select_dominant_subtopic(const Topic& topic, const SubtopicResult& subtopics,
                                   std::uint64_t seed);

/// One uniform document per subtopic when there are <= 10 subtopics;
/// otherwise 10 documents sampled without replacement from the union.
Selection select_diverse(const Topic& topic, const SubtopicResult& subtopics,
                         std::uint64_t seed);

Selection select(Strategy strategy, const Topic& topic, const std::vector<Summary>& summaries,
                 const SubtopicResult* subtopics, std::uint64_t seed);

// {"topic_id":int,"strategy":string,"doc_ids":[...],"scores":[...]?,"seed":int}
std::string selection_to_json(const Selection& selection);
Selection selection_from_json(const std::string& json_text);

} // namespace tl
