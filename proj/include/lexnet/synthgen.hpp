#ifndef LEXNET_SYNTHGEN_HPP
#define LEXNET_SYNTHGEN_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lexnet/corpus.hpp"
#include "lexnet/susceptibility.hpp"

namespace lexnet {

/// Knobs for the synthetic corpus: a preferential-attachment friendship
/// graph, rank^(−s) interest popularity, an exactly-sized planted community
/// whose texts carry lexicon weight above the labeling threshold, and a
/// planted high-overlap group that shares the community's indicative
/// interests but writes clean texts.
struct GenConfig {
    int n_users = 1000;
    int attachment_m = 3;  // edges per arriving vertex
    int n_interests = 200;
    double interest_exponent = 1.5;
    double infectious_fraction = 0.2;
    double susceptible_fraction = 0.08;  // planted high-overlap users
    double drug_text_rate = 12.0;        // expected lexicon weight per planted user
    double overlap_boost = 0.5;          // extra adoption probability of indicative interests
    double theta = 8.0;                  // labeling threshold the planted texts must beat
    std::uint64_t seed = 1;
    Date crawl_date{2015, 1, 1};
};

struct GroundTruth {
    std::map<std::string, TriGroup> planted;     // every generated user
    std::vector<std::string> indicative_interests;
};

/// Deterministic per seed: the same config yields a byte-identical corpus
/// file. Throws std::invalid_argument on an inconsistent config.
std::pair<Corpus, GroundTruth> generate(const GenConfig& config, const DrugLexicon& lexicon);

/// CSV with header user_id,planted_label, in corpus order.
void save_ground_truth(const std::string& path, const GroundTruth& truth);

GroundTruth load_ground_truth(const std::string& path);

}  // namespace lexnet

#endif
