#ifndef LEXNET_SUSCEPTIBILITY_HPP
#define LEXNET_SUSCEPTIBILITY_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lexnet/corpus.hpp"
#include "lexnet/scorer.hpp"

namespace lexnet {

/// Naive Bayes model over boolean interest features, stored as
/// log-likelihood ratios so that classification is a plain sum.
struct NBModel {
    std::vector<std::string> features;  // the significant interests, sorted
    double alpha = 1.0;                 // additive smoothing constant
    double log_prior_ratio = 0.0;       // log P(D) − log P(¬D)
    std::vector<double> log_ratio_true;   // log P(F=1|D) − log P(F=1|¬D)
    std::vector<double> log_ratio_false;  // log P(F=0|D) − log P(F=0|¬D)
};

enum class TriGroup { infectious, susceptible, immune };

const char* tri_group_name(TriGroup g);

struct TriLabel {
    std::string user_id;
    TriGroup label = TriGroup::immune;
    std::optional<double> score;  // log-likelihood ratio; absent for infectious
};

/// Fits the model on interest-bearing users: P(D) = |D|/n and
/// P(F=1|D) = (count_D + α)/(|D| + 2α), likewise for ¬D. Requires at least
/// one user on each side.
NBModel fit_nb(const Corpus& corpus, const PopulationLabels& labels,
               const std::vector<std::string>& significant, double alpha = 1.0);

/// Log-likelihood ratio of community membership given a user's interests,
/// summed over all features (held interests use the true-polarity ratio,
/// the rest the false-polarity one). `held_only` restricts the sum to held
/// interests.
double llr_score(const NBModel& model, const std::set<std::string>& interests,
                 bool held_only = false);

/// Tri-partition of the population: infectious pass through from the scorer;
/// remaining users are susceptible when their score is strictly positive and
/// immune otherwise. Returned in corpus order.
std::vector<TriLabel> tri_partition(const Corpus& corpus, const PopulationLabels& labels,
                                    const NBModel& model, bool held_only = false);

struct TriCounts {
    std::size_t infectious = 0;
    std::size_t susceptible = 0;
    std::size_t immune = 0;
};

TriCounts count_groups(const std::vector<TriLabel>& labels);

}  // namespace lexnet

#endif
