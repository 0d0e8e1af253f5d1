#ifndef LEXNET_THEMES_HPP
#define LEXNET_THEMES_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lexnet/corpus.hpp"

namespace lexnet {

/// Ochiai coefficient |A∩B| / sqrt(|A|·|B|); 0 when either set is empty.
double ochiai(const std::set<std::string>& s1, const std::set<std::string>& s2);

enum class LinkageMode {
    union_sets,        // similarity of clusters = Ochiai of their supporter-set unions
    complete_linkage,  // similarity of clusters = min pairwise Ochiai between members
};

struct ClusterOptions {
    double cut = 0.1;       // stop when the best merge similarity drops below this
    LinkageMode mode = LinkageMode::union_sets;
    int target_themes = 0;  // when > 0, merge down to exactly this many clusters instead
};

struct Theme {
    int theme_id = 0;
    std::vector<std::string> interests;  // sorted
    std::set<std::string> supporters;    // users mentioning ≥1 member interest
    std::optional<double> prevalence_infectious;  // percentages, filled by the pipeline
    std::optional<double> prevalence_rest;
};

/// One merge of the agglomerative loop; clusters are named by their
/// lexicographically smallest member interest, left < right.
struct MergeStep {
    std::string left;
    std::string right;
    double similarity;
};

struct ClusterResult {
    std::vector<Theme> themes;
    std::vector<MergeStep> merges;
};

/// Agglomerative clustering of significant interests. Repeatedly merges the
/// most similar pair of clusters until the best similarity falls below the
/// cut (or the target count is reached). Similarity ties are broken by the
/// lexicographically smallest (left, right) representative pair, which makes
/// the result independent of input order.
ClusterResult cluster_interests(const std::vector<std::string>& significant,
                                const std::map<std::string, std::set<std::string>>& supporters_of,
                                const ClusterOptions& opts = {});

/// Percentage of `group` mentioning at least one interest of the theme;
/// absent for an empty group.
std::optional<double> theme_prevalence(const std::vector<std::string>& theme_interests,
                                       const std::set<std::string>& group,
                                       const Corpus& corpus);

/// Supporter sets for each interest: every user mentioning it.
std::map<std::string, std::set<std::string>> supporters_by_interest(
    const Corpus& corpus, const std::vector<std::string>& interests);

}  // namespace lexnet

#endif
