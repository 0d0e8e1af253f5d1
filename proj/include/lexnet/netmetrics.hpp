#ifndef LEXNET_NETMETRICS_HPP
#define LEXNET_NETMETRICS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lexnet/corpus.hpp"
#include "lexnet/powerlaw.hpp"
#include "lexnet/susceptibility.hpp"

namespace lexnet {

/// Undirected friendship graph over crawled users: u—v when either profile
/// lists the other as follower or following. No self-loops; boundary
/// (uncrawled) ids never become vertices.
struct SocialGraph {
    std::vector<std::string> vertices;        // sorted user ids
    std::vector<std::vector<int>> neighbors;  // sorted index lists, symmetric
    std::size_t edge_count = 0;

    std::vector<long long> degrees() const;
    long long max_degree() const;
};

SocialGraph build_graph(const Corpus& corpus);

/// Induced subgraph on `members` (must be a subset of the vertices).
SocialGraph induced_subnetwork(const SocialGraph& graph, const std::set<std::string>& members);

enum class DegreeMode {
    union_lists,  // |followers ∪ following| restricted to crawled users
    sum_lists,    // |followers ∩ crawled| + |following ∩ crawled| (mutual ties count twice)
};

/// Per-user degree from the profile's own edge lists.
std::map<std::string, long long> degree_sequence(const Corpus& corpus,
                                                 DegreeMode mode = DegreeMode::union_lists);

struct AgeStats {
    std::map<int, std::size_t> histogram;  // per-year bins
    std::size_t count = 0;
    std::optional<double> mean;
    std::optional<double> stddev;  // population standard deviation
};

/// Ages at the corpus crawl date, one bucket per group plus "total". Users
/// without a birth date, or with an age outside [0, 80], are excluded.
std::map<std::string, AgeStats> cohort_age_stats(const Corpus& corpus,
                                                 const std::vector<TriLabel>& trilabels);

struct GroupNetworkSummary {
    std::string group;  // infectious | susceptible | immune | total
    std::size_t size = 0;
    std::size_t edges = 0;
    std::optional<double> mean_age;
    std::optional<double> std_age;
    long long max_degree = 0;
    std::optional<PowerLawFit> fit;  // absent when the degree sample is degenerate
};

struct NetworkSummaryOptions {
    bool gof = false;  // run the bootstrap goodness-of-fit per group
    int reps = 1000;
    std::uint64_t seed = 0;
    int n_threads = 0;
    DegreeMode degree_mode = DegreeMode::union_lists;
};

/// Profile-list degrees restricted to `members`: deduplicated union of both
/// edge lists, or their plain sum (mutual ties twice) in sum mode.
std::vector<long long> induced_degrees(const Corpus& corpus,
                                       const std::set<std::string>& members,
                                       DegreeMode mode);

/// Table of structural characteristics per tri-group and for the whole
/// network. Power-law fits use the positive degrees of the induced
/// subgraph, computed per the configured degree mode.
std::vector<GroupNetworkSummary> network_summary(const Corpus& corpus,
                                                 const std::vector<TriLabel>& trilabels,
                                                 const NetworkSummaryOptions& opts = {});

/// One count per distinct interest: the number of users mentioning it.
/// Ordered by interest name.
std::vector<long long> interest_frequency_distribution(const Corpus& corpus);

/// (rank, value) pairs of the sample sorted descending, for log-log
/// rank/frequency plots.
std::vector<std::pair<std::size_t, long long>> rank_frequency(std::vector<long long> sample);

}  // namespace lexnet

#endif
