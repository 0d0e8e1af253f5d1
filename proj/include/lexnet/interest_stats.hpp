#ifndef LEXNET_INTEREST_STATS_HPP
#define LEXNET_INTEREST_STATS_HPP

#include <optional>
#include <string>
#include <vector>

#include "lexnet/corpus.hpp"
#include "lexnet/scorer.hpp"

namespace lexnet {

/// 2×2 table of the infectious/rest split against one interest:
///   a = infectious ∧ interested      b = rest ∧ interested
///   c = infectious ∧ not interested  d = rest ∧ not interested
/// n = a+b+c+d is the number of users with at least one interest.
struct ContingencyTable {
    long long a = 0;
    long long b = 0;
    long long c = 0;
    long long d = 0;

    long long n() const { return a + b + c + d; }
};

struct InterestTest {
    std::string interest;
    ContingencyTable table;
    double p_value = 1.0;
    bool significant = false;
    std::optional<double> indicativeness;  // P(D|I) = a/(a+b)
};

constexpr int kDefaultMinCount = 10;
constexpr double kDefaultFdrQ = 0.05;

/// One table per interest mentioned strictly more than `min_count` times by
/// infectious users; the population is restricted to interest-bearing users.
std::vector<InterestTest> build_tables(const Corpus& corpus, const PopulationLabels& labels,
                                       int min_count = kDefaultMinCount);

/// Two-sided Fisher exact test: the sum of hypergeometric probabilities of
/// every table with the same margins whose point probability does not exceed
/// the observed table's. Exact, computed in log space.
double fisher_two_sided(const ContingencyTable& table);

/// Benjamini–Hochberg step-up rule at level q: reject hypotheses ranked
/// 1..k for the largest k with p_(k) ≤ (k/m)·q. The mask is returned in
/// input order. `literal_threshold` switches to p_(k) ≤ k·q.
std::vector<bool> bh_fdr(const std::vector<double>& p_values, double q = kDefaultFdrQ,
                         bool literal_threshold = false);

std::optional<double> indicativeness(const ContingencyTable& table);

/// Full per-interest analysis: tables, Fisher p-values, BH significance and
/// indicativeness, sorted ascending by p-value (ties by interest name).
std::vector<InterestTest> analyze_interests(const Corpus& corpus, const PopulationLabels& labels,
                                            int min_count = kDefaultMinCount,
                                            double q = kDefaultFdrQ,
                                            bool literal_threshold = false);

}  // namespace lexnet

#endif
