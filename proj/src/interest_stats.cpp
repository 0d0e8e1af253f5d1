#include "lexnet/interest_stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace lexnet {

std::vector<InterestTest> build_tables(const Corpus& corpus, const PopulationLabels& labels,
                                       int min_count) {
    long long n_infectious = 0;
    long long n_rest = 0;
    std::map<std::string, long long> count_infectious;
    std::map<std::string, long long> count_rest;

    for (const UserProfile& u : corpus.users()) {
        if (u.interests.empty()) continue;  // population = interest-bearing users
        const bool inf = labels.is_infectious(u.user_id);
        (inf ? n_infectious : n_rest) += 1;
        for (const std::string& interest : u.interests)
            (inf ? count_infectious : count_rest)[interest] += 1;
    }

    std::vector<InterestTest> tests;
    for (const auto& [interest, a] : count_infectious) {
        if (a <= min_count) continue;
        InterestTest t;
        t.interest = interest;
        t.table.a = a;
        auto it = count_rest.find(interest);
        t.table.b = it == count_rest.end() ? 0 : it->second;
        t.table.c = n_infectious - t.table.a;
        t.table.d = n_rest - t.table.b;
        t.indicativeness = indicativeness(t.table);
        tests.push_back(std::move(t));
    }
    return tests;
}

double fisher_two_sided(const ContingencyTable& t) {
    const long long n = t.n();
    if (n == 0) return 1.0;  // all-zero table, by convention

    const long long r1 = t.a + t.b;  // interested
    const long long r2 = t.c + t.d;
    const long long c1 = t.a + t.c;  // infectious
    const long long lo = std::max(0LL, c1 - r2);
    const long long hi = std::min(r1, c1);
    if (lo == hi) return 1.0;  // margins admit a single table

    const auto log_choose = [](long long m, long long k) {
        return std::lgamma(m + 1.0) - std::lgamma(k + 1.0) - std::lgamma(m - k + 1.0);
    };

    // log P(A = k) for k over the support, advanced by the odds recurrence.
    std::vector<double> logp(hi - lo + 1);
    logp[0] = log_choose(r1, lo) + log_choose(r2, c1 - lo) - log_choose(n, c1);
    for (long long k = lo; k < hi; ++k) {
        logp[k - lo + 1] = logp[k - lo] + std::log(static_cast<double>(r1 - k)) +
                           std::log(static_cast<double>(c1 - k)) -
                           std::log(static_cast<double>(k + 1)) -
                           std::log(static_cast<double>(r2 - c1 + k + 1));
    }

    // Sum, relative to the modal table, every table at most as probable as
    // the observed one; the 1e-7 slack absorbs roundoff in ties.
    const double log_obs = logp[t.a - lo];
    const double cut = log_obs + std::log1p(1e-7);
    const double log_max = *std::max_element(logp.begin(), logp.end());
    double qualifying = 0.0;
    double total = 0.0;
    for (double lp : logp) {
        const double rel = std::exp(lp - log_max);
        total += rel;
        if (lp <= cut) qualifying += rel;
    }
    return std::min(1.0, qualifying / total);
}

std::vector<bool> bh_fdr(const std::vector<double>& p_values, double q,
                         bool literal_threshold) {
    const std::size_t m = p_values.size();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return p_values[i] < p_values[j]; });

    std::size_t k_max = 0;
    for (std::size_t k = 1; k <= m; ++k) {
        const double threshold = literal_threshold
                                     ? static_cast<double>(k) * q
                                     : static_cast<double>(k) / static_cast<double>(m) * q;
        if (p_values[order[k - 1]] <= threshold) k_max = k;
    }

    std::vector<bool> mask(m, false);
    for (std::size_t k = 0; k < k_max; ++k) mask[order[k]] = true;
    return mask;
}

std::optional<double> indicativeness(const ContingencyTable& t) {
    if (t.a + t.b == 0) return std::nullopt;
    return static_cast<double>(t.a) / static_cast<double>(t.a + t.b);
}

std::vector<InterestTest> analyze_interests(const Corpus& corpus, const PopulationLabels& labels,
                                            int min_count, double q, bool literal_threshold) {
    std::vector<InterestTest> tests = build_tables(corpus, labels, min_count);
    std::vector<double> p;
    p.reserve(tests.size());
    for (InterestTest& t : tests) {
        t.p_value = fisher_two_sided(t.table);
        p.push_back(t.p_value);
    }
    std::vector<bool> mask = bh_fdr(p, q, literal_threshold);
    for (std::size_t i = 0; i < tests.size(); ++i) tests[i].significant = mask[i];
    std::sort(tests.begin(), tests.end(), [](const InterestTest& x, const InterestTest& y) {
        if (x.p_value != y.p_value) return x.p_value < y.p_value;
        return x.interest < y.interest;
    });
    return tests;
}

}  // namespace lexnet
