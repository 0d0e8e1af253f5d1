#include "lexnet/netmetrics.hpp"

#include <algorithm>
#include <cmath>

namespace lexnet {

std::vector<long long> SocialGraph::degrees() const {
    std::vector<long long> d;
    d.reserve(neighbors.size());
    for (const auto& adj : neighbors) d.push_back(static_cast<long long>(adj.size()));
    return d;
}

long long SocialGraph::max_degree() const {
    long long best = 0;
    for (const auto& adj : neighbors) best = std::max(best, static_cast<long long>(adj.size()));
    return best;
}

SocialGraph build_graph(const Corpus& corpus) {
    SocialGraph g;
    g.vertices.reserve(corpus.size());
    for (const UserProfile& u : corpus.users()) g.vertices.push_back(u.user_id);
    std::sort(g.vertices.begin(), g.vertices.end());

    std::map<std::string, int> index;
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        index[g.vertices[i]] = static_cast<int>(i);

    std::vector<std::pair<int, int>> edges;
    for (const UserProfile& u : corpus.users()) {
        const int ui = index[u.user_id];
        for (const auto* side : {&u.followers, &u.following}) {
            for (const std::string& vid : *side) {
                auto it = index.find(vid);
                if (it == index.end()) continue;  // boundary id
                const int vi = it->second;
                edges.emplace_back(std::min(ui, vi), std::max(ui, vi));
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    g.neighbors.assign(g.vertices.size(), {});
    for (const auto& [a, b] : edges) {
        g.neighbors[a].push_back(b);
        g.neighbors[b].push_back(a);
    }
    for (auto& adj : g.neighbors) std::sort(adj.begin(), adj.end());
    g.edge_count = edges.size();
    return g;
}

SocialGraph induced_subnetwork(const SocialGraph& graph, const std::set<std::string>& members) {
    SocialGraph g;
    std::vector<int> old_to_new(graph.vertices.size(), -1);
    for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
        if (members.count(graph.vertices[i])) {
            old_to_new[i] = static_cast<int>(g.vertices.size());
            g.vertices.push_back(graph.vertices[i]);
        }
    }
    g.neighbors.assign(g.vertices.size(), {});
    for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
        if (old_to_new[i] < 0) continue;
        for (int j : graph.neighbors[i]) {
            if (old_to_new[j] < 0) continue;
            g.neighbors[old_to_new[i]].push_back(old_to_new[j]);
            if (static_cast<std::size_t>(j) > i) ++g.edge_count;
        }
    }
    return g;
}

std::map<std::string, long long> degree_sequence(const Corpus& corpus, DegreeMode mode) {
    std::map<std::string, long long> out;
    for (const UserProfile& u : corpus.users()) {
        long long deg = 0;
        if (mode == DegreeMode::union_lists) {
            std::set<std::string> both(u.followers.begin(), u.followers.end());
            both.insert(u.following.begin(), u.following.end());
            for (const std::string& v : both) deg += corpus.contains(v) ? 1 : 0;
        } else {
            for (const auto* side : {&u.followers, &u.following})
                for (const std::string& v : *side) deg += corpus.contains(v) ? 1 : 0;
        }
        out[u.user_id] = deg;
    }
    return out;
}

namespace {

AgeStats finalize_age(std::vector<int> ages) {
    AgeStats st;
    st.count = ages.size();
    if (ages.empty()) return st;
    double sum = 0;
    for (int a : ages) {
        ++st.histogram[a];
        sum += a;
    }
    const double mean = sum / static_cast<double>(ages.size());
    double sq = 0;
    for (int a : ages) sq += (a - mean) * (a - mean);
    st.mean = mean;
    st.stddev = std::sqrt(sq / static_cast<double>(ages.size()));
    return st;
}

std::optional<int> age_at(const UserProfile& u, const Date& crawl) {
    if (!u.birth_date) return std::nullopt;
    const int age = years_between(*u.birth_date, crawl);
    if (age < 0 || age > 80) return std::nullopt;
    return age;
}

}  // namespace

std::map<std::string, AgeStats> cohort_age_stats(const Corpus& corpus,
                                                 const std::vector<TriLabel>& trilabels) {
    std::map<std::string, TriGroup> group_of;
    for (const TriLabel& t : trilabels) group_of[t.user_id] = t.label;

    std::map<std::string, std::vector<int>> ages;
    for (const UserProfile& u : corpus.users()) {
        const auto age = age_at(u, corpus.metadata().crawl_date);
        if (!age) continue;
        ages["total"].push_back(*age);
        auto it = group_of.find(u.user_id);
        if (it != group_of.end()) ages[tri_group_name(it->second)].push_back(*age);
    }

    std::map<std::string, AgeStats> out;
    for (const char* name : {"infectious", "susceptible", "immune", "total"})
        out[name] = finalize_age(std::move(ages[name]));
    return out;
}

std::vector<long long> induced_degrees(const Corpus& corpus,
                                       const std::set<std::string>& members,
                                       DegreeMode mode) {
    std::vector<long long> out;
    out.reserve(members.size());
    for (const std::string& id : members) {
        const UserProfile* u = corpus.find(id);
        if (!u) continue;
        long long deg = 0;
        if (mode == DegreeMode::union_lists) {
            std::set<std::string> both(u->followers.begin(), u->followers.end());
            both.insert(u->following.begin(), u->following.end());
            for (const std::string& v : both) deg += members.count(v) ? 1 : 0;
        } else {
            for (const auto* side : {&u->followers, &u->following})
                for (const std::string& v : *side) deg += members.count(v) ? 1 : 0;
        }
        out.push_back(deg);
    }
    return out;
}

std::vector<GroupNetworkSummary> network_summary(const Corpus& corpus,
                                                 const std::vector<TriLabel>& trilabels,
                                                 const NetworkSummaryOptions& opts) {
    const SocialGraph whole = build_graph(corpus);
    const auto age_stats = cohort_age_stats(corpus, trilabels);

    std::map<std::string, std::set<std::string>> members;
    for (const TriLabel& t : trilabels) members[tri_group_name(t.label)].insert(t.user_id);

    std::vector<GroupNetworkSummary> rows;
    std::size_t row_index = 0;
    for (const char* name : {"infectious", "susceptible", "immune", "total"}) {
        GroupNetworkSummary row;
        row.group = name;
        const bool total = std::string(name) == "total";
        const SocialGraph sub = total ? whole : induced_subnetwork(whole, members[name]);
        row.size = sub.vertices.size();
        row.edges = sub.edge_count;
        if (auto it = age_stats.find(name); it != age_stats.end()) {
            row.mean_age = it->second.mean;
            row.std_age = it->second.stddev;
        }

        std::vector<long long> degs;
        if (opts.degree_mode == DegreeMode::union_lists) {
            for (long long d : sub.degrees())
                if (d > 0) degs.push_back(d);
            row.max_degree = sub.max_degree();
        } else {
            std::set<std::string> ids(sub.vertices.begin(), sub.vertices.end());
            for (long long d : induced_degrees(corpus, ids, DegreeMode::sum_lists)) {
                row.max_degree = std::max(row.max_degree, d);
                if (d > 0) degs.push_back(d);
            }
        }
        try {
            PowerLawFit fit = fit_power_law(degs);
            if (opts.gof)
                fit.p_value = gof_pvalue(degs, fit, opts.reps,
                                         substream_seed(opts.seed, row_index), opts.n_threads);
            row.fit = fit;
        } catch (const std::invalid_argument&) {
            // degenerate degree sample: no fit for this group
        }
        rows.push_back(std::move(row));
        ++row_index;
    }
    return rows;
}

std::vector<long long> interest_frequency_distribution(const Corpus& corpus) {
    std::map<std::string, long long> counts;
    for (const UserProfile& u : corpus.users())
        for (const std::string& i : u.interests) ++counts[i];
    std::vector<long long> out;
    out.reserve(counts.size());
    for (const auto& [interest, c] : counts) out.push_back(c);
    return out;
}

std::vector<std::pair<std::size_t, long long>> rank_frequency(std::vector<long long> sample) {
    std::sort(sample.begin(), sample.end(), std::greater<>());
    std::vector<std::pair<std::size_t, long long>> out;
    out.reserve(sample.size());
    for (std::size_t i = 0; i < sample.size(); ++i) out.emplace_back(i + 1, sample[i]);
    return out;
}

}  // namespace lexnet
