#include "lexnet/themes.hpp"

#include <algorithm>
#include <cmath>

namespace lexnet {

double ochiai(const std::set<std::string>& s1, const std::set<std::string>& s2) {
    if (s1.empty() || s2.empty()) return 0.0;
    std::size_t common = 0;
    const auto& small = s1.size() <= s2.size() ? s1 : s2;
    const auto& large = s1.size() <= s2.size() ? s2 : s1;
    for (const std::string& x : small) common += large.count(x);
    return static_cast<double>(common) /
           std::sqrt(static_cast<double>(s1.size()) * static_cast<double>(s2.size()));
}

namespace {

struct Cluster {
    std::vector<std::string> interests;  // sorted; front() is the representative
    std::set<std::string> supporters;    // union over member interests
};

}  // namespace

ClusterResult cluster_interests(const std::vector<std::string>& significant,
                                const std::map<std::string, std::set<std::string>>& supporters_of,
                                const ClusterOptions& opts) {
    ClusterResult result;
    if (significant.empty()) return result;

    // Deduplicate and sort so the initial state is input-order independent.
    std::vector<std::string> names(significant);
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());

    std::vector<Cluster> clusters;
    clusters.reserve(names.size());
    for (const std::string& name : names) {
        Cluster c;
        c.interests = {name};
        if (auto it = supporters_of.find(name); it != supporters_of.end())
            c.supporters = it->second;
        clusters.push_back(std::move(c));
    }

    const std::size_t k = clusters.size();
    std::vector<std::vector<double>> sim(k, std::vector<double>(k, 0.0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            sim[i][j] = sim[j][i] = ochiai(clusters[i].supporters, clusters[j].supporters);

    std::vector<bool> alive(k, true);
    std::size_t alive_count = k;

    while (alive_count > 1) {
        if (opts.target_themes > 0 &&
            alive_count <= static_cast<std::size_t>(opts.target_themes))
            break;

        // Best pair: maximal similarity, ties by smallest representative pair.
        std::size_t best_i = k, best_j = k;
        double best = -1.0;
        for (std::size_t i = 0; i < k; ++i) {
            if (!alive[i]) continue;
            for (std::size_t j = i + 1; j < k; ++j) {
                if (!alive[j]) continue;
                if (sim[i][j] > best) {
                    best = sim[i][j];
                    best_i = i;
                    best_j = j;
                }
                // Clusters are kept sorted by representative (merge keeps the
                // smaller index), so the first maximum found is the
                // lexicographically smallest pair already.
            }
        }
        if (opts.target_themes == 0 && best < opts.cut) break;

        Cluster& dst = clusters[best_i];
        Cluster& src = clusters[best_j];
        result.merges.push_back({dst.interests.front(), src.interests.front(), best});

        dst.interests.insert(dst.interests.end(), src.interests.begin(), src.interests.end());
        std::sort(dst.interests.begin(), dst.interests.end());
        dst.supporters.insert(src.supporters.begin(), src.supporters.end());
        alive[best_j] = false;
        --alive_count;

        for (std::size_t t = 0; t < k; ++t) {
            if (!alive[t] || t == best_i) continue;
            double updated;
            if (opts.mode == LinkageMode::union_sets)
                updated = ochiai(dst.supporters, clusters[t].supporters);
            else
                updated = std::min(sim[best_i][t], sim[best_j][t]);
            sim[best_i][t] = sim[t][best_i] = updated;
        }
    }

    // Emit themes ordered by representative.
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < k; ++i)
        if (alive[i]) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return clusters[a].interests.front() < clusters[b].interests.front();
    });
    int next_id = 1;
    for (std::size_t i : order) {
        Theme theme;
        theme.theme_id = next_id++;
        theme.interests = std::move(clusters[i].interests);
        theme.supporters = std::move(clusters[i].supporters);
        result.themes.push_back(std::move(theme));
    }
    return result;
}

std::optional<double> theme_prevalence(const std::vector<std::string>& theme_interests,
                                       const std::set<std::string>& group,
                                       const Corpus& corpus) {
    if (group.empty()) return std::nullopt;
    std::size_t mentioning = 0;
    for (const std::string& id : group) {
        const UserProfile* u = corpus.find(id);
        if (!u) continue;
        for (const std::string& interest : theme_interests) {
            if (u->interests.count(interest)) {
                ++mentioning;
                break;
            }
        }
    }
    return 100.0 * static_cast<double>(mentioning) / static_cast<double>(group.size());
}

std::map<std::string, std::set<std::string>> supporters_by_interest(
    const Corpus& corpus, const std::vector<std::string>& interests) {
    std::map<std::string, std::set<std::string>> out;
    for (const std::string& i : interests) out[i];
    for (const UserProfile& u : corpus.users())
        for (const std::string& i : u.interests)
            if (auto it = out.find(i); it != out.end()) it->second.insert(u.user_id);
    return out;
}

}  // namespace lexnet
