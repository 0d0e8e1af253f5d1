#include "lexnet/susceptibility.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace lexnet {

const char* tri_group_name(TriGroup g) {
    switch (g) {
        case TriGroup::infectious: return "infectious";
        case TriGroup::susceptible: return "susceptible";
        case TriGroup::immune: return "immune";
    }
    return "immune";
}

NBModel fit_nb(const Corpus& corpus, const PopulationLabels& labels,
               const std::vector<std::string>& significant, double alpha) {
    NBModel model;
    model.alpha = alpha;
    model.features = significant;
    std::sort(model.features.begin(), model.features.end());
    model.features.erase(std::unique(model.features.begin(), model.features.end()),
                         model.features.end());

    long long n_d = 0;
    long long n_not = 0;
    std::map<std::string, long long> count_d;
    std::map<std::string, long long> count_not;
    for (const std::string& f : model.features) {
        count_d[f] = 0;
        count_not[f] = 0;
    }

    for (const UserProfile& u : corpus.users()) {
        if (u.interests.empty()) continue;  // fitted on interest-bearing users
        const bool in_d = labels.is_infectious(u.user_id);
        (in_d ? n_d : n_not) += 1;
        auto& counts = in_d ? count_d : count_not;
        for (const std::string& interest : u.interests) {
            auto it = counts.find(interest);
            if (it != counts.end()) it->second += 1;
        }
    }
    if (n_d < 1 || n_not < 1)
        throw std::invalid_argument(
            "fit_nb requires interest-bearing users on both sides of the label split");

    model.log_prior_ratio =
        std::log(static_cast<double>(n_d)) - std::log(static_cast<double>(n_not));

    model.log_ratio_true.reserve(model.features.size());
    model.log_ratio_false.reserve(model.features.size());
    for (const std::string& f : model.features) {
        const double p_true_d = (count_d[f] + alpha) / (n_d + 2 * alpha);
        const double p_true_not = (count_not[f] + alpha) / (n_not + 2 * alpha);
        model.log_ratio_true.push_back(std::log(p_true_d) - std::log(p_true_not));
        model.log_ratio_false.push_back(std::log1p(-p_true_d) - std::log1p(-p_true_not));
    }
    return model;
}

double llr_score(const NBModel& model, const std::set<std::string>& interests,
                 bool held_only) {
    double score = model.log_prior_ratio;
    for (std::size_t i = 0; i < model.features.size(); ++i) {
        if (interests.count(model.features[i]))
            score += model.log_ratio_true[i];
        else if (!held_only)
            score += model.log_ratio_false[i];
    }
    return score;
}

std::vector<TriLabel> tri_partition(const Corpus& corpus, const PopulationLabels& labels,
                                    const NBModel& model, bool held_only) {
    std::vector<TriLabel> out;
    out.reserve(corpus.size());
    for (const UserProfile& u : corpus.users()) {
        TriLabel t;
        t.user_id = u.user_id;
        if (labels.is_infectious(u.user_id)) {
            t.label = TriGroup::infectious;
        } else {
            const double s = llr_score(model, u.interests, held_only);
            t.score = s;
            t.label = s > 0 ? TriGroup::susceptible : TriGroup::immune;
        }
        out.push_back(std::move(t));
    }
    return out;
}

TriCounts count_groups(const std::vector<TriLabel>& labels) {
    TriCounts c;
    for (const TriLabel& t : labels) {
        switch (t.label) {
            case TriGroup::infectious: ++c.infectious; break;
            case TriGroup::susceptible: ++c.susceptible; break;
            case TriGroup::immune: ++c.immune; break;
        }
    }
    return c;
}

}  // namespace lexnet
