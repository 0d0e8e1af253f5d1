#include "lexnet/scorer.hpp"

#include <algorithm>
#include <cmath>

#include "lexnet/text.hpp"

namespace lexnet {

LexiconMatcher::LexiconMatcher(const DrugLexicon& lexicon, const ScorerOptions& opts)
    : lexicon_(lexicon), opts_(opts) {
    for (std::size_t i = 0; i < lexicon_.terms.size(); ++i)
        term_by_stem_[stem(lexicon_.terms[i].surface, opts_.stemmer)].push_back(
            static_cast<int>(i));
    phrase_stems_.reserve(lexicon_.phrases.size());
    for (const LexiconPhrase& p : lexicon_.phrases) {
        std::set<std::string> stems;
        for (const std::string& w : p.words) stems.insert(stem(w, opts_.stemmer));
        phrase_stems_.emplace_back(stems.begin(), stems.end());
    }
}

EntryScore LexiconMatcher::score_entry(std::string_view text, int entry_index) const {
    EntryScore score;
    score.entry_index = entry_index;

    std::map<std::string, int> stem_counts;
    for (const std::string& tok : tokenize(text)) ++stem_counts[stem(tok, opts_.stemmer)];

    std::set<std::string> suppressed;
    for (std::size_t pi = 0; pi < phrase_stems_.size(); ++pi) {
        const auto& stems = phrase_stems_[pi];
        bool all_present = std::all_of(stems.begin(), stems.end(), [&](const std::string& s) {
            return stem_counts.count(s) != 0;
        });
        if (!all_present) continue;
        score.phrase_hits.push_back({static_cast<int>(pi), lexicon_.phrases[pi].weight});
        score.total += lexicon_.phrases[pi].weight;
        if (opts_.suppress_phrase_components) suppressed.insert(stems.begin(), stems.end());
    }

    for (const auto& [stem_form, indices] : term_by_stem_) {
        auto it = stem_counts.find(stem_form);
        if (it == stem_counts.end()) continue;
        if (suppressed.count(stem_form)) continue;
        for (int ti : indices) {
            const LexiconTerm& term = lexicon_.terms[ti];
            double contribution = term.weight * it->second;
            score.term_hits.push_back({term.surface, it->second, contribution});
            score.total += contribution;
        }
    }
    return score;
}

UserScore LexiconMatcher::score_user(const UserProfile& profile) const {
    UserScore us;
    us.user_id = profile.user_id;
    us.entry_scores.reserve(profile.entries.size());
    for (std::size_t i = 0; i < profile.entries.size(); ++i) {
        us.entry_scores.push_back(score_entry(profile.entries[i], static_cast<int>(i)));
        us.total_weight += us.entry_scores.back().total;
    }
    us.is_infectious = opts_.strict_greater ? us.total_weight > opts_.threshold
                                            : us.total_weight >= opts_.threshold;
    return us;
}

PopulationLabels label_population(const Corpus& corpus, const DrugLexicon& lexicon,
                                  const ScorerOptions& opts) {
    LexiconMatcher matcher(lexicon, opts);
    PopulationLabels labels;
    labels.scores.reserve(corpus.size());
    for (const UserProfile& u : corpus.users()) {
        labels.scores.push_back(matcher.score_user(u));
        if (labels.scores.back().is_infectious) labels.infectious.insert(u.user_id);
    }
    if (!corpus.users().empty())
        labels.infectious_fraction =
            static_cast<double>(labels.infectious.size()) / corpus.size();
    return labels;
}

std::map<long long, std::size_t> weight_histogram(const PopulationLabels& labels) {
    std::map<long long, std::size_t> hist;
    for (const UserScore& s : labels.scores)
        ++hist[static_cast<long long>(std::floor(s.total_weight))];
    return hist;
}

}  // namespace lexnet
