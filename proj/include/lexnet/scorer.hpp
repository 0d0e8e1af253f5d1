#ifndef LEXNET_SCORER_HPP
#define LEXNET_SCORER_HPP

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lexnet/corpus.hpp"
#include "lexnet/stemmer.hpp"

namespace lexnet {

struct ScorerOptions {
    double threshold = 8.0;        // θ: membership when total weight reaches it
    bool strict_greater = false;   // use total > θ instead of total ≥ θ
    StemmerMode stemmer = StemmerMode::snowball_russian;
    bool suppress_phrase_components = false;  // matched phrases absorb their words
};

struct TermHit {
    std::string surface;
    int count;
    double contribution;  // weight × count
};

struct PhraseHit {
    int phrase_index;     // index into DrugLexicon::phrases
    double contribution;  // phrase weight, at most once per entry
};

struct EntryScore {
    int entry_index = 0;
    std::vector<TermHit> term_hits;
    std::vector<PhraseHit> phrase_hits;
    double total = 0.0;
};

struct UserScore {
    std::string user_id;
    std::vector<EntryScore> entry_scores;
    double total_weight = 0.0;
    bool is_infectious = false;
};

/// Lexicon with surfaces reduced to stems for matching. A term matches a
/// token when their stems are equal; a phrase matches an entry when the
/// stems of all its words occur somewhere in that entry.
class LexiconMatcher {
  public:
    LexiconMatcher(const DrugLexicon& lexicon, const ScorerOptions& opts);

    EntryScore score_entry(std::string_view text, int entry_index = 0) const;
    UserScore score_user(const UserProfile& profile) const;

    const ScorerOptions& options() const { return opts_; }
    const DrugLexicon& lexicon() const { return lexicon_; }

  private:
    DrugLexicon lexicon_;
    ScorerOptions opts_;
    std::map<std::string, std::vector<int>> term_by_stem_;     // stem → term indices
    std::vector<std::vector<std::string>> phrase_stems_;       // per phrase, distinct stems
};

struct PopulationLabels {
    std::set<std::string> infectious;
    std::vector<UserScore> scores;  // corpus order
    double infectious_fraction = 0.0;

    bool is_infectious(const std::string& user_id) const {
        return infectious.count(user_id) != 0;
    }
};

/// Scores every user and labels those whose summed entry weight reaches the
/// threshold as members of the lexicon community.
PopulationLabels label_population(const Corpus& corpus, const DrugLexicon& lexicon,
                                  const ScorerOptions& opts = {});

/// Weight histogram: count of users per floor(total_weight) bucket.
std::map<long long, std::size_t> weight_histogram(const PopulationLabels& labels);

}  // namespace lexnet

#endif
