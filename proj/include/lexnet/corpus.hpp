#ifndef LEXNET_CORPUS_HPP
#define LEXNET_CORPUS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lexnet/util.hpp"

namespace lexnet {

/// Thrown on malformed input files; the message names the offending line
/// or record.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct UserProfile {
    std::string user_id;
    std::vector<std::string> entries;  // blog texts, oldest first
    std::set<std::string> interests;   // case-folded, trimmed, deduplicated
    std::set<std::string> followers;
    std::set<std::string> following;
    std::optional<Date> birth_date;
    std::optional<std::string> location;

    friend bool operator==(const UserProfile&, const UserProfile&) = default;
};

struct CorpusMetadata {
    Date crawl_date{2015, 1, 1};
    std::string source = "unknown";
};

/// An immutable collection of crawled profiles. Neighbor ids that do not
/// resolve to a crawled user are kept on the profiles (they count toward
/// degrees) but never become graph vertices.
class Corpus {
  public:
    Corpus() = default;
    explicit Corpus(std::vector<UserProfile> users, CorpusMetadata meta = {});

    const std::vector<UserProfile>& users() const { return users_; }
    const CorpusMetadata& metadata() const { return meta_; }
    void set_metadata(CorpusMetadata meta) { meta_ = std::move(meta); }

    std::size_t size() const { return users_.size(); }
    bool contains(const std::string& user_id) const { return index_.count(user_id) != 0; }
    const UserProfile* find(const std::string& user_id) const;

  private:
    std::vector<UserProfile> users_;
    std::map<std::string, std::size_t> index_;
    CorpusMetadata meta_;
};

enum class TermKind { official, slang };

constexpr double kOfficialDefaultWeight = 5.0;
constexpr double kSlangDefaultWeight = 1.0;

struct LexiconTerm {
    std::string surface;
    double weight;
    TermKind kind;
};

struct LexiconPhrase {
    std::vector<std::string> words;  // ≥2 distinct surface forms, sorted
    double weight;
};

/// Weighted keyword dictionary: single terms plus multi-word combinations
/// that carry a bonus weight above the sum of their parts.
struct DrugLexicon {
    std::vector<LexiconTerm> terms;
    std::vector<LexiconPhrase> phrases;
};

struct LoadStats {
    std::size_t records = 0;
    std::size_t self_loops_dropped = 0;
    std::size_t entries_truncated = 0;  // users whose entry list was cut to E_max
};

constexpr int kDefaultMaxEntries = 25;

/// Reads a JSON-lines profile file (one object per line, fields `id`,
/// `entries`, `interests`, `followers`, `following`, optional `birth_date`,
/// optional `location`). Entry lists longer than `max_entries` keep the
/// newest (last) entries. Whitespace-only lines are skipped.
Corpus load_profiles(const std::string& path, int max_entries = kDefaultMaxEntries,
                     LoadStats* stats = nullptr);

/// Writes the corpus in the same line format; load_profiles ∘ save_profiles
/// is the identity on any corpus that satisfies the invariants.
void save_profiles(const Corpus& corpus, const std::string& path);

/// Reads a lexicon file: JSON object with `terms` (surface/kind/weight) and
/// `phrases` (words/weight). Missing term weights default by kind
/// (official 5, slang 1); missing phrase weights default to the sum of the
/// phrase's component term weights plus one.
DrugLexicon load_lexicon(const std::string& path);

struct ValidationReport {
    std::size_t users = 0;
    std::size_t with_interests = 0;
    std::size_t with_valid_age = 0;  // birth date present, 0 ≤ age ≤ 80 at crawl date
    std::size_t dangling_ids = 0;    // distinct neighbor ids not in the corpus
};

ValidationReport validate_corpus(const Corpus& corpus);

}  // namespace lexnet

#endif
