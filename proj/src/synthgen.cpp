#include "lexnet/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <stdexcept>

namespace lexnet {

namespace {

constexpr double kIndicativeBaseProb = 0.05;

const std::vector<std::string>& filler_words() {
    // Neutral vocabulary; must not share stems with the shipped lexicons.
    static const std::vector<std::string> words = {
        "погода", "кофе",  "работа", "музыка", "кино",   "книга",
        "утро",   "вечер", "дорога", "город",  "солнце", "зима",
        "лето",   "друг",  "семья",  "спорт",  "театр",  "море",
    };
    return words;
}

const std::vector<std::string>& location_pool() {
    static const std::vector<std::string> locs = {"moscow", "spb", "kazan", "omsk", "perm"};
    return locs;
}

std::string user_name(int i, int width) {
    std::string digits = std::to_string(i);
    return "u" + std::string(width - digits.size(), '0') + digits;
}

std::string interest_name(int i, int width) {
    std::string digits = std::to_string(i + 1);
    return "topic" + std::string(width - digits.size(), '0') + digits;
}

int digits_of(int n) { return static_cast<int>(std::to_string(n).size()); }

void validate(const GenConfig& c) {
    const auto fail = [](const std::string& what) {
        throw std::invalid_argument("generate: " + what);
    };
    if (c.n_users < 1) fail("n_users must be ≥ 1");
    if (c.attachment_m < 0) fail("attachment_m must be ≥ 0");
    if (c.n_interests < 1) fail("n_interests must be ≥ 1");
    if (!(c.interest_exponent > 0)) fail("interest_exponent must be > 0");
    if (c.infectious_fraction < 0 || c.infectious_fraction > 1)
        fail("infectious_fraction must be in [0,1]");
    if (c.susceptible_fraction < 0 || c.susceptible_fraction > 1)
        fail("susceptible_fraction must be in [0,1]");
    if (c.infectious_fraction + c.susceptible_fraction > 1)
        fail("planted fractions must not exceed 1 combined");
    if (c.overlap_boost < 0 || c.overlap_boost > 1) fail("overlap_boost must be in [0,1]");
    if (!(c.theta > 0)) fail("theta must be > 0");
    if (!(c.drug_text_rate > c.theta)) fail("drug_text_rate must exceed theta");
    if (!c.crawl_date.valid()) fail("crawl_date is not a valid date");
}

}  // namespace

std::pair<Corpus, GroundTruth> generate(const GenConfig& config, const DrugLexicon& lexicon) {
    validate(config);
    if (lexicon.terms.empty())
        throw std::invalid_argument("generate: lexicon has no terms to plant");

    std::mt19937_64 eng(config.seed);
    const int n = config.n_users;
    const int id_width = std::max(4, digits_of(n));

    // Friendship graph by preferential attachment; `chances` holds one entry
    // per edge endpoint, so sampling from it is degree-proportional.
    std::vector<std::pair<int, int>> edges;  // (follower, followed)
    std::vector<int> chances;
    const int m = config.attachment_m;
    for (int v = 1; v < n; ++v) {
        const int want = std::min(m, v);
        std::vector<int> targets;
        while (static_cast<int>(targets.size()) < want) {
            int t;
            if (chances.empty())
                t = static_cast<int>(uniform_below(eng, static_cast<std::uint64_t>(v)));
            else
                t = chances[uniform_below(eng, chances.size())];
            if (t >= v || std::find(targets.begin(), targets.end(), t) != targets.end())
                continue;
            targets.push_back(t);
        }
        for (int t : targets) {
            const bool v_follows_t = uniform01(eng) < 0.5;
            edges.emplace_back(v_follows_t ? v : t, v_follows_t ? t : v);
            chances.push_back(v);
            chances.push_back(t);
        }
    }

    // Exactly sized planted groups via a seeded shuffle.
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[uniform_below(eng, static_cast<std::uint64_t>(i) + 1)]);
    const int k_inf = static_cast<int>(std::floor(config.infectious_fraction * n));
    const int k_sus = static_cast<int>(std::floor(config.susceptible_fraction * n));
    std::vector<TriGroup> planted(n, TriGroup::immune);
    for (int i = 0; i < k_inf; ++i) planted[perm[i]] = TriGroup::infectious;
    for (int i = k_inf; i < k_inf + k_sus; ++i) planted[perm[i]] = TriGroup::susceptible;

    // Interest catalog: a rank^(−s) popularity law over the whole catalog,
    // with the indicative subset taken from the unpopular end so that its
    // adoption is driven by the planted boost rather than by base
    // popularity.
    const int interest_width = digits_of(config.n_interests);
    const int n_indicative =
        std::min(config.n_interests, std::clamp(config.n_interests / 20, 4, 16));
    const int first_indicative = config.n_interests - n_indicative;
    std::vector<std::string> interests;
    interests.reserve(config.n_interests);
    for (int i = 0; i < config.n_interests; ++i)
        interests.push_back(interest_name(i, interest_width));

    std::vector<double> popularity_cdf(config.n_interests);
    double acc = 0;
    for (int i = 0; i < config.n_interests; ++i) {
        acc += std::pow(static_cast<double>(i + 1), -config.interest_exponent);
        popularity_cdf[i] = acc;
    }
    for (double& x : popularity_cdf) x /= acc;

    const auto sample_interest = [&](std::mt19937_64& e) {
        const double u = uniform01(e);
        const auto it = std::lower_bound(popularity_cdf.begin(), popularity_cdf.end(), u);
        return static_cast<int>(it - popularity_cdf.begin());
    };

    std::vector<UserProfile> users(n);
    for (int i = 0; i < n; ++i) users[i].user_id = user_name(i, id_width);
    for (const auto& [follower, followed] : edges) {
        users[follower].following.insert(users[followed].user_id);
        users[followed].followers.insert(users[follower].user_id);
    }

    std::vector<const LexiconTerm*> slang;
    for (const LexiconTerm& t : lexicon.terms)
        if (t.kind == TermKind::slang) slang.push_back(&t);

    for (int i = 0; i < n; ++i) {
        UserProfile& u = users[i];

        // Interests: general picks plus boosted adoption of the indicative
        // subset for the two planted groups.
        const int n_general = 2 + static_cast<int>(uniform_below(eng, 7));
        for (int g = 0; g < n_general; ++g) u.interests.insert(interests[sample_interest(eng)]);
        const bool boosted = planted[i] != TriGroup::immune;
        const double p_adopt =
            kIndicativeBaseProb + (boosted ? config.overlap_boost : 0.0);
        for (int k = 0; k < n_indicative; ++k)
            if (uniform01(eng) < p_adopt)
                u.interests.insert(interests[first_indicative + k]);

        // Blog entries: neutral filler, stray slang for some clean users,
        // and enough lexicon weight to clear theta for the planted community.
        const int n_entries = 1 + static_cast<int>(uniform_below(eng, 5));
        u.entries.resize(n_entries);
        for (std::string& entry : u.entries) {
            const int n_words = 5 + static_cast<int>(uniform_below(eng, 11));
            for (int w = 0; w < n_words; ++w) {
                if (!entry.empty()) entry += ' ';
                entry += filler_words()[uniform_below(eng, filler_words().size())];
            }
        }
        if (planted[i] == TriGroup::infectious) {
            double weight = 0;
            while (weight < config.drug_text_rate) {
                const LexiconTerm& term =
                    lexicon.terms[uniform_below(eng, lexicon.terms.size())];
                u.entries[uniform_below(eng, u.entries.size())] += ' ' + term.surface;
                weight += term.weight;
            }
        } else {
            const double r = uniform01(eng);
            const int stray = r < 0.85 ? 0 : (r < 0.95 ? 1 : 2);
            for (int s = 0; s < stray && !slang.empty(); ++s)
                u.entries[uniform_below(eng, u.entries.size())] +=
                    ' ' + slang[uniform_below(eng, slang.size())]->surface;
        }

        // Demographics: mostly 20-40, a sliver of bogus ages above 80.
        const double br = uniform01(eng);
        if (br < 0.70) {
            const int age = 20 + static_cast<int>(uniform_below(eng, 21));
            u.birth_date = Date{config.crawl_date.year - age,
                                1 + static_cast<int>(uniform_below(eng, 12)),
                                1 + static_cast<int>(uniform_below(eng, 28))};
        } else if (br < 0.75) {
            const int age = 82 + static_cast<int>(uniform_below(eng, 14));
            u.birth_date = Date{config.crawl_date.year - age,
                                1 + static_cast<int>(uniform_below(eng, 12)),
                                1 + static_cast<int>(uniform_below(eng, 28))};
        }
        if (uniform01(eng) < 0.5)
            u.location = location_pool()[uniform_below(eng, location_pool().size())];
    }

    GroundTruth truth;
    for (int i = 0; i < n; ++i) truth.planted[users[i].user_id] = planted[i];
    truth.indicative_interests.assign(interests.begin() + first_indicative, interests.end());

    CorpusMetadata meta;
    meta.crawl_date = config.crawl_date;
    meta.source = "synthetic";
    return {Corpus(std::move(users), std::move(meta)), std::move(truth)};
}

void save_ground_truth(const std::string& path, const GroundTruth& truth) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write ground truth file '" + path + "'");
    out << "user_id,planted_label\n";
    for (const auto& [id, group] : truth.planted)
        out << id << ',' << tri_group_name(group) << '\n';
}

GroundTruth load_ground_truth(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open ground truth file '" + path + "'");
    GroundTruth truth;
    std::string line;
    std::getline(in, line);  // header
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw ParseError("ground truth line " + std::to_string(line_no) + ": missing comma");
        const std::string id = line.substr(0, comma);
        const std::string label = std::string(trim(line.substr(comma + 1)));
        if (label == "infectious")
            truth.planted[id] = TriGroup::infectious;
        else if (label == "susceptible")
            truth.planted[id] = TriGroup::susceptible;
        else if (label == "immune")
            truth.planted[id] = TriGroup::immune;
        else
            throw ParseError("ground truth line " + std::to_string(line_no) +
                             ": unknown label '" + label + "'");
    }
    return truth;
}

}  // namespace lexnet
