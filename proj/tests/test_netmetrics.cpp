#include <doctest.h>

#include <random>

#include "lexnet/netmetrics.hpp"
#include "lexnet/synthgen.hpp"

using namespace lexnet;

namespace {

Corpus tie_corpus() {
    // a—b mutual, b→c one-way, d isolated, c lists a boundary id.
    std::vector<UserProfile> users(4);
    users[0].user_id = "a";
    users[0].following = {"b"};
    users[0].followers = {"b"};
    users[1].user_id = "b";
    users[1].following = {"a", "c"};
    users[1].followers = {"a"};
    users[2].user_id = "c";
    users[2].followers = {"b"};
    users[2].following = {"zz_boundary"};
    users[3].user_id = "d";
    return Corpus(users);
}

std::vector<TriLabel> label_all(const Corpus& corpus, TriGroup g) {
    std::vector<TriLabel> out;
    for (const UserProfile& u : corpus.users()) out.push_back({u.user_id, g, std::nullopt});
    return out;
}

}  // namespace

TEST_CASE("degree_sequence union vs sum") {
    const Corpus corpus = tie_corpus();
    const auto uni = degree_sequence(corpus, DegreeMode::union_lists);
    CHECK(uni.at("a") == 1);  // mutual tie deduped
    CHECK(uni.at("b") == 2);
    CHECK(uni.at("c") == 1);  // boundary id excluded
    CHECK(uni.at("d") == 0);

    const auto sum = degree_sequence(corpus, DegreeMode::sum_lists);
    CHECK(sum.at("a") == 2);  // mutual tie counts twice
    CHECK(sum.at("b") == 3);
    CHECK(sum.at("c") == 1);
}

TEST_CASE("build_graph symmetrizes and skips boundary ids") {
    const SocialGraph g = build_graph(tie_corpus());
    CHECK(g.vertices == std::vector<std::string>{"a", "b", "c", "d"});
    CHECK(g.edge_count == 2);  // a—b, b—c

    long long degree_total = 0;
    for (const auto& adj : g.neighbors) degree_total += adj.size();
    CHECK(degree_total == 2 * static_cast<long long>(g.edge_count));
    CHECK(g.max_degree() == 2);
}

TEST_CASE("induced_subnetwork") {
    const SocialGraph g = build_graph(tie_corpus());
    SUBCASE("all vertices → identical graph") {
        const SocialGraph sub = induced_subnetwork(g, {"a", "b", "c", "d"});
        CHECK(sub.vertices == g.vertices);
        CHECK(sub.edge_count == g.edge_count);
    }
    SUBCASE("single vertex → no edges") {
        const SocialGraph sub = induced_subnetwork(g, {"b"});
        CHECK(sub.vertices == std::vector<std::string>{"b"});
        CHECK(sub.edge_count == 0);
    }
    SUBCASE("pair keeps only inner edges") {
        const SocialGraph sub = induced_subnetwork(g, {"a", "b"});
        CHECK(sub.edge_count == 1);
        long long degree_total = 0;
        for (const auto& adj : sub.neighbors) degree_total += adj.size();
        CHECK(degree_total == 2);
    }
}

TEST_CASE("degree sum equals twice the edge count on random graphs") {
    std::mt19937_64 eng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(uniform_below(eng, 40));
        std::vector<UserProfile> users(n);
        for (int i = 0; i < n; ++i) users[i].user_id = "u" + std::to_string(i);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && uniform01(eng) < 0.1)
                    users[i].following.insert(users[j].user_id);
        const SocialGraph g = build_graph(Corpus(users));
        long long degree_total = 0;
        for (const auto& adj : g.neighbors) degree_total += adj.size();
        CHECK(degree_total == 2 * static_cast<long long>(g.edge_count));
    }
}

TEST_CASE("cohort age stats follow the exclusion rules") {
    std::vector<UserProfile> users(5);
    for (int i = 0; i < 5; ++i) users[i].user_id = "u" + std::to_string(i);
    users[0].birth_date = Date{1985, 6, 1};  // age 29 at 2015-01-01
    users[1].birth_date = Date{1933, 6, 1};  // age 81 → excluded
    users[2].birth_date = Date{1935, 2, 1};  // age 79 → kept
    users[3].birth_date = Date{2020, 1, 1};  // negative age → excluded
    // users[4]: no birth date → excluded
    const Corpus corpus(users);

    std::vector<TriLabel> labels = label_all(corpus, TriGroup::immune);
    labels[0].label = TriGroup::infectious;
    const auto stats = cohort_age_stats(corpus, labels);

    CHECK(stats.at("total").count == 2);
    CHECK(stats.at("infectious").count == 1);
    CHECK(stats.at("infectious").mean == doctest::Approx(29.0));
    CHECK(stats.at("immune").count == 1);
    CHECK(stats.at("immune").mean == doctest::Approx(79.0));
    CHECK(stats.at("susceptible").count == 0);
    CHECK_FALSE(stats.at("susceptible").mean.has_value());
    CHECK(stats.at("total").histogram.at(29) == 1);
    CHECK(stats.at("total").histogram.at(79) == 1);
}

TEST_CASE("interest frequency distribution") {
    SUBCASE("no interests → empty") {
        std::vector<UserProfile> users(3);
        for (int i = 0; i < 3; ++i) users[i].user_id = "u" + std::to_string(i);
        CHECK(interest_frequency_distribution(Corpus(users)).empty());
    }
    SUBCASE("shared interest counts users") {
        std::vector<UserProfile> users(3);
        for (int i = 0; i < 3; ++i) {
            users[i].user_id = "u" + std::to_string(i);
            users[i].interests.insert("common");
        }
        CHECK(interest_frequency_distribution(Corpus(users)) ==
              std::vector<long long>{3});
    }
}

TEST_CASE("rank_frequency sorts descending with 1-based ranks") {
    const auto table = rank_frequency({3, 9, 1, 9});
    REQUIRE(table.size() == 4);
    CHECK(table[0] == std::pair<std::size_t, long long>{1, 9});
    CHECK(table[1] == std::pair<std::size_t, long long>{2, 9});
    CHECK(table[2] == std::pair<std::size_t, long long>{3, 3});
    CHECK(table[3] == std::pair<std::size_t, long long>{4, 1});
}

TEST_CASE("network_summary rows") {
    GenConfig config;
    config.n_users = 400;
    config.seed = 77;
    DrugLexicon lex;
    lex.terms = {{"маркер", 5.0, TermKind::official}};
    auto [corpus, truth] = generate(config, lex);

    std::vector<TriLabel> labels;
    for (const UserProfile& u : corpus.users())
        labels.push_back({u.user_id, truth.planted.at(u.user_id), std::nullopt});

    const auto rows = network_summary(corpus, labels);
    REQUIRE(rows.size() == 4);
    CHECK(rows[3].group == "total");
    CHECK(rows[3].size == 400);

    std::size_t group_total = 0;
    for (int i = 0; i < 3; ++i) group_total += rows[i].size;
    CHECK(group_total == 400);  // partition

    const SocialGraph whole = build_graph(corpus);
    CHECK(rows[3].edges == whole.edge_count);
    CHECK(rows[3].max_degree == whole.max_degree());
    REQUIRE(rows[3].fit.has_value());
    CHECK(rows[3].fit->gamma > 1.0);
    CHECK_FALSE(rows[3].fit->p_value.has_value());  // gof off by default

    SUBCASE("empty group row") {
        std::vector<TriLabel> all_immune = label_all(corpus, TriGroup::immune);
        const auto rows2 = network_summary(corpus, all_immune);
        CHECK(rows2[0].group == "infectious");
        CHECK(rows2[0].size == 0);
        CHECK(rows2[0].edges == 0);
        CHECK_FALSE(rows2[0].fit.has_value());
        CHECK_FALSE(rows2[0].mean_age.has_value());
    }
}

TEST_CASE("network_summary honors the degree mode") {
    const Corpus corpus = tie_corpus();
    std::vector<TriLabel> labels = label_all(corpus, TriGroup::immune);

    NetworkSummaryOptions opts;
    opts.degree_mode = DegreeMode::sum_lists;
    const auto rows = network_summary(corpus, labels, opts);
    CHECK(rows[3].max_degree == 3);  // b lists a twice plus c once

    const auto ids = std::set<std::string>{"a", "b", "c", "d"};
    const auto sum_degs = induced_degrees(corpus, ids, DegreeMode::sum_lists);
    CHECK(sum_degs == std::vector<long long>{2, 3, 1, 0});
    const auto union_degs = induced_degrees(corpus, ids, DegreeMode::union_lists);
    CHECK(union_degs == std::vector<long long>{1, 2, 1, 0});
}

TEST_CASE("network_summary gof p-values are seeded and reproducible") {
    GenConfig config;
    config.n_users = 150;
    config.seed = 5;
    DrugLexicon lex;
    lex.terms = {{"маркер", 5.0, TermKind::official}};
    auto [corpus, truth] = generate(config, lex);
    std::vector<TriLabel> labels;
    for (const UserProfile& u : corpus.users())
        labels.push_back({u.user_id, truth.planted.at(u.user_id), std::nullopt});

    NetworkSummaryOptions opts;
    opts.gof = true;
    opts.reps = 20;
    opts.seed = 11;
    const auto a = network_summary(corpus, labels, opts);
    const auto b = network_summary(corpus, labels, opts);
    REQUIRE(a[3].fit.has_value());
    REQUIRE(a[3].fit->p_value.has_value());
    CHECK(*a[3].fit->p_value == *b[3].fit->p_value);
}
