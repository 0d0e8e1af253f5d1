#include <doctest.h>

#include <random>

#include "lexnet/themes.hpp"
#include "oracles.hpp"

using namespace lexnet;

namespace {

using Supporters = std::map<std::string, std::set<std::string>>;

std::set<std::string> users(std::initializer_list<int> ids) {
    std::set<std::string> s;
    for (int i : ids) s.insert("u" + std::to_string(i));
    return s;
}

Supporters random_supporters(std::mt19937_64& eng, int k_interests, int n_users) {
    Supporters sup;
    for (int i = 0; i < k_interests; ++i) {
        std::set<std::string> s;
        for (int u = 0; u < n_users; ++u)
            if (uniform01(eng) < 0.35) s.insert("u" + std::to_string(u));
        sup["i" + std::to_string(i)] = std::move(s);
    }
    return sup;
}

std::vector<std::string> names_of(const Supporters& sup) {
    std::vector<std::string> out;
    for (const auto& [name, _] : sup) out.push_back(name);
    return out;
}

}  // namespace

TEST_CASE("ochiai") {
    const auto a = users({1, 2});
    const auto b = users({2, 3});
    CHECK(ochiai(a, a) == doctest::Approx(1.0));
    CHECK(ochiai(a, users({3, 4})) == 0.0);
    CHECK(ochiai(a, b) == doctest::Approx(0.5));
    CHECK(ochiai({}, a) == 0.0);
    CHECK(ochiai(a, {}) == 0.0);

    std::mt19937_64 eng(5);
    for (int trial = 0; trial < 100; ++trial) {
        std::set<std::string> x, y;
        for (int u = 0; u < 12; ++u) {
            if (uniform01(eng) < 0.5) x.insert("u" + std::to_string(u));
            if (uniform01(eng) < 0.5) y.insert("u" + std::to_string(u));
        }
        const double s = ochiai(x, y);
        CHECK(s == doctest::Approx(ochiai(y, x)));  // symmetry
        CHECK(s >= 0.0);
        CHECK(s <= 1.0);
        if (!x.empty() && x == y) CHECK(s == doctest::Approx(1.0));
        if (s == 1.0 && !x.empty() && !y.empty()) CHECK(x == y);
    }
}

TEST_CASE("identical supporter sets merge into one theme") {
    Supporters sup;
    sup["a"] = users({1, 2, 3});
    sup["b"] = users({1, 2, 3});
    ClusterOptions opts;
    opts.cut = 0.5;
    const auto result = cluster_interests({"a", "b"}, sup, opts);
    REQUIRE(result.themes.size() == 1);
    CHECK(result.themes[0].interests == std::vector<std::string>{"a", "b"});
    CHECK(result.themes[0].supporters == users({1, 2, 3}));
    REQUIRE(result.merges.size() == 1);
    CHECK(result.merges[0].similarity == doctest::Approx(1.0));
}

TEST_CASE("pairwise-disjoint supporters never merge") {
    Supporters sup;
    sup["a"] = users({1});
    sup["b"] = users({2});
    sup["c"] = users({3});
    const auto result = cluster_interests({"c", "a", "b"}, sup, {});
    CHECK(result.themes.size() == 3);
    CHECK(result.merges.empty());
    // Partition property: every interest in exactly one theme.
    std::set<std::string> seen;
    for (const Theme& t : result.themes)
        for (const std::string& i : t.interests) CHECK(seen.insert(i).second);
    CHECK(seen.size() == 3);
}

TEST_CASE("empty input yields empty result") {
    CHECK(cluster_interests({}, {}, {}).themes.empty());
}

TEST_CASE("target theme count stop") {
    std::mt19937_64 eng(17);
    const Supporters sup = random_supporters(eng, 7, 15);
    ClusterOptions opts;
    opts.target_themes = 3;
    const auto result = cluster_interests(names_of(sup), sup, opts);
    CHECK(result.themes.size() == 3);
    CHECK(result.merges.size() == 4);  // k − final cluster count
}

TEST_CASE("clustering invariant under input permutation") {
    std::mt19937_64 eng(23);
    const Supporters sup = random_supporters(eng, 8, 20);
    std::vector<std::string> order = names_of(sup);
    const auto base = cluster_interests(order, sup, {});

    // Partition property: themes cover every input interest exactly once.
    std::set<std::string> covered;
    for (const Theme& t : base.themes)
        for (const std::string& i : t.interests) CHECK(covered.insert(i).second);
    CHECK(covered == std::set<std::string>(order.begin(), order.end()));
    for (int trial = 0; trial < 6; ++trial) {
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[uniform_below(eng, i)]);
        const auto shuffled = cluster_interests(order, sup, {});
        REQUIRE(shuffled.themes.size() == base.themes.size());
        for (std::size_t t = 0; t < base.themes.size(); ++t)
            CHECK(shuffled.themes[t].interests == base.themes[t].interests);
        REQUIRE(shuffled.merges.size() == base.merges.size());
        for (std::size_t m = 0; m < base.merges.size(); ++m) {
            CHECK(shuffled.merges[m].left == base.merges[m].left);
            CHECK(shuffled.merges[m].right == base.merges[m].right);
        }
    }
}

TEST_CASE("merge sequence matches the exhaustive reference in both modes") {
    std::mt19937_64 eng(314159);
    for (int fixture = 0; fixture < 25; ++fixture) {
        const int k = 2 + static_cast<int>(uniform_below(eng, 7));
        const int n = 5 + static_cast<int>(uniform_below(eng, 26));
        const Supporters sup = random_supporters(eng, k, n);
        for (const LinkageMode mode : {LinkageMode::union_sets, LinkageMode::complete_linkage}) {
            ClusterOptions opts;
            opts.mode = mode;
            opts.cut = 0.05 + 0.4 * uniform01(eng);
            const auto got = cluster_interests(names_of(sup), sup, opts);
            const auto expected = oracles::cluster_reference(names_of(sup), sup, opts);
            CAPTURE(fixture);
            CAPTURE(static_cast<int>(mode));
            REQUIRE(got.merges.size() == expected.size());
            for (std::size_t i = 0; i < expected.size(); ++i) {
                CHECK(got.merges[i].left == expected[i].left);
                CHECK(got.merges[i].right == expected[i].right);
                CHECK(got.merges[i].similarity == doctest::Approx(expected[i].similarity));
            }
        }
    }
}

TEST_CASE("clustering terminates with merge count = k − cluster count") {
    std::mt19937_64 eng(2718);
    const Supporters sup = random_supporters(eng, 9, 12);
    ClusterOptions opts;
    opts.cut = 0.01;  // merge nearly everything; exercises non-monotone maxima
    const auto result = cluster_interests(names_of(sup), sup, opts);
    CHECK(result.merges.size() == 9 - result.themes.size());
}

TEST_CASE("theme prevalence") {
    std::vector<UserProfile> profiles(20);
    for (int i = 0; i < 20; ++i) {
        profiles[i].user_id = "u" + std::to_string(i);
        if (i < 7) profiles[i].interests.insert("a");
        profiles[i].interests.insert("filler" + std::to_string(i));
    }
    const Corpus corpus(profiles);
    std::set<std::string> group;
    for (int i = 0; i < 20; ++i) group.insert("u" + std::to_string(i));

    CHECK(theme_prevalence({"a"}, group, corpus) == doctest::Approx(35.0));
    CHECK(theme_prevalence({"filler0", "a"}, users({0}), corpus) == doctest::Approx(100.0));
    CHECK(theme_prevalence({"nothing"}, group, corpus) == doctest::Approx(0.0));
    CHECK_FALSE(theme_prevalence({"a"}, {}, corpus).has_value());
}

TEST_CASE("supporters_by_interest collects the right users") {
    std::vector<UserProfile> profiles(4);
    for (int i = 0; i < 4; ++i) profiles[i].user_id = "u" + std::to_string(i);
    profiles[0].interests = {"x", "y"};
    profiles[2].interests = {"x"};
    const Corpus corpus(profiles);
    const auto sup = supporters_by_interest(corpus, {"x", "y", "z"});
    CHECK(sup.at("x") == users({0, 2}));
    CHECK(sup.at("y") == users({0}));
    CHECK(sup.at("z").empty());
}
