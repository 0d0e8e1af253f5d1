#include <doctest.h>

#include <random>

#include "lexnet/stemmer.hpp"
#include "lexnet/text.hpp"
#include "lexnet/util.hpp"

using namespace lexnet;

TEST_CASE("tokenize basics") {
    CHECK(tokenize("").empty());
    CHECK(tokenize("Kokain, kokain!") == std::vector<std::string>{"kokain", "kokain"});
    CHECK(tokenize("a,b;;c") == std::vector<std::string>{"a", "b", "c"});
    CHECK(tokenize("x2y 42") == std::vector<std::string>{"x2y", "42"});
}

TEST_CASE("tokenize mixed Cyrillic and Latin sentence") {
    // Seven words, hand counted.
    const auto toks = tokenize("Привет world, это mixed тест номер seven!");
    REQUIRE(toks.size() == 7);
    CHECK(toks[0] == "привет");
    CHECK(toks[1] == "world");
    CHECK(toks[6] == "seven");
}

TEST_CASE("case folding covers Cyrillic incl. Ё") {
    CHECK(fold_case_utf8("ЁЖ") == "ёж");
    CHECK(fold_case_utf8("ПрИвЕт") == "привет");
    CHECK(fold_case_utf8("ABC") == "abc");
}

TEST_CASE("tokenize survives invalid UTF-8") {
    std::string junk = "ab\xff\xfe cd \xd0";  // stray continuation/lead bytes
    const auto toks = tokenize(junk);
    REQUIRE(toks.size() == 2);
    CHECK(toks[0] == "ab");
    CHECK(toks[1] == "cd");
}

TEST_CASE("stemmer reference vectors") {
    // Input/output pairs of the published Russian Snowball algorithm,
    // verified by hand against its suffix tables and region rules. All of
    // these stems are fixed points, so the fixed-point iteration returns
    // exactly the single-pass reference output.
    const std::pair<const char*, const char*> vectors[] = {
        {"в", "в"},
        {"вагона", "вагон"},
        {"вагоне", "вагон"},
        {"вагонов", "вагон"},
        {"вагоном", "вагон"},
        {"вагоны", "вагон"},
        {"важная", "важн"},
        {"важнее", "важн"},
        {"важнейшие", "важн"},
        {"важнейшими", "важн"},
        {"важно", "важн"},
        {"важного", "важн"},
        {"важной", "важн"},
        {"важному", "важн"},
        {"важности", "важност"},
        {"важностью", "важност"},
        {"важность", "важност"},
        {"важную", "важн"},
        {"важный", "важн"},
        {"важных", "важн"},
        {"больших", "больш"},
        {"большой", "больш"},
        {"окнами", "окн"},
        {"таблетки", "таблетк"},
    };
    for (const auto& [word, expected] : vectors) {
        CAPTURE(word);
        CHECK(stem(word) == expected);
    }
}

TEST_CASE("stemmer collapses inflectional families") {
    // Verb stems stripped by one pass may end in a further noun ending; the
    // fixed point unifies the family.
    CHECK(stem("читал") == stem("читать"));
    CHECK(stem("читал") == stem("читаться"));
    CHECK(stem(stem("важничал")) == stem("важничал"));
}

TEST_CASE("stemmer treats ё as е") {
    CHECK(stem("тёплый") == "тепл");
    CHECK(stem("теплый") == "тепл");
}

TEST_CASE("stemmer leaves non-Cyrillic tokens unchanged") {
    CHECK(stem("") == "");
    CHECK(stem("running") == "running");
    CHECK(stem("abcд") == "abcд");  // mixed script
    CHECK(stem("12345") == "12345");
    CHECK(stem("кафе2go") == "кафе2go");
}

TEST_CASE("stemmer identity mode") {
    CHECK(stem("вагоны", StemmerMode::identity) == "вагоны");
}

TEST_CASE("stemmer is idempotent on random Cyrillic words") {
    std::mt19937_64 eng(7);
    const std::u32string alphabet = U"абвгдежзийклмнопрстуфхцчшщъыьэюя";
    for (int trial = 0; trial < 500; ++trial) {
        std::string word;
        const int len = 1 + static_cast<int>(uniform_below(eng, 12));
        for (int i = 0; i < len; ++i)
            append_utf8(word, alphabet[uniform_below(eng, alphabet.size())]);
        const std::string once = stem(word);
        CAPTURE(word);
        CHECK(stem(once) == once);
    }
}
