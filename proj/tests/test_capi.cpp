#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "lexnet.h"

namespace fs = std::filesystem;

namespace {

const std::string kLexicon = std::string(LEXNET_TEST_DATA_DIR) + "/toy_lexicon.json";

fs::path temp_dir(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "lexnet_capi" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string file_bytes(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Ctx {
    lexnet_ctx* ptr;
    Ctx() : ptr(lexnet_ctx_new()) {}
    ~Ctx() { lexnet_ctx_free(ptr); }
};

}  // namespace

TEST_CASE("version string") {
    REQUIRE(lexnet_version() != nullptr);
    CHECK(std::strlen(lexnet_version()) > 0);
}

TEST_CASE("null-safety of the handle functions") {
    CHECK(lexnet_set(nullptr, "theta", "8") == LEXNET_ERR_INVALID_ARG);
    CHECK(lexnet_run(nullptr, "out") == LEXNET_ERR_INVALID_ARG);
    CHECK(lexnet_get_stat(nullptr, "users", nullptr) == LEXNET_ERR_INVALID_ARG);
    lexnet_ctx_free(nullptr);  // no-op
    CHECK(std::strlen(lexnet_last_error(nullptr)) > 0);
}

TEST_CASE("option validation") {
    Ctx ctx;
    CHECK(lexnet_set(ctx.ptr, "theta", "8.5") == LEXNET_OK);
    CHECK(lexnet_set(ctx.ptr, "stages", "score,interests") == LEXNET_OK);
    CHECK(lexnet_set(ctx.ptr, "cluster_mode", "complete") == LEXNET_OK);
    CHECK(lexnet_set(ctx.ptr, "crawl_date", "2012-09-09") == LEXNET_OK);

    CHECK(lexnet_set(ctx.ptr, "no_such_key", "1") == LEXNET_ERR_INVALID_ARG);
    CHECK(std::string(lexnet_last_error(ctx.ptr)).find("no_such_key") != std::string::npos);
    CHECK(lexnet_set(ctx.ptr, "theta", "spicy") == LEXNET_ERR_INVALID_ARG);
    CHECK(lexnet_set(ctx.ptr, "stages", "scoop") == LEXNET_ERR_INVALID_ARG);
    CHECK(lexnet_set(ctx.ptr, "crawl_date", "2012-13-40") == LEXNET_ERR_INVALID_ARG);
}

TEST_CASE("state errors before loading") {
    Ctx ctx;
    CHECK(lexnet_run(ctx.ptr, temp_dir("nostate").string().c_str()) == LEXNET_ERR_STATE);
    double v;
    CHECK(lexnet_get_stat(ctx.ptr, "validation.users", &v) == LEXNET_ERR_STATE);
    CHECK(lexnet_get_stat(ctx.ptr, "users", &v) == LEXNET_ERR_STATE);
    CHECK(lexnet_get_stat(ctx.ptr, "made_up_stat", &v) == LEXNET_ERR_INVALID_ARG);
    CHECK(lexnet_generate(ctx.ptr, "x.jsonl", nullptr) == LEXNET_ERR_STATE);  // no lexicon
}

TEST_CASE("io and parse errors") {
    Ctx ctx;
    CHECK(lexnet_load_lexicon(ctx.ptr, "/no/such/file.json") == LEXNET_ERR_PARSE);
    const auto dir = temp_dir("parse");
    const auto bad = dir / "bad.jsonl";
    std::ofstream(bad) << "{\"id\":\"a\"}\nnot json\n";
    REQUIRE(lexnet_load_lexicon(ctx.ptr, kLexicon.c_str()) == LEXNET_OK);
    CHECK(lexnet_load_corpus(ctx.ptr, bad.string().c_str()) == LEXNET_ERR_PARSE);
    CHECK(std::string(lexnet_last_error(ctx.ptr)).find("line 2") != std::string::npos);
}

TEST_CASE("generate, run, and query through the C surface") {
    Ctx ctx;
    const auto dir = temp_dir("e2e");
    const auto profiles = dir / "profiles.jsonl";
    const auto truth = dir / "truth.csv";

    REQUIRE(lexnet_set(ctx.ptr, "gen.n_users", "500") == LEXNET_OK);
    REQUIRE(lexnet_set(ctx.ptr, "gen.n_interests", "60") == LEXNET_OK);
    REQUIRE(lexnet_set(ctx.ptr, "seed", "12") == LEXNET_OK);
    REQUIRE(lexnet_load_lexicon(ctx.ptr, kLexicon.c_str()) == LEXNET_OK);
    REQUIRE(lexnet_generate(ctx.ptr, profiles.string().c_str(),
                            truth.string().c_str()) == LEXNET_OK);
    CHECK(fs::exists(profiles));
    CHECK(file_bytes(truth).rfind("user_id,planted_label", 0) == 0);

    REQUIRE(lexnet_load_corpus(ctx.ptr, profiles.string().c_str()) == LEXNET_OK);
    double v = 0;
    REQUIRE(lexnet_get_stat(ctx.ptr, "validation.users", &v) == LEXNET_OK);
    CHECK(v == 500.0);
    REQUIRE(lexnet_get_stat(ctx.ptr, "validation.with_interests", &v) == LEXNET_OK);
    CHECK(v == 500.0);

    const auto out = dir / "out";
    REQUIRE(lexnet_run(ctx.ptr, out.string().c_str()) == LEXNET_OK);
    CHECK(fs::exists(out / "manifest.csv"));
    CHECK(fs::exists(out / "labels.csv"));

    REQUIRE(lexnet_get_stat(ctx.ptr, "users", &v) == LEXNET_OK);
    CHECK(v == 500.0);
    REQUIRE(lexnet_get_stat(ctx.ptr, "infectious", &v) == LEXNET_OK);
    CHECK(v == 100.0);  // exact planting at the default 0.2 fraction
    double parts = 0, total = 0;
    for (const char* name : {"infectious", "susceptible", "immune"}) {
        REQUIRE(lexnet_get_stat(ctx.ptr, name, &parts) == LEXNET_OK);
        total += parts;
    }
    CHECK(total == 500.0);
}

TEST_CASE("stage gating reflects in stat availability") {
    Ctx ctx;
    const auto dir = temp_dir("gating");
    const auto profiles = dir / "profiles.jsonl";
    REQUIRE(lexnet_set(ctx.ptr, "gen.n_users", "300") == LEXNET_OK);
    REQUIRE(lexnet_set(ctx.ptr, "seed", "5") == LEXNET_OK);
    REQUIRE(lexnet_load_lexicon(ctx.ptr, kLexicon.c_str()) == LEXNET_OK);
    REQUIRE(lexnet_generate(ctx.ptr, profiles.string().c_str(), nullptr) == LEXNET_OK);
    REQUIRE(lexnet_set(ctx.ptr, "stages", "score") == LEXNET_OK);
    REQUIRE(lexnet_load_corpus(ctx.ptr, profiles.string().c_str()) == LEXNET_OK);
    REQUIRE(lexnet_run(ctx.ptr, (dir / "out").string().c_str()) == LEXNET_OK);

    double v;
    CHECK(lexnet_get_stat(ctx.ptr, "infectious_fraction", &v) == LEXNET_OK);
    CHECK(lexnet_get_stat(ctx.ptr, "themes", &v) == LEXNET_ERR_STATE);
    CHECK(lexnet_get_stat(ctx.ptr, "infectious", &v) == LEXNET_ERR_STATE);
}

TEST_CASE("identical seeded runs produce identical manifests through the C API") {
    const auto dir = temp_dir("det");
    const auto profiles = dir / "profiles.jsonl";
    {
        Ctx gen;
        REQUIRE(lexnet_set(gen.ptr, "gen.n_users", "400") == LEXNET_OK);
        REQUIRE(lexnet_set(gen.ptr, "seed", "77") == LEXNET_OK);
        REQUIRE(lexnet_load_lexicon(gen.ptr, kLexicon.c_str()) == LEXNET_OK);
        REQUIRE(lexnet_generate(gen.ptr, profiles.string().c_str(), nullptr) == LEXNET_OK);
    }
    const auto run_once = [&](const fs::path& out) {
        Ctx ctx;
        REQUIRE(lexnet_set(ctx.ptr, "seed", "31") == LEXNET_OK);
        REQUIRE(lexnet_load_lexicon(ctx.ptr, kLexicon.c_str()) == LEXNET_OK);
        REQUIRE(lexnet_load_corpus(ctx.ptr, profiles.string().c_str()) == LEXNET_OK);
        REQUIRE(lexnet_run(ctx.ptr, out.string().c_str()) == LEXNET_OK);
        return file_bytes(out / "manifest.csv");
    };
    CHECK(run_once(dir / "out1") == run_once(dir / "out2"));
}
