// Command-line front end. Talks to the core exclusively through the C API
// in lexnet.h; flags map 1:1 onto lexnet_set() options.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>

#include "lexnet.h"

namespace {

struct CommonArgs {
    std::string corpus;
    std::string lexicon;
    std::string out_dir;
    std::map<std::string, std::string> options;  // key → value for lexnet_set
    bool gof = false;
    bool seed_given = false;
};

std::string default_out_dir() {
    const char* env = std::getenv("LEXNET_OUT_DIR");
    return env && *env ? env : "lexnet_out";
}

void add_option_flag(CLI::App* cmd, CommonArgs& args, const std::string& flag,
                     const std::string& key, const std::string& help) {
    cmd->add_option_function<std::string>(
        flag, [&args, key](const std::string& v) { args.options[key] = v; }, help);
}

void add_bool_flag(CLI::App* cmd, CommonArgs& args, const std::string& flag,
                   const std::string& key, const std::string& help) {
    cmd->add_flag_callback(
        flag, [&args, key]() { args.options[key] = "true"; }, help);
}

void add_pipeline_flags(CLI::App* cmd, CommonArgs& args, bool with_netstats) {
    cmd->add_option("--corpus", args.corpus, "profile file (JSON lines)")->required();
    cmd->add_option("--lexicon", args.lexicon, "lexicon file (JSON)")->required();
    cmd->add_option("--out", args.out_dir,
                    "output directory (default $LEXNET_OUT_DIR or ./lexnet_out)");

    add_option_flag(cmd, args, "--theta", "theta", "membership threshold (default 8)");
    add_bool_flag(cmd, args, "--strict-threshold", "strict_threshold",
                  "require total > theta instead of ≥");
    add_option_flag(cmd, args, "--stemmer", "stemmer", "russian|identity (default russian)");
    add_bool_flag(cmd, args, "--suppress-phrase-components", "suppress_phrase_components",
                  "matched phrases absorb their component words");
    add_option_flag(cmd, args, "--max-entries", "max_entries",
                    "entries kept per user (default 25)");
    add_option_flag(cmd, args, "--min-count", "min_count",
                    "community mentions an interest needs (default 10)");
    add_option_flag(cmd, args, "--q", "q", "FDR level (default 0.05)");
    add_bool_flag(cmd, args, "--bh-literal", "bh_literal",
                  "use the p ≤ k·q threshold without the /m factor");
    add_option_flag(cmd, args, "--cut", "cut", "clustering stop threshold (default 0.1)");
    add_option_flag(cmd, args, "--cluster-mode", "cluster_mode",
                    "eq1|complete (default eq1)");
    add_option_flag(cmd, args, "--target-themes", "target_themes",
                    "merge down to a fixed theme count instead of the cut");
    add_option_flag(cmd, args, "--alpha", "alpha", "NB smoothing constant (default 1)");
    add_bool_flag(cmd, args, "--nb-held-only", "nb_held_only",
                  "score only held interests, skip the false polarity");
    add_option_flag(cmd, args, "--crawl-date", "crawl_date",
                    "corpus crawl date, YYYY-MM-DD (default 2015-01-01)");
    add_option_flag(cmd, args, "--source", "source", "corpus source label");
    add_option_flag(cmd, args, "--threads", "threads", "worker threads (default auto)");
    cmd->add_flag_callback(
        "--svg", [&args]() { args.options["svg"] = "true"; }, "also emit SVG plots");
    cmd->add_option_function<std::string>(
        "--seed",
        [&args](const std::string& v) {
            args.options["seed"] = v;
            args.seed_given = true;
        },
        "root seed for all randomized steps");
    if (with_netstats) {
        cmd->add_flag_callback(
            "--gof",
            [&args]() {
                args.options["gof"] = "true";
                args.gof = true;
            },
            "run the bootstrap goodness-of-fit (requires --seed)");
        add_option_flag(cmd, args, "--reps", "reps",
                        "bootstrap replicates (default 1000)");
        add_option_flag(cmd, args, "--degree-mode", "degree_mode",
                        "union|sum (default union)");
    }
}

int report_error(lexnet_ctx* ctx, lexnet_status status, const char* what) {
    std::fprintf(stderr, "lexnet: %s failed: %s\n", what, lexnet_last_error(ctx));
    return static_cast<int>(status);
}

int run_stages(CommonArgs& args, const std::string& stages) {
    if (args.gof && !args.seed_given) {
        std::fprintf(stderr, "lexnet: --gof requires --seed\n");
        return static_cast<int>(LEXNET_ERR_INVALID_ARG);
    }
    if (args.out_dir.empty()) args.out_dir = default_out_dir();
    args.options["stages"] = stages;

    lexnet_ctx* ctx = lexnet_ctx_new();
    lexnet_status st;
    for (const auto& [key, value] : args.options) {
        st = lexnet_set(ctx, key.c_str(), value.c_str());
        if (st != LEXNET_OK) {
            int rc = report_error(ctx, st, "option parsing");
            lexnet_ctx_free(ctx);
            return rc;
        }
    }
    if ((st = lexnet_load_lexicon(ctx, args.lexicon.c_str())) != LEXNET_OK ||
        (st = lexnet_load_corpus(ctx, args.corpus.c_str())) != LEXNET_OK ||
        (st = lexnet_run(ctx, args.out_dir.c_str())) != LEXNET_OK) {
        int rc = report_error(ctx, st, "pipeline");
        lexnet_ctx_free(ctx);
        return rc;
    }

    double users = 0;
    lexnet_get_stat(ctx, "users", &users);
    std::printf("processed %.0f users; reports in %s\n", users, args.out_dir.c_str());
    const char* stats[] = {"infectious_fraction", "interests_tested",
                           "interests_significant", "themes",
                           "infectious",           "susceptible",
                           "immune"};
    for (const char* name : stats) {
        double v;
        if (lexnet_get_stat(ctx, name, &v) == LEXNET_OK) std::printf("%s: %g\n", name, v);
    }
    lexnet_ctx_free(ctx);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lexicon-based community inference over social network dumps"};
    app.require_subcommand(1);

    CommonArgs score_args, interests_args, themes_args, classify_args, netstats_args,
        run_args;

    auto* score = app.add_subcommand("score", "score users against the lexicon");
    add_pipeline_flags(score, score_args, false);
    auto* interests = app.add_subcommand("interests", "test per-interest contingency tables");
    add_pipeline_flags(interests, interests_args, false);
    auto* themes = app.add_subcommand("themes", "cluster significant interests");
    add_pipeline_flags(themes, themes_args, false);
    auto* classify = app.add_subcommand("classify", "tri-partition the population");
    add_pipeline_flags(classify, classify_args, false);
    auto* netstats = app.add_subcommand("netstats", "subnetwork structure statistics");
    add_pipeline_flags(netstats, netstats_args, true);
    auto* run = app.add_subcommand("run", "full pipeline, all reports");
    add_pipeline_flags(run, run_args, true);

    // gen: synthesize a corpus with planted ground truth.
    struct {
        std::string lexicon;
        std::string profiles;
        std::string truth;
        std::map<std::string, std::string> options;
    } gen_args;
    auto* gen = app.add_subcommand("gen", "generate a synthetic corpus");
    gen->add_option("--lexicon", gen_args.lexicon, "lexicon file")->required();
    gen->add_option("--out-profiles", gen_args.profiles, "profile file to write")->required();
    gen->add_option("--out-truth", gen_args.truth, "planted-label CSV to write");
    gen->add_option_function<std::string>(
           "--seed",
           [&](const std::string& v) { gen_args.options["seed"] = v; },
           "generator seed")
        ->required();
    const std::pair<const char*, const char*> gen_opts[] = {
        {"--n-users", "gen.n_users"},
        {"--attachment-m", "gen.attachment_m"},
        {"--n-interests", "gen.n_interests"},
        {"--interest-exponent", "gen.interest_exponent"},
        {"--infectious-fraction", "gen.infectious_fraction"},
        {"--susceptible-fraction", "gen.susceptible_fraction"},
        {"--drug-text-rate", "gen.drug_text_rate"},
        {"--overlap-boost", "gen.overlap_boost"},
        {"--theta", "theta"},
        {"--crawl-date", "crawl_date"},
    };
    for (const auto& [flag, key] : gen_opts) {
        gen->add_option_function<std::string>(
            flag, [&gen_args, key = std::string(key)](const std::string& v) {
                gen_args.options[key] = v;
            });
    }

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) {
        lexnet_ctx* ctx = lexnet_ctx_new();
        lexnet_status st;
        for (const auto& [key, value] : gen_args.options) {
            if ((st = lexnet_set(ctx, key.c_str(), value.c_str())) != LEXNET_OK) {
                int rc = report_error(ctx, st, "option parsing");
                lexnet_ctx_free(ctx);
                return rc;
            }
        }
        if ((st = lexnet_load_lexicon(ctx, gen_args.lexicon.c_str())) != LEXNET_OK ||
            (st = lexnet_generate(ctx, gen_args.profiles.c_str(),
                                  gen_args.truth.empty() ? nullptr
                                                         : gen_args.truth.c_str())) !=
                LEXNET_OK) {
            int rc = report_error(ctx, st, "generation");
            lexnet_ctx_free(ctx);
            return rc;
        }
        std::printf("wrote %s%s%s\n", gen_args.profiles.c_str(),
                    gen_args.truth.empty() ? "" : " and ",
                    gen_args.truth.c_str());
        lexnet_ctx_free(ctx);
        return 0;
    }
    if (score->parsed()) return run_stages(score_args, "score");
    if (interests->parsed()) return run_stages(interests_args, "interests");
    if (themes->parsed()) return run_stages(themes_args, "themes");
    if (classify->parsed()) return run_stages(classify_args, "classify");
    if (netstats->parsed()) return run_stages(netstats_args, "netstats");
    if (run->parsed()) return run_stages(run_args, "all");
    return 0;
}
