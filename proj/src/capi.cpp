#include "lexnet.h"

#include <cstring>
#include <map>
#include <optional>
#include <string>

#include "lexnet/corpus.hpp"
#include "lexnet/pipeline.hpp"
#include "lexnet/synthgen.hpp"

using namespace lexnet;

struct lexnet_ctx {
    PipelineConfig config;
    GenConfig gen;
    int max_entries = kDefaultMaxEntries;
    Date crawl_date{2015, 1, 1};
    std::string source = "file";

    std::optional<DrugLexicon> lexicon;
    std::optional<Corpus> corpus;
    std::optional<ValidationReport> validation;
    std::optional<RunResult> last_run;

    std::string error;
};

namespace {

lexnet_status fail(lexnet_ctx* ctx, lexnet_status code, const std::string& message) {
    if (ctx) ctx->error = message;
    return code;
}

bool parse_bool(const std::string& v, bool& out) {
    if (v == "true" || v == "1" || v == "yes" || v == "on") out = true;
    else if (v == "false" || v == "0" || v == "no" || v == "off") out = false;
    else return false;
    return true;
}

template <class T>
bool parse_number(const std::string& v, T& out) {
    try {
        std::size_t pos = 0;
        if constexpr (std::is_floating_point_v<T>) out = static_cast<T>(std::stod(v, &pos));
        else if constexpr (std::is_signed_v<T>) out = static_cast<T>(std::stoll(v, &pos));
        else out = static_cast<T>(std::stoull(v, &pos));
        return pos == v.size();
    } catch (...) {
        return false;
    }
}

/* Guards every entry point: exceptions never cross the C boundary. */
template <class Fn>
lexnet_status guarded(lexnet_ctx* ctx, Fn&& fn) {
    if (!ctx) return LEXNET_ERR_INVALID_ARG;
    ctx->error.clear();
    try {
        return fn();
    } catch (const ParseError& e) {
        return fail(ctx, LEXNET_ERR_PARSE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(ctx, LEXNET_ERR_INVALID_ARG, e.what());
    } catch (const std::exception& e) {
        return fail(ctx, LEXNET_ERR_RUN, e.what());
    }
}

}  // namespace

extern "C" {

const char* lexnet_version(void) { return "1.0.0"; }

lexnet_ctx* lexnet_ctx_new(void) {
    try {
        return new lexnet_ctx();
    } catch (...) {
        return nullptr;
    }
}

void lexnet_ctx_free(lexnet_ctx* ctx) { delete ctx; }

const char* lexnet_last_error(const lexnet_ctx* ctx) {
    return ctx ? ctx->error.c_str() : "null context";
}

lexnet_status lexnet_set(lexnet_ctx* ctx, const char* key, const char* value) {
    if (!ctx) return LEXNET_ERR_INVALID_ARG;
    if (!key || !value) return fail(ctx, LEXNET_ERR_INVALID_ARG, "null option key or value");
    return guarded(ctx, [&]() -> lexnet_status {
        const std::string k = key;
        const std::string v = value;
        PipelineConfig& c = ctx->config;
        bool ok = true;
        if (k == "stages") c.stages = parse_stages(v);
        else if (k == "theta") { ok = parse_number(v, c.theta); ctx->gen.theta = c.theta; }
        else if (k == "strict_threshold") ok = parse_bool(v, c.strict_threshold);
        else if (k == "stemmer") {
            if (v == "russian") c.stemmer = StemmerMode::snowball_russian;
            else if (v == "identity") c.stemmer = StemmerMode::identity;
            else ok = false;
        } else if (k == "suppress_phrase_components") {
            ok = parse_bool(v, c.suppress_phrase_components);
        } else if (k == "max_entries") ok = parse_number(v, ctx->max_entries);
        else if (k == "min_count") ok = parse_number(v, c.min_count);
        else if (k == "q") ok = parse_number(v, c.q);
        else if (k == "bh_literal") ok = parse_bool(v, c.bh_literal);
        else if (k == "cut") ok = parse_number(v, c.cut);
        else if (k == "cluster_mode") {
            if (v == "eq1") c.cluster_mode = LinkageMode::union_sets;
            else if (v == "complete") c.cluster_mode = LinkageMode::complete_linkage;
            else ok = false;
        } else if (k == "target_themes") ok = parse_number(v, c.target_themes);
        else if (k == "alpha") ok = parse_number(v, c.alpha);
        else if (k == "nb_held_only") ok = parse_bool(v, c.nb_held_only);
        else if (k == "degree_mode") {
            if (v == "union") c.degree_mode = DegreeMode::union_lists;
            else if (v == "sum") c.degree_mode = DegreeMode::sum_lists;
            else ok = false;
        } else if (k == "gof") ok = parse_bool(v, c.gof);
        else if (k == "reps") ok = parse_number(v, c.reps);
        else if (k == "seed") { ok = parse_number(v, c.seed); ctx->gen.seed = c.seed; }
        else if (k == "threads") ok = parse_number(v, c.threads);
        else if (k == "svg") ok = parse_bool(v, c.svg);
        else if (k == "crawl_date") {
            auto d = parse_date(v);
            if (d) { ctx->crawl_date = *d; ctx->gen.crawl_date = *d; }
            else ok = false;
        } else if (k == "source") ctx->source = v;
        else if (k == "gen.n_users") ok = parse_number(v, ctx->gen.n_users);
        else if (k == "gen.attachment_m") ok = parse_number(v, ctx->gen.attachment_m);
        else if (k == "gen.n_interests") ok = parse_number(v, ctx->gen.n_interests);
        else if (k == "gen.interest_exponent") ok = parse_number(v, ctx->gen.interest_exponent);
        else if (k == "gen.infectious_fraction")
            ok = parse_number(v, ctx->gen.infectious_fraction);
        else if (k == "gen.susceptible_fraction")
            ok = parse_number(v, ctx->gen.susceptible_fraction);
        else if (k == "gen.drug_text_rate") ok = parse_number(v, ctx->gen.drug_text_rate);
        else if (k == "gen.overlap_boost") ok = parse_number(v, ctx->gen.overlap_boost);
        else return fail(ctx, LEXNET_ERR_INVALID_ARG, "unknown option '" + k + "'");

        if (!ok)
            return fail(ctx, LEXNET_ERR_INVALID_ARG,
                        "invalid value '" + v + "' for option '" + k + "'");
        return LEXNET_OK;
    });
}

lexnet_status lexnet_load_lexicon(lexnet_ctx* ctx, const char* path) {
    if (!ctx) return LEXNET_ERR_INVALID_ARG;
    if (!path) return fail(ctx, LEXNET_ERR_INVALID_ARG, "null path");
    return guarded(ctx, [&]() -> lexnet_status {
        ctx->lexicon = load_lexicon(path);
        return LEXNET_OK;
    });
}

lexnet_status lexnet_load_corpus(lexnet_ctx* ctx, const char* path) {
    if (!ctx) return LEXNET_ERR_INVALID_ARG;
    if (!path) return fail(ctx, LEXNET_ERR_INVALID_ARG, "null path");
    return guarded(ctx, [&]() -> lexnet_status {
        Corpus corpus = load_profiles(path, ctx->max_entries);
        CorpusMetadata meta;
        meta.crawl_date = ctx->crawl_date;
        meta.source = ctx->source;
        corpus.set_metadata(meta);
        ctx->validation = validate_corpus(corpus);
        ctx->corpus = std::move(corpus);
        ctx->last_run.reset();
        return LEXNET_OK;
    });
}

lexnet_status lexnet_run(lexnet_ctx* ctx, const char* out_dir) {
    if (!ctx) return LEXNET_ERR_INVALID_ARG;
    if (!out_dir) return fail(ctx, LEXNET_ERR_INVALID_ARG, "null output directory");
    return guarded(ctx, [&]() -> lexnet_status {
        if (!ctx->corpus) return fail(ctx, LEXNET_ERR_STATE, "no corpus loaded");
        if (!ctx->lexicon) return fail(ctx, LEXNET_ERR_STATE, "no lexicon loaded");
        RunResult r = run_pipeline(*ctx->corpus, *ctx->lexicon, ctx->config, out_dir);
        ctx->last_run = r;
        if (!r.ok) return fail(ctx, LEXNET_ERR_RUN, r.error);
        return LEXNET_OK;
    });
}

lexnet_status lexnet_generate(lexnet_ctx* ctx, const char* profiles_path,
                              const char* truth_path) {
    if (!ctx) return LEXNET_ERR_INVALID_ARG;
    if (!profiles_path) return fail(ctx, LEXNET_ERR_INVALID_ARG, "null profiles path");
    return guarded(ctx, [&]() -> lexnet_status {
        if (!ctx->lexicon) return fail(ctx, LEXNET_ERR_STATE, "no lexicon loaded");
        auto [corpus, truth] = generate(ctx->gen, *ctx->lexicon);
        save_profiles(corpus, profiles_path);
        if (truth_path) save_ground_truth(truth_path, truth);
        return LEXNET_OK;
    });
}

lexnet_status lexnet_get_stat(const lexnet_ctx* ctx, const char* name, double* out) {
    if (!ctx || !name || !out) return LEXNET_ERR_INVALID_ARG;
    auto* mut = const_cast<lexnet_ctx*>(ctx);
    mut->error.clear();

    const std::string n = name;
    const auto need_run = [&](double value, bool available) -> lexnet_status {
        if (!ctx->last_run)
            return fail(mut, LEXNET_ERR_STATE, "no pipeline run yet");
        if (!available)
            return fail(mut, LEXNET_ERR_STATE, "stage producing '" + n + "' did not run");
        *out = value;
        return LEXNET_OK;
    };
    const RunResult* r = ctx->last_run ? &*ctx->last_run : nullptr;

    if (n.rfind("validation.", 0) == 0) {
        if (!ctx->validation) return fail(mut, LEXNET_ERR_STATE, "no corpus loaded");
        const ValidationReport& v = *ctx->validation;
        if (n == "validation.users") *out = static_cast<double>(v.users);
        else if (n == "validation.with_interests") *out = static_cast<double>(v.with_interests);
        else if (n == "validation.with_valid_age") *out = static_cast<double>(v.with_valid_age);
        else if (n == "validation.dangling_ids") *out = static_cast<double>(v.dangling_ids);
        else return fail(mut, LEXNET_ERR_INVALID_ARG, "unknown stat '" + n + "'");
        return LEXNET_OK;
    }
    const unsigned stages = r ? r->computed_stages : 0;
    if (n == "users") return need_run(static_cast<double>(r ? r->users : 0), r != nullptr);
    if (n == "infectious_fraction")
        return need_run(r ? r->infectious_fraction : 0, r && (stages & kStageScore));
    if (n == "infectious")
        return need_run(static_cast<double>(r ? r->infectious : 0),
                        r && (stages & kStageClassify));
    if (n == "susceptible")
        return need_run(static_cast<double>(r ? r->susceptible : 0),
                        r && (stages & kStageClassify));
    if (n == "immune")
        return need_run(static_cast<double>(r ? r->immune : 0), r && (stages & kStageClassify));
    if (n == "interests_tested")
        return need_run(static_cast<double>(r ? r->interests_tested : 0),
                        r && (stages & kStageInterests));
    if (n == "interests_significant")
        return need_run(static_cast<double>(r ? r->interests_significant : 0),
                        r && (stages & kStageInterests));
    if (n == "themes")
        return need_run(static_cast<double>(r ? r->themes : 0), r && (stages & kStageThemes));
    return fail(mut, LEXNET_ERR_INVALID_ARG, "unknown stat '" + n + "'");
}

}  // extern "C"
