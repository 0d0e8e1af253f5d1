/* lexnet C API: lexicon-based community inference over crawled social
 * network dumps. All functionality sits behind an opaque context handle;
 * every call reports success through a status code, with a human-readable
 * message available from lexnet_last_error().
 *
 * Typical use:
 *   lexnet_ctx *ctx = lexnet_ctx_new();
 *   lexnet_set(ctx, "theta", "8");
 *   lexnet_load_lexicon(ctx, "lexicon.json");
 *   lexnet_load_corpus(ctx, "profiles.jsonl");
 *   lexnet_run(ctx, "out/");
 *   lexnet_ctx_free(ctx);
 */
#ifndef LEXNET_H
#define LEXNET_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lexnet_ctx lexnet_ctx;

typedef enum lexnet_status {
    LEXNET_OK = 0,
    LEXNET_ERR_INVALID_ARG = 1, /* bad option key/value or argument */
    LEXNET_ERR_IO = 2,          /* file cannot be read or written */
    LEXNET_ERR_PARSE = 3,       /* malformed corpus/lexicon/ground-truth input */
    LEXNET_ERR_STATE = 4,       /* call requires data that is not loaded yet */
    LEXNET_ERR_RUN = 5,         /* a pipeline stage failed */
} lexnet_status;

const char *lexnet_version(void);

lexnet_ctx *lexnet_ctx_new(void);
void lexnet_ctx_free(lexnet_ctx *ctx);

/* Message describing the most recent failure on this handle ("" when none).
 * The pointer stays valid until the next call on the same handle. */
const char *lexnet_last_error(const lexnet_ctx *ctx);

/* Sets one pipeline option. Keys (defaults in parentheses):
 *   stages ("all")                 comma list of score,interests,themes,
 *                                  classify,netstats
 *   theta ("8"), strict_threshold ("false"), stemmer ("russian"|"identity"),
 *   suppress_phrase_components ("false"), max_entries ("25"),
 *   min_count ("10"), q ("0.05"), bh_literal ("false"),
 *   cut ("0.1"), cluster_mode ("eq1"|"complete"), target_themes ("0"),
 *   alpha ("1"), nb_held_only ("false"),
 *   degree_mode ("union"|"sum"), gof ("false"), reps ("1000"),
 *   seed ("0"), threads ("0" = auto), svg ("false"),
 *   crawl_date ("2015-01-01"), source ("file"),
 *   gen.n_users, gen.attachment_m, gen.n_interests, gen.interest_exponent,
 *   gen.infectious_fraction, gen.susceptible_fraction, gen.drug_text_rate,
 *   gen.overlap_boost
 */
lexnet_status lexnet_set(lexnet_ctx *ctx, const char *key, const char *value);

lexnet_status lexnet_load_lexicon(lexnet_ctx *ctx, const char *path);

/* Loads a JSON-lines profile file; applies max_entries and crawl_date. */
lexnet_status lexnet_load_corpus(lexnet_ctx *ctx, const char *path);

/* Runs the selected stages on the loaded corpus/lexicon and writes the
 * report files plus manifest.csv into out_dir. */
lexnet_status lexnet_run(lexnet_ctx *ctx, const char *out_dir);

/* Generates a synthetic corpus from the gen.* options (seed/theta/crawl_date
 * are shared with the pipeline options) using the loaded lexicon. Writes the
 * profile file to profiles_path and, when truth_path is non-NULL, the
 * planted labels CSV. */
lexnet_status lexnet_generate(lexnet_ctx *ctx, const char *profiles_path,
                              const char *truth_path);

/* Numeric result lookup. Available after lexnet_load_corpus:
 *   validation.users, validation.with_interests, validation.with_valid_age,
 *   validation.dangling_ids
 * Available after lexnet_run (when the producing stage ran):
 *   users, infectious, susceptible, immune, infectious_fraction,
 *   interests_tested, interests_significant, themes
 * Unknown names fail with LEXNET_ERR_INVALID_ARG; known names whose
 * producing step has not run fail with LEXNET_ERR_STATE. */
lexnet_status lexnet_get_stat(const lexnet_ctx *ctx, const char *name, double *out);

#ifdef __cplusplus
}
#endif

#endif /* LEXNET_H */
