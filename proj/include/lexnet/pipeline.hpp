#ifndef LEXNET_PIPELINE_HPP
#define LEXNET_PIPELINE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lexnet/corpus.hpp"
#include "lexnet/interest_stats.hpp"
#include "lexnet/netmetrics.hpp"
#include "lexnet/scorer.hpp"
#include "lexnet/stemmer.hpp"
#include "lexnet/susceptibility.hpp"
#include "lexnet/themes.hpp"

namespace lexnet {

enum StageBits : unsigned {
    kStageScore = 1u << 0,
    kStageInterests = 1u << 1,
    kStageThemes = 1u << 2,
    kStageClassify = 1u << 3,
    kStageNetstats = 1u << 4,
    kStageAll = (1u << 5) - 1,
};

/// Parses "score,interests,..." (or "all") into a stage mask.
unsigned parse_stages(const std::string& stage_list);

struct PipelineConfig {
    unsigned stages = kStageAll;

    // scorer
    double theta = 8.0;
    bool strict_threshold = false;
    StemmerMode stemmer = StemmerMode::snowball_russian;
    bool suppress_phrase_components = false;

    // interest statistics
    int min_count = kDefaultMinCount;
    double q = kDefaultFdrQ;
    bool bh_literal = false;

    // themes
    double cut = 0.1;
    LinkageMode cluster_mode = LinkageMode::union_sets;
    int target_themes = 0;

    // susceptibility
    double alpha = 1.0;
    bool nb_held_only = false;

    // network statistics
    DegreeMode degree_mode = DegreeMode::union_lists;
    bool gof = false;
    int reps = 1000;

    std::uint64_t seed = 0;
    int threads = 0;
    bool svg = false;
};

struct ManifestEntry {
    std::string file;
    std::string sha256;
};

struct RunResult {
    bool ok = true;
    std::string error;  // failing stage message when !ok
    unsigned computed_stages = 0;  // stages that completed (incl. dependencies)
    std::vector<ManifestEntry> manifest;

    std::size_t users = 0;
    std::size_t infectious = 0;
    std::size_t susceptible = 0;
    std::size_t immune = 0;
    std::size_t interests_tested = 0;
    std::size_t interests_significant = 0;
    std::size_t themes = 0;
    double infectious_fraction = 0.0;
};

/// Runs the selected stages in dependency order (score → interests → themes
/// → classify → netstats), emits their report files plus run_summary.json
/// into out_dir, and writes manifest.csv listing every emitted file with its
/// SHA-256. Unselected prerequisite stages are computed but not emitted.
/// Reruns with identical inputs, config and seed are byte-identical.
RunResult run_pipeline(const Corpus& corpus, const DrugLexicon& lexicon,
                       const PipelineConfig& config, const std::string& out_dir);

}  // namespace lexnet

#endif
