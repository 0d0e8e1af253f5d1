#include "lexnet/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "lexnet/reports.hpp"

namespace lexnet {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

unsigned parse_stages(const std::string& stage_list) {
    if (stage_list.empty() || stage_list == "all") return kStageAll;
    unsigned mask = 0;
    std::stringstream ss(stage_list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::string name(trim(item));
        if (name == "score") mask |= kStageScore;
        else if (name == "interests") mask |= kStageInterests;
        else if (name == "themes") mask |= kStageThemes;
        else if (name == "classify") mask |= kStageClassify;
        else if (name == "netstats") mask |= kStageNetstats;
        else if (name == "all") mask |= kStageAll;
        else throw std::invalid_argument("unknown stage '" + name + "'");
    }
    return mask;
}

namespace {

/// A stage needs everything upstream of it computed.
unsigned dependency_closure(unsigned stages) {
    unsigned needed = stages;
    if (needed & kStageNetstats) needed |= kStageClassify;
    if (needed & (kStageClassify | kStageThemes)) needed |= kStageInterests;
    if (needed & kStageInterests) needed |= kStageScore;
    return needed;
}

ordered_json age_stats_json(const std::map<std::string, AgeStats>& stats) {
    ordered_json out;
    for (const auto& [group, st] : stats) {
        ordered_json g;
        g["count"] = st.count;
        if (st.mean) g["mean"] = *st.mean;
        if (st.stddev) g["std"] = *st.stddev;
        ordered_json hist;
        for (const auto& [age, c] : st.histogram) hist[std::to_string(age)] = c;
        g["histogram"] = std::move(hist);
        out[group] = std::move(g);
    }
    return out;
}

void check_config(const PipelineConfig& c) {
    const auto fail = [](const std::string& what) {
        throw std::invalid_argument("pipeline config: " + what);
    };
    if (!(c.theta > 0)) fail("theta must be > 0");
    if (c.min_count < 0) fail("min_count must be ≥ 0");
    if (!(c.q > 0) || c.q > 1) fail("q must be in (0,1]");
    if (!(c.cut > 0) || c.cut >= 1) fail("cut must be in (0,1)");
    if (c.target_themes < 0) fail("target_themes must be ≥ 0");
    if (!(c.alpha > 0)) fail("alpha must be > 0");
    if (c.reps < 1) fail("reps must be ≥ 1");
    if (c.threads < 0) fail("threads must be ≥ 0");
}

}  // namespace

RunResult run_pipeline(const Corpus& corpus, const DrugLexicon& lexicon,
                       const PipelineConfig& config, const std::string& out_dir) {
    check_config(config);
    RunResult result;
    result.users = corpus.size();

    fs::create_directories(out_dir);
    const auto path_of = [&](const std::string& name) {
        return (fs::path(out_dir) / name).string();
    };
    std::vector<std::string> emitted;
    const auto emit = [&](const std::string& name) { emitted.push_back(name); };

    const unsigned selected = config.stages;
    const unsigned needed = dependency_closure(selected);

    PopulationLabels labels;
    std::vector<InterestTest> interest_tests;
    std::vector<std::string> significant;
    std::vector<Theme> themes;
    std::vector<TriLabel> trilabels;
    std::vector<GroupNetworkSummary> net_rows;
    std::map<std::string, AgeStats> ages;
    std::optional<PowerLawFit> interest_fit;

    ordered_json summary;
    summary["status"] = "incomplete";
    summary["config"] = {
        {"theta", config.theta},
        {"strict_threshold", config.strict_threshold},
        {"stemmer", config.stemmer == StemmerMode::identity ? "identity" : "russian"},
        {"suppress_phrase_components", config.suppress_phrase_components},
        {"min_count", config.min_count},
        {"q", config.q},
        {"bh_literal", config.bh_literal},
        {"cut", config.cut},
        {"cluster_mode",
         config.cluster_mode == LinkageMode::union_sets ? "eq1" : "complete"},
        {"target_themes", config.target_themes},
        {"alpha", config.alpha},
        {"nb_held_only", config.nb_held_only},
        {"degree_mode", config.degree_mode == DegreeMode::union_lists ? "union" : "sum"},
        {"gof", config.gof},
        {"reps", config.reps},
        {"seed", config.seed},
        {"crawl_date", corpus.metadata().crawl_date.to_string()},
    };

    try {
        if (needed & kStageScore) {
            ScorerOptions opts;
            opts.threshold = config.theta;
            opts.strict_greater = config.strict_threshold;
            opts.stemmer = config.stemmer;
            opts.suppress_phrase_components = config.suppress_phrase_components;
            labels = label_population(corpus, lexicon, opts);
            result.infectious_fraction = labels.infectious_fraction;
            result.computed_stages |= kStageScore;
            if (selected & kStageScore) {
                write_scores_csv(path_of("scores.csv"), labels);
                emit("scores.csv");
                write_weight_histogram_csv(path_of("weight_histogram.csv"), labels);
                emit("weight_histogram.csv");
            }
        }

        if (needed & kStageInterests) {
            interest_tests = analyze_interests(corpus, labels, config.min_count, config.q,
                                               config.bh_literal);
            result.interests_tested = interest_tests.size();
            for (const InterestTest& t : interest_tests)
                if (t.significant) significant.push_back(t.interest);
            result.interests_significant = significant.size();
            result.computed_stages |= kStageInterests;
            if (selected & kStageInterests) {
                write_interests_csv(path_of("interests.csv"), interest_tests);
                emit("interests.csv");
            }
        }

        if (needed & kStageThemes) {
            const auto supporters = supporters_by_interest(corpus, significant);
            ClusterOptions copts;
            copts.cut = config.cut;
            copts.mode = config.cluster_mode;
            copts.target_themes = config.target_themes;
            themes = cluster_interests(significant, supporters, copts).themes;
            result.themes = themes.size();

            // Prevalence over interest-bearing users, split by the scorer label.
            std::set<std::string> inf_group, rest_group;
            for (const UserProfile& u : corpus.users()) {
                if (u.interests.empty()) continue;
                (labels.is_infectious(u.user_id) ? inf_group : rest_group).insert(u.user_id);
            }
            for (Theme& t : themes) {
                t.prevalence_infectious = theme_prevalence(t.interests, inf_group, corpus);
                t.prevalence_rest = theme_prevalence(t.interests, rest_group, corpus);
            }
            result.computed_stages |= kStageThemes;
            if (selected & kStageThemes) {
                write_themes_csv(path_of("themes.csv"), themes);
                emit("themes.csv");
                if (config.svg) {
                    write_themes_svg(path_of("themes.svg"), themes);
                    emit("themes.svg");
                }
            }
        }

        if (needed & kStageClassify) {
            const NBModel model = fit_nb(corpus, labels, significant, config.alpha);
            trilabels = tri_partition(corpus, labels, model, config.nb_held_only);
            const TriCounts counts = count_groups(trilabels);
            result.infectious = counts.infectious;
            result.susceptible = counts.susceptible;
            result.immune = counts.immune;
            result.computed_stages |= kStageClassify;
            if (selected & kStageClassify) {
                write_labels_csv(path_of("labels.csv"), trilabels);
                emit("labels.csv");
            }
        }

        if (needed & kStageNetstats) {
            NetworkSummaryOptions nopts;
            nopts.gof = config.gof;
            nopts.reps = config.reps;
            nopts.seed = config.seed;
            nopts.n_threads = config.threads;
            nopts.degree_mode = config.degree_mode;
            net_rows = network_summary(corpus, trilabels, nopts);
            ages = cohort_age_stats(corpus, trilabels);

            try {
                const auto frequencies = interest_frequency_distribution(corpus);
                PowerLawFit fit = fit_power_law(frequencies);
                if (config.gof)
                    fit.p_value = gof_pvalue(frequencies, fit, config.reps,
                                             substream_seed(config.seed, 4), config.threads);
                interest_fit = fit;
            } catch (const std::invalid_argument&) {
                // too few distinct interest frequencies to fit
            }

            result.computed_stages |= kStageNetstats;
            if (selected & kStageNetstats) {
                write_network_summary_csv(path_of("network_summary.csv"), net_rows);
                emit("network_summary.csv");
                std::vector<long long> degrees;
                if (config.degree_mode == DegreeMode::union_lists) {
                    degrees = build_graph(corpus).degrees();
                } else {
                    for (const auto& [id, deg] : degree_sequence(corpus, config.degree_mode))
                        degrees.push_back(deg);
                }
                const auto table = rank_frequency(degrees);
                write_rank_frequency_csv(path_of("rank_frequency.csv"), table);
                emit("rank_frequency.csv");
                if (config.svg) {
                    const PowerLawFit* fit = nullptr;
                    for (const GroupNetworkSummary& r : net_rows)
                        if (r.group == "total" && r.fit) fit = &*r.fit;
                    write_rank_frequency_svg(path_of("rank_frequency.svg"), table, fit);
                    emit("rank_frequency.svg");
                }
            }
        }

        summary["status"] = "complete";
    } catch (const std::exception& e) {
        result.ok = false;
        result.error = e.what();
        summary["error"] = result.error;
    }

    summary["counts"] = {
        {"users", result.users},
        {"infectious", result.infectious},
        {"susceptible", result.susceptible},
        {"immune", result.immune},
        {"infectious_fraction", result.infectious_fraction},
        {"interests_tested", result.interests_tested},
        {"interests_significant", result.interests_significant},
        {"themes", result.themes},
    };
    if (!ages.empty()) summary["age_stats"] = age_stats_json(ages);
    if (interest_fit) {
        summary["interest_frequency_fit"] = {
            {"gamma", interest_fit->gamma},
            {"x_min", interest_fit->x_min},
            {"ks", interest_fit->ks},
            {"n_tail", interest_fit->n_tail},
        };
        if (interest_fit->p_value)
            summary["interest_frequency_fit"]["p_value"] = *interest_fit->p_value;
    }
    {
        std::ofstream out(path_of("run_summary.json"), std::ios::binary);
        out << summary.dump(2) << '\n';
        emit("run_summary.json");
    }

    for (const std::string& name : emitted)
        result.manifest.push_back({name, sha256_file(path_of(name))});
    {
        std::ofstream out(path_of("manifest.csv"), std::ios::binary);
        out << "file,sha256\n";
        for (const ManifestEntry& e : result.manifest) out << e.file << ',' << e.sha256 << '\n';
        out << "seed," << config.seed << '\n';
        out << "status," << (result.ok ? "complete" : "incomplete") << '\n';
    }
    return result;
}

}  // namespace lexnet
