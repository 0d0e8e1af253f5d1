#ifndef LEXNET_REPORTS_HPP
#define LEXNET_REPORTS_HPP

#include <string>
#include <vector>

#include "lexnet/interest_stats.hpp"
#include "lexnet/netmetrics.hpp"
#include "lexnet/scorer.hpp"
#include "lexnet/susceptibility.hpp"
#include "lexnet/themes.hpp"

namespace lexnet {

std::string csv_escape(const std::string& field);

void write_scores_csv(const std::string& path, const PopulationLabels& labels);
void write_weight_histogram_csv(const std::string& path, const PopulationLabels& labels);
void write_interests_csv(const std::string& path, const std::vector<InterestTest>& tests);
void write_themes_csv(const std::string& path, const std::vector<Theme>& themes);

/// Per-user rows followed by a blank line and a group,size block.
void write_labels_csv(const std::string& path, const std::vector<TriLabel>& labels);

void write_network_summary_csv(const std::string& path,
                               const std::vector<GroupNetworkSummary>& rows);
void write_rank_frequency_csv(const std::string& path,
                              const std::vector<std::pair<std::size_t, long long>>& table);

/// Log-log rank/frequency scatter with the fitted power-law overlaid as a
/// dashed segment starting at x_min.
void write_rank_frequency_svg(const std::string& path,
                              const std::vector<std::pair<std::size_t, long long>>& table,
                              const PowerLawFit* fit);

/// Paired horizontal bars: per-theme prevalence in the two groups.
void write_themes_svg(const std::string& path, const std::vector<Theme>& themes);

/// Hex SHA-256 of a file's contents.
std::string sha256_file(const std::string& path);

}  // namespace lexnet

#endif
