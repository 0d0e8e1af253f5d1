#include "lexnet/reports.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "lexnet/util.hpp"

namespace lexnet {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write report file '" + path + "'");
    return out;
}

std::string opt_field(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

}  // namespace

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

void write_scores_csv(const std::string& path, const PopulationLabels& labels) {
    auto out = open_out(path);
    out << "user_id,total_weight,is_infectious\n";
    for (const UserScore& s : labels.scores)
        out << csv_escape(s.user_id) << ',' << format_double(s.total_weight) << ','
            << (s.is_infectious ? "true" : "false") << '\n';
}

void write_weight_histogram_csv(const std::string& path, const PopulationLabels& labels) {
    auto out = open_out(path);
    out << "weight_bucket,user_count\n";
    for (const auto& [bucket, count] : weight_histogram(labels))
        out << bucket << ',' << count << '\n';
}

void write_interests_csv(const std::string& path, const std::vector<InterestTest>& tests) {
    auto out = open_out(path);
    out << "interest,a,b,c,d,p_value,significant,indicativeness\n";
    for (const InterestTest& t : tests)
        out << csv_escape(t.interest) << ',' << t.table.a << ',' << t.table.b << ','
            << t.table.c << ',' << t.table.d << ',' << format_double(t.p_value) << ','
            << (t.significant ? "true" : "false") << ',' << opt_field(t.indicativeness)
            << '\n';
}

void write_themes_csv(const std::string& path, const std::vector<Theme>& themes) {
    auto out = open_out(path);
    out << "theme_id,interests,prevalence_infectious,prevalence_rest\n";
    for (const Theme& t : themes) {
        std::string joined;
        for (const std::string& i : t.interests) {
            if (!joined.empty()) joined += "; ";
            joined += i;
        }
        out << t.theme_id << ',' << csv_escape(joined) << ','
            << opt_field(t.prevalence_infectious) << ',' << opt_field(t.prevalence_rest)
            << '\n';
    }
}

void write_labels_csv(const std::string& path, const std::vector<TriLabel>& labels) {
    auto out = open_out(path);
    out << "user_id,label,score\n";
    for (const TriLabel& t : labels)
        out << csv_escape(t.user_id) << ',' << tri_group_name(t.label) << ','
            << opt_field(t.score) << '\n';
    const TriCounts counts = count_groups(labels);
    out << "\ngroup,size\n";
    out << "infectious," << counts.infectious << '\n';
    out << "susceptible," << counts.susceptible << '\n';
    out << "immune," << counts.immune << '\n';
}

void write_network_summary_csv(const std::string& path,
                               const std::vector<GroupNetworkSummary>& rows) {
    auto out = open_out(path);
    out << "group,size,edges,mean_age,std_age,max_degree,gamma,x_min,p_value\n";
    for (const GroupNetworkSummary& r : rows) {
        out << r.group << ',' << r.size << ',' << r.edges << ',' << opt_field(r.mean_age)
            << ',' << opt_field(r.std_age) << ',' << r.max_degree << ',';
        if (r.fit) {
            out << format_double(r.fit->gamma) << ',' << r.fit->x_min << ','
                << opt_field(r.fit->p_value);
        } else {
            out << ",,";
        }
        out << '\n';
    }
}

void write_rank_frequency_csv(const std::string& path,
                              const std::vector<std::pair<std::size_t, long long>>& table) {
    auto out = open_out(path);
    out << "rank,frequency\n";
    for (const auto& [rank, freq] : table) out << rank << ',' << freq << '\n';
}

namespace {

struct LogPlot {
    double min_x, max_x, min_y, max_y;
    static constexpr double kW = 640, kH = 480, kPad = 56;

    double px(double logx) const {
        return kPad + (logx - min_x) / std::max(1e-9, max_x - min_x) * (kW - 2 * kPad);
    }
    double py(double logy) const {
        return kH - kPad - (logy - min_y) / std::max(1e-9, max_y - min_y) * (kH - 2 * kPad);
    }
};

}  // namespace

void write_rank_frequency_svg(const std::string& path,
                              const std::vector<std::pair<std::size_t, long long>>& table,
                              const PowerLawFit* fit) {
    auto out = open_out(path);
    std::vector<std::pair<double, double>> pts;  // (log10 rank, log10 freq)
    for (const auto& [rank, freq] : table)
        if (freq > 0) pts.emplace_back(std::log10(double(rank)), std::log10(double(freq)));

    LogPlot plot{0, 1, 0, 1};
    if (!pts.empty()) {
        plot.min_x = plot.max_x = pts[0].first;
        plot.min_y = plot.max_y = pts[0].second;
        for (const auto& [x, y] : pts) {
            plot.min_x = std::min(plot.min_x, x);
            plot.max_x = std::max(plot.max_x, x);
            plot.min_y = std::min(plot.min_y, y);
            plot.max_y = std::max(plot.max_y, y);
        }
    }

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << LogPlot::kW
        << "\" height=\"" << LogPlot::kH << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"300\" y=\"470\" font-size=\"13\">log10 rank</text>\n";
    out << "<text x=\"12\" y=\"240\" font-size=\"13\" transform=\"rotate(-90 12 240)\">"
           "log10 frequency</text>\n";
    for (const auto& [x, y] : pts)
        out << "<circle cx=\"" << format_double(plot.px(x)) << "\" cy=\""
            << format_double(plot.py(y)) << "\" r=\"2\" fill=\"steelblue\"/>\n";

    if (fit && fit->n_tail > 0) {
        // Model curve: expected rank of value x is n_tail · P(X ≥ x).
        const double zeta_min = hurwitz_zeta(fit->gamma, double(fit->x_min));
        const long long x_hi = table.empty() ? fit->x_min : table.front().second;
        std::string points;
        for (double x = double(fit->x_min); x <= double(std::max(fit->x_min, x_hi));
             x *= 1.25) {
            const double rank = fit->n_tail * hurwitz_zeta(fit->gamma, x) / zeta_min;
            if (rank < 1) break;
            points += format_double(plot.px(std::log10(rank))) + "," +
                      format_double(plot.py(std::log10(x))) + " ";
        }
        out << "<polyline points=\"" << points
            << "\" fill=\"none\" stroke=\"crimson\" stroke-dasharray=\"6,4\"/>\n";
    }
    out << "</svg>\n";
}

void write_themes_svg(const std::string& path, const std::vector<Theme>& themes) {
    auto out = open_out(path);
    const double bar_h = 11, gap = 8, left = 160, width = 420;
    const double height = 40 + themes.size() * (2 * bar_h + gap);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << left + width + 60
        << "\" height=\"" << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    double y = 20;
    for (const Theme& t : themes) {
        std::string label = "theme " + std::to_string(t.theme_id);
        if (!t.interests.empty()) label += " (" + t.interests.front() + ")";
        out << "<text x=\"4\" y=\"" << y + bar_h << "\" font-size=\"11\">" << label
            << "</text>\n";
        const double inf = t.prevalence_infectious.value_or(0.0);
        const double rest = t.prevalence_rest.value_or(0.0);
        out << "<rect x=\"" << left << "\" y=\"" << y << "\" width=\""
            << format_double(inf / 100.0 * width) << "\" height=\"" << bar_h
            << "\" fill=\"crimson\"/>\n";
        out << "<rect x=\"" << left << "\" y=\"" << y + bar_h + 1 << "\" width=\""
            << format_double(rest / 100.0 * width) << "\" height=\"" << bar_h
            << "\" fill=\"steelblue\"/>\n";
        y += 2 * bar_h + gap;
    }
    out << "</svg>\n";
}

std::string sha256_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file for digest: '" + path + "'");

    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    char buf[1 << 16];
    while (in) {
        in.read(buf, sizeof buf);
        EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, digest, &len);
    EVP_MD_CTX_free(ctx);

    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

}  // namespace lexnet
