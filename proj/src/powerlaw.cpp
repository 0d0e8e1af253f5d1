#include "lexnet/powerlaw.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

#include "lexnet/util.hpp"

namespace lexnet {

double hurwitz_zeta(double s, double a) {
    // Sum (a+k)^{-s} directly until the index reaches kTailStart, then close
    // with the Euler–Maclaurin expansion at that point. With a start index
    // ≥ 64 and s ≤ 8 the first omitted Bernoulli term is below 1e-12
    // relative.
    constexpr double kTailStart = 64.0;
    double sum = 0.0;
    double k = a;
    while (k < kTailStart) {
        sum += std::pow(k, -s);
        k += 1.0;
    }
    const double t = std::pow(k, -s);
    sum += t * k / (s - 1.0);  // ∫_k^∞ x^{-s} dx
    sum += 0.5 * t;

    const double inv_k2 = 1.0 / (k * k);
    double rising = s;          // (s)(s+1)... rising factorial
    double power = t / k;       // k^{-s-1}
    sum += rising * power / 12.0;
    rising *= (s + 1.0) * (s + 2.0);
    power *= inv_k2;
    sum -= rising * power / 720.0;
    rising *= (s + 3.0) * (s + 4.0);
    power *= inv_k2;
    sum += rising * power / 30240.0;
    rising *= (s + 5.0) * (s + 6.0);
    power *= inv_k2;
    sum -= rising * power / 1209600.0;
    return sum;
}

namespace {

/// Golden-section maximization of a unimodal function on [lo, hi].
template <class F>
double golden_max(F&& f, double lo, double hi, double tol) {
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > tol) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = f(x1);
        }
    }
    return 0.5 * (lo + hi);
}

struct DistinctCounts {
    std::vector<long long> value;
    std::vector<std::size_t> count;
    std::vector<std::size_t> tail_n;      // samples ≥ value[i]
    std::vector<double> tail_log_sum;     // Σ ln x over samples ≥ value[i]
};

DistinctCounts distinct_counts(std::vector<long long> sample) {
    std::sort(sample.begin(), sample.end());
    DistinctCounts d;
    for (std::size_t i = 0; i < sample.size();) {
        std::size_t j = i;
        while (j < sample.size() && sample[j] == sample[i]) ++j;
        d.value.push_back(sample[i]);
        d.count.push_back(j - i);
        i = j;
    }
    const std::size_t m = d.value.size();
    d.tail_n.assign(m, 0);
    d.tail_log_sum.assign(m, 0.0);
    std::size_t acc_n = 0;
    double acc_log = 0.0;
    for (std::size_t i = m; i-- > 0;) {
        acc_n += d.count[i];
        acc_log += d.count[i] * std::log(static_cast<double>(d.value[i]));
        d.tail_n[i] = acc_n;
        d.tail_log_sum[i] = acc_log;
    }
    return d;
}

}  // namespace

namespace {

/// MLE of gamma plus the tail KS distance for one candidate x_min, where
/// `ci` indexes the first distinct value ≥ x_min.
PowerLawFit fit_at_candidate(const DistinctCounts& d, std::size_t ci, long long x_min) {
    const double n_tail = static_cast<double>(d.tail_n[ci]);
    const double log_sum = d.tail_log_sum[ci];
    const std::size_t m = d.value.size();

    const auto log_likelihood = [&](double gamma) {
        return -n_tail * std::log(hurwitz_zeta(gamma, static_cast<double>(x_min))) -
               gamma * log_sum;
    };
    PowerLawFit fit;
    fit.gamma = golden_max(log_likelihood, kGammaSearchLo, kGammaSearchHi, 1e-4);
    fit.x_min = x_min;
    fit.n_tail = d.tail_n[ci];

    // KS distance is the supremum of |empirical − model| over the whole
    // integer range: both step functions are constant between observed
    // values, so it is attained either at an observed value or just before
    // the next one (the empirical CDF is flat across the gap while the
    // model keeps rising).
    const double zeta_x_min = hurwitz_zeta(fit.gamma, static_cast<double>(x_min));
    const auto model_cdf = [&](long long x) {
        return 1.0 - hurwitz_zeta(fit.gamma, static_cast<double>(x) + 1.0) / zeta_x_min;
    };
    double cum = 0.0;
    if (d.value[ci] > x_min)
        fit.ks = std::max(fit.ks, model_cdf(d.value[ci] - 1));
    for (std::size_t i = ci; i < m; ++i) {
        cum += static_cast<double>(d.count[i]) / n_tail;
        fit.ks = std::max(fit.ks, std::fabs(cum - model_cdf(d.value[i])));
        if (i + 1 < m && d.value[i + 1] > d.value[i] + 1)
            fit.ks = std::max(fit.ks, std::fabs(cum - model_cdf(d.value[i + 1] - 1)));
    }
    return fit;
}

void check_sample(const std::vector<long long>& sample) {
    if (sample.empty()) throw std::invalid_argument("fit_power_law: empty sample");
    for (long long x : sample)
        if (x < 1) throw std::invalid_argument("fit_power_law: sample values must be positive");
}

}  // namespace

PowerLawFit fit_power_law(const std::vector<long long>& sample) {
    check_sample(sample);
    const DistinctCounts d = distinct_counts(sample);
    const std::size_t m = d.value.size();
    if (m < 2) throw std::invalid_argument("fit_power_law: degenerate sample");

    PowerLawFit best;
    best.ks = std::numeric_limits<double>::infinity();
    // Candidates are the distinct values that keep at least two distinct
    // values in the tail; beyond the smallest value, a candidate must also
    // retain an xmin_candidate_eligible share of the sample.
    for (std::size_t ci = 0; ci + 1 < m; ++ci) {
        if (ci > 0 && !xmin_candidate_eligible(d.tail_n[ci], sample.size())) break;
        PowerLawFit fit = fit_at_candidate(d, ci, d.value[ci]);
        if (fit.ks < best.ks) best = fit;
    }
    best.low_confidence = best.n_tail < 10 || m < 3;
    return best;
}

PowerLawFit fit_power_law_at(const std::vector<long long>& sample, long long x_min) {
    check_sample(sample);
    const DistinctCounts d = distinct_counts(sample);
    std::size_t ci = 0;
    while (ci < d.value.size() && d.value[ci] < x_min) ++ci;
    if (ci == d.value.size())
        throw std::invalid_argument("fit_power_law_at: empty tail at this x_min");
    PowerLawFit fit = fit_at_candidate(d, ci, x_min);
    fit.low_confidence = fit.n_tail < 10 || d.value.size() - ci < 3;
    return fit;
}

DiscretePowerLawSampler::DiscretePowerLawSampler(double gamma, long long x_min)
    : gamma_(gamma), x_min_(x_min) {
    if (!(gamma > 1.0) || x_min < 1)
        throw std::invalid_argument("DiscretePowerLawSampler: need gamma > 1 and x_min ≥ 1");
    zeta_x_min_ = hurwitz_zeta(gamma_, static_cast<double>(x_min_));

    constexpr std::size_t kMaxTable = 1u << 20;
    constexpr double kBodyMass = 1.0 - 1e-9;
    double cum = 0.0;
    for (std::size_t i = 0; i < kMaxTable; ++i) {
        cum += std::pow(static_cast<double>(x_min_ + static_cast<long long>(i)), -gamma_) /
               zeta_x_min_;
        cdf_.push_back(cum);
        if (cum >= kBodyMass) break;
    }
}

long long DiscretePowerLawSampler::sample(double u) const {
    if (u < cdf_.back()) {
        const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
        return x_min_ + static_cast<long long>(it - cdf_.begin());
    }
    // Tail draw: find the smallest x with F(x) ≥ u via the survival function
    // S(x) = ζ(γ, x+1)/ζ(γ, x_min). Doubling bracket, then bisection.
    constexpr long long kMax = 1LL << 62;
    const double target_survival = 1.0 - u;
    const auto survival = [&](long long x) {
        return hurwitz_zeta(gamma_, static_cast<double>(x) + 1.0) / zeta_x_min_;
    };
    long long lo = x_min_ + static_cast<long long>(cdf_.size()) - 1;  // F(lo) < u
    long long hi = lo;
    while (survival(hi) > target_survival) {
        if (hi >= kMax / 2) return kMax;  // beyond any realistic draw
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        const long long mid = lo + (hi - lo) / 2;
        if (survival(mid) > target_survival)
            lo = mid;
        else
            hi = mid;
    }
    return hi;
}

double gof_pvalue(const std::vector<long long>& sample, const PowerLawFit& fit, int reps,
                  std::uint64_t seed, int n_threads) {
    if (reps < 1) throw std::invalid_argument("gof_pvalue: reps must be ≥ 1");
    const std::size_t n = sample.size();
    if (n == 0) throw std::invalid_argument("gof_pvalue: empty sample");

    std::vector<long long> below;
    for (long long x : sample)
        if (x < fit.x_min) below.push_back(x);
    std::sort(below.begin(), below.end());  // input-order independence
    const double p_below = static_cast<double>(below.size()) / static_cast<double>(n);

    const DiscretePowerLawSampler sampler(fit.gamma, fit.x_min);
    const double observed_ks = fit.ks;

    std::vector<char> extreme(reps, 0);
    const auto run_replicate = [&](int rep) {
        std::mt19937_64 eng(substream_seed(seed, static_cast<std::uint64_t>(rep)));
        std::vector<long long> synth;
        synth.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (!below.empty() && uniform01(eng) < p_below)
                synth.push_back(below[uniform_below(eng, below.size())]);
            else
                synth.push_back(sampler.sample(uniform01(eng)));
        }
        double ks;
        try {
            ks = fit_power_law(synth).ks;
        } catch (const std::invalid_argument&) {
            ks = std::numeric_limits<double>::infinity();  // degenerate replicate
        }
        extreme[rep] = ks >= observed_ks ? 1 : 0;
    };

    int workers = n_threads > 0 ? n_threads
                                : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min(workers, reps));
    if (workers == 1) {
        for (int rep = 0; rep < reps; ++rep) run_replicate(rep);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (int rep = next.fetch_add(1); rep < reps; rep = next.fetch_add(1))
                    run_replicate(rep);
            });
        }
        for (std::thread& t : pool) t.join();
    }

    std::size_t count = 0;
    for (char c : extreme) count += c;
    return static_cast<double>(count) / static_cast<double>(reps);
}

}  // namespace lexnet
