#ifndef LEXNET_UTIL_HPP
#define LEXNET_UTIL_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lexnet {

/// Calendar date (no time zone). Only what profile records and age
/// computations need.
struct Date {
    int year = 0;
    int month = 0;
    int day = 0;

    bool valid() const;
    std::string to_string() const;  // YYYY-MM-DD

    friend bool operator==(const Date&, const Date&) = default;
};

/// Parses a strict YYYY-MM-DD date. Returns nullopt on any deviation.
std::optional<Date> parse_date(std::string_view s);

/// Completed years between `birth` and `at` (birthday-aware floor).
int years_between(const Date& birth, const Date& at);

/// Trims ASCII whitespace on both ends.
std::string_view trim(std::string_view s);

/// Deterministic printf-style double formatting for report files.
std::string format_double(double v);

/// SplitMix64 step; used to derive independent RNG substreams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed for the RNG of subtask `index` of a job seeded with `root`.
inline std::uint64_t substream_seed(std::uint64_t root, std::uint64_t index) {
    std::uint64_t s = root ^ (0x5851f42d4c957f2dULL * (index + 1));
    return splitmix64(s);
}

/// Uniform double in [0,1) from a 64-bit engine. std::*_distribution is
/// implementation-defined, so report-affecting draws go through these.
template <class Engine>
double uniform01(Engine& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, n). n must be positive.
template <class Engine>
std::uint64_t uniform_below(Engine& eng, std::uint64_t n) {
    // Unbiased via rejection on the top of the range.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = eng();
    } while (x >= limit);
    return x % n;
}

}  // namespace lexnet

#endif
