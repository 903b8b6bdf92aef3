#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace parahoric::cli {

constexpr int kOk = 0;
constexpr int kCheckedFailure = 1;
constexpr int kUsageError = 2;

struct RunConfig {
    std::string command;
    std::string format = "json";
    std::uint64_t seed = 1;

    // slopes / bgg-check / catalog
    std::string group;
    std::string q;
    std::string p_subset;
    std::string weight;
    std::string vals;
    std::string chain;
    std::string torus;
    int degree = -1;

    // lift / charpoly
    std::int64_t N = 0;
    std::int64_t p = 2;
    std::optional<std::int64_t> k;
    std::optional<std::size_t> M;
    std::string choice = "ordinary";
    bool use_disc = false;
    std::int64_t disc_center = 0;
    std::size_t xdeg = 10;
    std::size_t order = 3;
    std::int64_t radius = 1;
    std::optional<std::string> adapted_h;
};

// Default number of moments: PARAHORIC_PRECISION if set, else 20.
std::size_t default_precision();

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace parahoric::cli
