// config.hpp
// Resolved run configuration of the CLI. Serialized into every JSON report
// so a run can be reproduced from its output alone. Worker count is an
// execution detail (results never depend on it) and is not serialized.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "llike/coprime_set.hpp"
#include "llike/sieve.hpp"

namespace llike {

struct RunConfig {
    std::string command;

    // Set selection: a family name, or a file of generators.
    std::string family;
    std::string set_file;
    std::vector<std::uint64_t> inject;
    Variant variant = Variant::big_omega;
    std::uint64_t xmax = 0;  // 0: derived from the command's largest argument

    std::uint64_t x = 0;
    std::vector<std::uint64_t> grid;
    std::vector<std::uint64_t> a;
    std::vector<std::uint64_t> h;
    std::uint64_t T = 0;
    double K = 1.0;
    unsigned l = 0;  // lcm-moment arity, 0 = skip
    std::uint64_t y = 0;
    std::uint64_t lo = 1;
    std::uint64_t hi = 0;
    bool with_n_c = false;

    std::uint64_t segment_len = std::uint64_t{1} << 22;
    unsigned workers = 1;

    std::string out;
    std::string format = "csv";
    std::string svg;

    std::uint64_t seed = 42;
    std::uint64_t nmax = 10000;
    unsigned sets = 20;

    SieveOptions sieve_options() const;
    bool operator==(const RunConfig&) const = default;
};

nlohmann::json to_json(const RunConfig& c);
// Missing keys keep their defaults; throws BadParams on a wrong type.
RunConfig config_from_json(const nlohmann::json& j);

// Validates the numeric parameters against module preconditions that do
// not depend on the loaded set.
void check_config(const RunConfig& c);

} // namespace llike
