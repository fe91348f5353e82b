#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "losim/distribution.hpp"
#include "losim/numerics.hpp"

namespace losim {

/// Exit codes: usage and config validation failures vs numerical-tolerance
/// failures (including cutoff-too-small) are distinct.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

/// Fully resolved run description. Options come from flags, from a JSON
/// config file (--config), or both; setting the same field in both places is
/// rejected so each value has exactly one source.
struct RunConfig {
    std::string command;

    // input state
    StateFamily family = StateFamily::Fock;
    std::int64_t n = -1;
    std::int64_t m = -1;
    std::vector<cplx> alphas;

    // interferometer: exactly one of the two
    std::int64_t haar_seed = -1;
    std::string unitary_file;

    // artifacts
    std::string output_path;
    std::string format = "json";

    // sampling
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;

    // oracle
    std::int64_t cutoff = -1; // <0 → pick automatically
    double tol = 1e-6;

    // wigner
    cplx wigner_alpha{0.0, 0.0};
    std::string wigner_kind = "spacs";
    double window = 5.0;
    std::int64_t resolution = 400;
    bool slice = false;
    double x_min = 0.0;
    double x_max = 0.0;
    bool x_range_set = false;

    // transition
    std::string rule;
    std::vector<std::uint64_t> n_values;

    // bench
    std::vector<std::int64_t> sizes;
    std::int64_t reps = 3;
    std::int64_t threads = 4;
};

/// "re", "±bi", "a±bi" (also 'j', bare "i"). Throws validation_error.
cplx parse_complex(const std::string& text);

/// Parses argv (without the program name) plus an optional --config JSON file
/// into a validated RunConfig. All violations are collected and reported in
/// one validation_error.
RunConfig parse_config(const std::vector<std::string>& args);

/// Executes the run, writing artifacts and a one-line summary to `out`.
/// Returns kExitOk or kExitNumerical; throws validation_error for problems
/// that config validation could not catch (missing files etc.).
int run(const RunConfig& config, std::ostream& out);

} // namespace losim
