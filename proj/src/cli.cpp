#include "losim/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "losim/exact.hpp"
#include "losim/oracle.hpp"
#include "losim/permanent.hpp"
#include "losim/sampling.hpp"
#include "losim/serialization.hpp"
#include "losim/transition.hpp"
#include "losim/wigner.hpp"

namespace losim {

namespace {

using nlohmann::json;

std::string complex_to_string(cplx z) {
    std::string out = format_double(z.real());
    if (z.imag() != 0.0) {
        out += (z.imag() < 0.0 ? "-" : "+") + format_double(std::abs(z.imag())) + "i";
    }
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

// One --flag / JSON-key pair. The option pointer detects double assignment.
struct Binding {
    CLI::Option* opt = nullptr;
    std::function<void(const json&)> apply;
};

using BindingMap = std::map<std::string, Binding>;

std::vector<cplx> parse_alpha_list(const std::vector<std::string>& strs) {
    std::vector<cplx> out;
    out.reserve(strs.size());
    for (const std::string& s : strs) out.push_back(parse_complex(s));
    return out;
}

UnitaryMatrix resolve_unitary(const RunConfig& cfg) {
    if (!cfg.unitary_file.empty()) {
        UnitaryMatrix u = matrix_from_json(read_text_file(cfg.unitary_file));
        if (cfg.m > 0 && static_cast<std::size_t>(cfg.m) != u.dim()) {
            throw validation_error("invalid-input: --m disagrees with the matrix file dimension");
        }
        return u;
    }
    return haar_random_unitary(static_cast<std::size_t>(cfg.m),
                               static_cast<std::uint64_t>(cfg.haar_seed));
}

InputSpec resolve_input(const RunConfig& cfg, std::size_t m) {
    switch (cfg.family) {
        case StateFamily::Fock: return InputSpec::fock(static_cast<std::size_t>(cfg.n), m);
        case StateFamily::DSPFS: return InputSpec::dspfs(m, cfg.alphas);
        case StateFamily::SPACS: return InputSpec::spacs(m, cfg.alphas);
    }
    throw validation_error("invalid-input: unknown family");
}

std::vector<cplx> padded_alphas(const RunConfig& cfg, std::size_t m) {
    std::vector<cplx> padded(m, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < cfg.alphas.size(); ++i) padded[i] = cfg.alphas[i];
    return padded;
}

int run_distribution(const RunConfig& cfg, std::ostream& out) {
    const UnitaryMatrix u = resolve_unitary(cfg);
    const std::size_t m = u.dim();

    if (cfg.family == StateFamily::SPACS) {
        const SectorDecomposition dec = spacs_distribution(u, cfg.alphas);
        double weight_sum = 0.0;
        for (double w : dec.sector_weights) weight_sum += w;
        write_text_file(cfg.output_path,
                        cfg.format == "json" ? sectors_to_json(dec) : sectors_to_csv(dec));
        out << "distribution family=spacs n=" << dec.n << " m=" << m
            << " sectors=" << dec.sector_weights.size()
            << " weight_sum=" << format_double(weight_sum)
            << " cross_checked=" << (dec.weights_cross_checked ? "yes" : "no (unequal |alpha|)")
            << " out=" << cfg.output_path << "\n";
        return kExitOk;
    }

    const OutputDistribution dist =
        cfg.family == StateFamily::Fock
            ? fock_distribution(u, static_cast<std::size_t>(cfg.n))
            : dspfs_distribution(u, cfg.alphas);
    write_text_file(cfg.output_path,
                    cfg.format == "json" ? distribution_to_json(dist) : distribution_to_csv(dist));
    out << "distribution family=" << family_name(cfg.family) << " n=" << cfg.n << " m=" << m
        << " entries=" << dist.size() << " total_prob=" << format_double(dist.total_mass())
        << " out=" << cfg.output_path << "\n";
    return kExitOk;
}

int run_sample(const RunConfig& cfg, std::ostream& out) {
    const UnitaryMatrix u = resolve_unitary(cfg);
    const std::size_t m = u.dim();

    OutputDistribution source;
    if (cfg.family == StateFamily::SPACS) {
        source = spacs_distribution(u, cfg.alphas).to_full_distribution();
    } else if (cfg.family == StateFamily::DSPFS) {
        source = dspfs_distribution(u, cfg.alphas);
    } else {
        source = fock_distribution(u, static_cast<std::size_t>(cfg.n));
    }

    const SampleBatch batch = draw(source, cfg.samples, cfg.seed, family_name(cfg.family));
    write_text_file(cfg.output_path,
                    cfg.format == "json" ? batch_to_json(batch, m) : batch_to_csv(batch, m));
    const double tvd = total_variation(empirical_distribution(batch), source);
    out << "sample family=" << family_name(cfg.family) << " n=" << cfg.n << " m=" << m
        << " samples=" << cfg.samples << " seed=" << cfg.seed
        << " empirical_tvd=" << format_double(tvd) << " out=" << cfg.output_path << "\n";
    return kExitOk;
}

int run_oracle_check(const RunConfig& cfg, std::ostream& out) {
    const UnitaryMatrix u = resolve_unitary(cfg);
    const std::size_t m = u.dim();
    const InputSpec spec = resolve_input(cfg, m);
    const int cutoff =
        cfg.cutoff >= 0 ? static_cast<int>(cfg.cutoff) : default_cutoff(spec, u);

    TruncatedState state = prepare_input(spec, cutoff);
    state = apply_unitary(state, u);
    if (cfg.family != StateFamily::Fock) {
        state = counter_displace(state, propagate_displacements(u, padded_alphas(cfg, m)));
    }
    const OutputDistribution oracle = measure_distribution(state);

    OutputDistribution exact;
    double sector_dev = 0.0;
    if (cfg.family == StateFamily::SPACS) {
        const SectorDecomposition dec = spacs_distribution(u, cfg.alphas);
        exact = dec.to_full_distribution();
        // Sector weights observed through the oracle: mass per photon total.
        std::vector<double> oracle_weights(dec.n + 1, 0.0);
        for (const DistributionEntry& e : oracle.entries()) {
            const int t = e.config.total();
            if (t >= 0 && t <= static_cast<int>(dec.n)) oracle_weights[t] += e.probability;
        }
        for (std::size_t i = 0; i <= dec.n; ++i) {
            sector_dev = std::max(sector_dev,
                                  std::abs(oracle_weights[i] - dec.sector_weights[i]));
        }
    } else if (cfg.family == StateFamily::DSPFS) {
        exact = dspfs_distribution(u, cfg.alphas);
    } else {
        exact = fock_distribution(u, static_cast<std::size_t>(cfg.n));
    }

    const double tvd = total_variation(exact, oracle);
    double retained = 0.0;
    for (const DistributionEntry& e : oracle.entries()) {
        if (e.config.total() == static_cast<int>(spec.n)) retained += e.probability;
    }

    const bool ok = tvd <= cfg.tol;
    out << "oracle-check family=" << family_name(cfg.family) << " n=" << spec.n << " m=" << m
        << " cutoff=" << cutoff << " leakage=" << format_double(state.leakage)
        << " tvd=" << format_double(tvd) << " tol=" << format_double(cfg.tol)
        << " retained_mass_n=" << format_double(retained);
    if (cfg.family == StateFamily::SPACS) {
        out << " sector_weight_dev=" << format_double(sector_dev);
    }
    out << " status=" << (ok ? "ok" : "tolerance-exceeded") << "\n";

    if (!cfg.output_path.empty()) {
        std::string report = "{\"family\":\"" + family_name(cfg.family) + "\"";
        report += ",\"n\":" + std::to_string(spec.n) + ",\"m\":" + std::to_string(m);
        report += ",\"cutoff\":" + std::to_string(cutoff);
        report += ",\"leakage\":" + format_double(state.leakage);
        report += ",\"tvd\":" + format_double(tvd) + ",\"tol\":" + format_double(cfg.tol);
        if (cfg.family == StateFamily::SPACS) {
            report += ",\"sector_weight_dev\":" + format_double(sector_dev);
        }
        report += ",\"status\":\"" + std::string(ok ? "ok" : "tolerance-exceeded") + "\"}\n";
        write_text_file(cfg.output_path, report);
    }
    return ok ? kExitOk : kExitNumerical;
}

int run_transition(const RunConfig& cfg, std::ostream& out) {
    const AlphaScalingRule rule = rule_from_name(cfg.rule);
    std::vector<std::size_t> n_values(cfg.n_values.begin(), cfg.n_values.end());
    const std::vector<RegimeReport> reports = limit_sweep(rule, n_values);
    write_text_file(cfg.output_path, sweep_to_csv(reports));

    const RegimeReport& last = reports.back();
    double gap = 0.0;
    switch (rule) {
        case AlphaScalingRule::InverseN: gap = std::abs(last.p_n - std::exp(-1.0)); break;
        case AlphaScalingRule::InverseNSquared: gap = 1.0 - last.p_n; break;
        case AlphaScalingRule::NSquared: gap = 1.0 - last.p_0; break;
    }
    out << "transition rule=" << cfg.rule << " points=" << reports.size()
        << " last_n=" << last.n << " p_n=" << format_double(last.p_n)
        << " p_0=" << format_double(last.p_0) << " limit_gap=" << format_double(gap)
        << " regime=" << regime_name(last.regime) << " out=" << cfg.output_path << "\n";
    return kExitOk;
}

int run_wigner(const RunConfig& cfg, std::ostream& out) {
    if (cfg.slice) {
        const double alpha = cfg.wigner_alpha.real();
        double x_min = cfg.x_min;
        double x_max = cfg.x_max;
        if (!cfg.x_range_set) {
            x_min = 0.5 * alpha - 4.0;
            x_max = 0.5 * alpha + 4.0;
        }
        const auto slice =
            major_axis_slice(alpha, x_min, x_max, static_cast<std::size_t>(cfg.resolution));

        std::string content;
        if (cfg.format == "json") {
            content = "{\"alpha\":" + format_double(alpha) + ",\"points\":[";
            for (std::size_t i = 0; i < slice.size(); ++i) {
                if (i) content += ',';
                content += '[' + format_double(slice[i].first) + ',' +
                           format_double(slice[i].second) + ']';
            }
            content += "]}\n";
        } else {
            content = slice_to_csv(slice);
        }
        write_text_file(cfg.output_path, content);

        double min_w = slice.front().second;
        for (const auto& [x, w] : slice) min_w = std::min(min_w, w);
        const double w_center = spacs_wigner(cplx(alpha, 0.0), cplx(0.5 * alpha, 0.0));
        out << "wigner slice alpha=" << format_double(alpha) << " points=" << slice.size()
            << " min_w=" << format_double(min_w)
            << " w_at_half_alpha=" << format_double(w_center) << " out=" << cfg.output_path
            << "\n";
        return kExitOk;
    }

    const WignerKind kind =
        cfg.wigner_kind == "coherent" ? WignerKind::Coherent : WignerKind::Spacs;
    const WignerGrid grid = wigner_grid(cfg.wigner_alpha, cfg.window,
                                        static_cast<std::size_t>(cfg.resolution), kind);
    const NegativityMetrics metrics = negativity_metrics(grid);
    write_text_file(cfg.output_path,
                    cfg.format == "json" ? grid_to_json(grid) : grid_to_csv(grid));
    out << "wigner grid kind=" << cfg.wigner_kind
        << " alpha=" << complex_to_string(cfg.wigner_alpha)
        << " window=" << format_double(cfg.window) << " resolution=" << cfg.resolution
        << " integral=" << format_double(grid.integral())
        << " min_w=" << format_double(metrics.min_value)
        << " neg_volume=" << format_double(metrics.negative_volume) << " out=" << cfg.output_path
        << "\n";
    return kExitOk;
}

int run_bench(const RunConfig& cfg, std::ostream& out) {
    using clock = std::chrono::steady_clock;
    std::string csv = "n,rep,serial_ns,parallel_ns,speedup\n";
    double last_best_serial = 0.0;
    double last_best_parallel = 0.0;
    std::int64_t last_n = 0;
    double sink = 0.0;

    for (std::int64_t n : cfg.sizes) {
        const ComplexMatrix a =
            haar_random_unitary(static_cast<std::size_t>(n),
                                cfg.seed + static_cast<std::uint64_t>(n))
                .matrix();
        sink += std::abs(permanent_ryser(a, 1)); // warm caches before timing

        double best_serial = 0.0;
        double best_parallel = 0.0;
        for (std::int64_t rep = 0; rep < cfg.reps; ++rep) {
            auto t0 = clock::now();
            sink += std::abs(permanent_ryser(a, 1));
            auto t1 = clock::now();
            sink += std::abs(permanent_ryser(a, static_cast<int>(cfg.threads)));
            auto t2 = clock::now();

            const double serial_ns =
                std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
            const double parallel_ns =
                std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1).count();
            csv += std::to_string(n) + ',' + std::to_string(rep) + ',' +
                   format_double(serial_ns) + ',' + format_double(parallel_ns) + ',' +
                   format_double(serial_ns / parallel_ns) + '\n';
            if (rep == 0 || serial_ns < best_serial) best_serial = serial_ns;
            if (rep == 0 || parallel_ns < best_parallel) best_parallel = parallel_ns;
        }
        last_best_serial = best_serial;
        last_best_parallel = best_parallel;
        last_n = n;
    }
    write_text_file(cfg.output_path, csv);
    (void)sink;

    out << "bench sizes=" << cfg.sizes.size() << " reps=" << cfg.reps
        << " threads=" << cfg.threads << " procs=" << omp_get_num_procs()
        << " n=" << last_n << " best_serial_ns=" << format_double(last_best_serial)
        << " best_parallel_ns=" << format_double(last_best_parallel)
        << " speedup=" << format_double(last_best_serial / last_best_parallel)
        << " out=" << cfg.output_path << "\n";
    return kExitOk;
}

} // namespace

cplx parse_complex(const std::string& text) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    }
    const auto fail = [&]() -> cplx {
        throw validation_error("invalid-input: cannot parse complex literal '" + text + "'");
    };
    if (s.empty()) return fail();
    const auto imag_tail = [](char c) { return c == 'i' || c == 'j'; };

    if (s == "i" || s == "+i" || s == "j" || s == "+j") return cplx(0.0, 1.0);
    if (s == "-i" || s == "-j") return cplx(0.0, -1.0);

    const char* p = s.c_str();
    char* end = nullptr;
    const double a = std::strtod(p, &end);
    if (end == p) return fail();
    if (*end == '\0') return cplx(a, 0.0);
    if (imag_tail(*end) && *(end + 1) == '\0') return cplx(0.0, a);

    if (*end != '+' && *end != '-') return fail();
    const std::string rest(end);
    if (rest == "+i" || rest == "+j") return cplx(a, 1.0);
    if (rest == "-i" || rest == "-j") return cplx(a, -1.0);

    char* end2 = nullptr;
    const double b = std::strtod(end, &end2);
    if (end2 == end || !imag_tail(*end2) || *(end2 + 1) != '\0') return fail();
    return cplx(a, b);
}

RunConfig parse_config(const std::vector<std::string>& args) {
    RunConfig cfg;
    std::string family_str;
    std::vector<std::string> alpha_strs;
    std::string wigner_alpha_str;
    std::string config_path;
    bool resolution_given = false;

    CLI::App app{"losim: exact linear-optical sampling toolkit"};
    app.require_subcommand(1);

    std::map<const CLI::App*, BindingMap> bindings;

    const auto bind = [&bindings](CLI::App* cmd, const std::string& key, CLI::Option* opt,
                                  std::function<void(const json&)> apply) {
        bindings[cmd][key] = Binding{opt, std::move(apply)};
    };

    const auto add_state_options = [&](CLI::App* cmd) {
        bind(cmd, "family",
             cmd->add_option("--family", family_str, "input family: fock | dspfs | spacs")
                 ->check(CLI::IsMember({"fock", "dspfs", "spacs"})),
             [&](const json& v) { family_str = v.get<std::string>(); });
        bind(cmd, "n", cmd->add_option("--n", cfg.n, "occupied input modes"),
             [&](const json& v) { cfg.n = v.get<std::int64_t>(); });
        bind(cmd, "m", cmd->add_option("--m", cfg.m, "total modes"),
             [&](const json& v) { cfg.m = v.get<std::int64_t>(); });
        bind(cmd, "alpha",
             cmd->add_option("--alpha", alpha_strs,
                             "coherent amplitude per occupied mode (repeatable); a single "
                             "value with --n replicates"),
             [&](const json& v) {
                 alpha_strs.clear();
                 if (v.is_array()) {
                     for (const auto& e : v) {
                         alpha_strs.push_back(e.is_string() ? e.get<std::string>()
                                                            : format_double(e.get<double>()));
                     }
                 } else {
                     alpha_strs.push_back(v.is_string() ? v.get<std::string>()
                                                        : format_double(v.get<double>()));
                 }
             });
    };

    const auto add_unitary_options = [&](CLI::App* cmd) {
        bind(cmd, "haar_seed",
             cmd->add_option("--haar-seed", cfg.haar_seed, "seed for a Haar-random unitary"),
             [&](const json& v) { cfg.haar_seed = v.get<std::int64_t>(); });
        bind(cmd, "unitary_file",
             cmd->add_option("--unitary-file", cfg.unitary_file, "JSON matrix file"),
             [&](const json& v) { cfg.unitary_file = v.get<std::string>(); });
    };

    const auto add_output_options = [&](CLI::App* cmd) {
        bind(cmd, "out", cmd->add_option("--out", cfg.output_path, "artifact path"),
             [&](const json& v) { cfg.output_path = v.get<std::string>(); });
        bind(cmd, "format",
             cmd->add_option("--format", cfg.format, "artifact format")
                 ->check(CLI::IsMember({"json", "csv"})),
             [&](const json& v) { cfg.format = v.get<std::string>(); });
    };

    const auto add_config_option = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON config file; flags must not repeat keys");
    };

    CLI::App* dist_cmd = app.add_subcommand("distribution", "exact output distribution");
    add_state_options(dist_cmd);
    add_unitary_options(dist_cmd);
    add_output_options(dist_cmd);
    add_config_option(dist_cmd);

    CLI::App* sample_cmd = app.add_subcommand("sample", "seeded draws from an exact distribution");
    add_state_options(sample_cmd);
    add_unitary_options(sample_cmd);
    add_output_options(sample_cmd);
    add_config_option(sample_cmd);
    bind(sample_cmd, "samples", sample_cmd->add_option("--samples", cfg.samples, "draw count"),
         [&](const json& v) { cfg.samples = v.get<std::uint64_t>(); });
    bind(sample_cmd, "seed", sample_cmd->add_option("--seed", cfg.seed, "RNG seed"),
         [&](const json& v) { cfg.seed = v.get<std::uint64_t>(); });

    CLI::App* oracle_cmd =
        app.add_subcommand("oracle-check", "closed form vs truncated-Fock brute force");
    add_state_options(oracle_cmd);
    add_unitary_options(oracle_cmd);
    add_output_options(oracle_cmd);
    add_config_option(oracle_cmd);
    bind(oracle_cmd, "cutoff",
         oracle_cmd->add_option("--cutoff", cfg.cutoff, "per-mode photon cutoff (default: auto)"),
         [&](const json& v) { cfg.cutoff = v.get<std::int64_t>(); });
    bind(oracle_cmd, "tol",
         oracle_cmd->add_option("--tol", cfg.tol, "total-variation tolerance"),
         [&](const json& v) { cfg.tol = v.get<double>(); });

    CLI::App* transition_cmd =
        app.add_subcommand("transition", "post-selection scaling sweeps");
    add_output_options(transition_cmd);
    add_config_option(transition_cmd);
    bind(transition_cmd, "rule",
         transition_cmd->add_option("--rule", cfg.rule, "|alpha|^2 rule: 1/n | 1/n^2 | n^2"),
         [&](const json& v) { cfg.rule = v.get<std::string>(); });
    bind(transition_cmd, "n_values",
         transition_cmd->add_option("--n-values", cfg.n_values, "problem sizes")
             ->delimiter(','),
         [&](const json& v) {
             cfg.n_values.clear();
             for (const auto& e : v) cfg.n_values.push_back(e.get<std::uint64_t>());
         });

    CLI::App* wigner_cmd = app.add_subcommand("wigner", "phase-space grids and slices");
    add_output_options(wigner_cmd);
    add_config_option(wigner_cmd);
    bind(wigner_cmd, "alpha",
         wigner_cmd->add_option("--alpha", wigner_alpha_str, "state coherent amplitude"),
         [&](const json& v) {
             wigner_alpha_str =
                 v.is_string() ? v.get<std::string>() : format_double(v.get<double>());
         });
    bind(wigner_cmd, "kind",
         wigner_cmd->add_option("--kind", cfg.wigner_kind, "spacs | coherent")
             ->check(CLI::IsMember({"spacs", "coherent"})),
         [&](const json& v) { cfg.wigner_kind = v.get<std::string>(); });
    bind(wigner_cmd, "window",
         wigner_cmd->add_option("--window", cfg.window, "half-width of the square grid"),
         [&](const json& v) { cfg.window = v.get<double>(); });
    CLI::Option* res_opt =
        wigner_cmd->add_option("--resolution", cfg.resolution, "points per axis");
    bind(wigner_cmd, "resolution", res_opt,
         [&](const json& v) {
             cfg.resolution = v.get<std::int64_t>();
             resolution_given = true;
         });
    bind(wigner_cmd, "slice",
         wigner_cmd->add_flag("--slice", cfg.slice, "emit a major-axis slice instead of a grid"),
         [&](const json& v) { cfg.slice = v.get<bool>(); });
    CLI::Option* xmin_opt = wigner_cmd->add_option("--xmin", cfg.x_min, "slice range start");
    CLI::Option* xmax_opt = wigner_cmd->add_option("--xmax", cfg.x_max, "slice range end");
    bind(wigner_cmd, "xmin", xmin_opt, [&](const json& v) {
        cfg.x_min = v.get<double>();
        cfg.x_range_set = true;
    });
    bind(wigner_cmd, "xmax", xmax_opt, [&](const json& v) {
        cfg.x_max = v.get<double>();
        cfg.x_range_set = true;
    });

    CLI::App* bench_cmd = app.add_subcommand("bench", "permanent kernel timing sweep");
    add_output_options(bench_cmd);
    add_config_option(bench_cmd);
    bind(bench_cmd, "sizes",
         bench_cmd->add_option("--sizes", cfg.sizes, "matrix sizes")->delimiter(','),
         [&](const json& v) {
             cfg.sizes.clear();
             for (const auto& e : v) cfg.sizes.push_back(e.get<std::int64_t>());
         });
    bind(bench_cmd, "reps", bench_cmd->add_option("--reps", cfg.reps, "repetitions per size"),
         [&](const json& v) { cfg.reps = v.get<std::int64_t>(); });
    bind(bench_cmd, "threads",
         bench_cmd->add_option("--threads", cfg.threads, "threads for the parallel timing"),
         [&](const json& v) { cfg.threads = v.get<std::int64_t>(); });
    bind(bench_cmd, "seed", bench_cmd->add_option("--seed", cfg.seed, "matrix seed"),
         [&](const json& v) { cfg.seed = v.get<std::uint64_t>(); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw validation_error(std::string("usage error: ") + e.what());
    }

    CLI::App* active = app.get_subcommands().front();
    cfg.command = active->get_name();

    // Merge the JSON config file; a key that was also given as a flag has two
    // sources, which is rejected rather than resolved.
    if (!config_path.empty()) {
        json file = json::parse(read_text_file(config_path), nullptr, false);
        if (file.is_discarded() || !file.is_object()) {
            throw validation_error("invalid-input: config file is not a JSON object");
        }
        const BindingMap& map = bindings[active];
        for (const auto& [key, value] : file.items()) {
            auto it = map.find(key);
            if (it == map.end()) {
                throw validation_error("usage error: unknown config key '" + key + "' for " +
                                       cfg.command);
            }
            if (it->second.opt->count() > 0) {
                throw validation_error("usage error: '" + key +
                                       "' set both on the command line and in the config file");
            }
            it->second.apply(value);
        }
    }
    if (res_opt->count() > 0) resolution_given = true;
    if (xmin_opt->count() > 0 || xmax_opt->count() > 0) cfg.x_range_set = true;

    // Collected validation, one pass.
    std::vector<std::string> errs;
    const bool needs_state = cfg.command == "distribution" || cfg.command == "sample" ||
                             cfg.command == "oracle-check";

    if (needs_state) {
        if (family_str.empty()) {
            errs.push_back("missing --family");
        } else {
            cfg.family = family_from_name(family_str);
        }
        const bool has_haar = cfg.haar_seed >= 0;
        const bool has_file = !cfg.unitary_file.empty();
        if (has_haar == has_file) {
            errs.push_back("exactly one of --haar-seed and --unitary-file is required");
        }
        if (has_haar && cfg.m <= 0) errs.push_back("missing --m (required with --haar-seed)");

        if (!family_str.empty()) {
            if (cfg.family == StateFamily::Fock) {
                if (cfg.n < 0) errs.push_back("missing --n");
                if (!alpha_strs.empty()) errs.push_back("--alpha is not valid for --family fock");
            } else {
                try {
                    cfg.alphas = parse_alpha_list(alpha_strs);
                } catch (const validation_error& e) {
                    errs.push_back(e.what());
                }
                if (cfg.alphas.empty()) {
                    errs.push_back("missing --alpha (required for dspfs/spacs)");
                } else if (cfg.n > 0 && cfg.alphas.size() == 1 &&
                           static_cast<std::size_t>(cfg.n) > 1) {
                    cfg.alphas.assign(static_cast<std::size_t>(cfg.n), cfg.alphas.front());
                } else if (cfg.n >= 0 &&
                           cfg.alphas.size() != static_cast<std::size_t>(cfg.n)) {
                    errs.push_back("--alpha count disagrees with --n");
                }
                if (cfg.n < 0) cfg.n = static_cast<std::int64_t>(cfg.alphas.size());
            }
            if (cfg.m > 0 && cfg.n > cfg.m) errs.push_back("--n exceeds --m");
        }
    }

    if (cfg.command == "distribution" || cfg.command == "sample" || cfg.command == "wigner" ||
        cfg.command == "transition" || cfg.command == "bench") {
        if (cfg.output_path.empty()) errs.push_back("missing --out");
    }

    if (cfg.command == "sample") {
        if (cfg.samples == 0) errs.push_back("missing --samples (must be positive)");
    }

    if (cfg.command == "oracle-check") {
        if (cfg.tol <= 0.0) errs.push_back("--tol must be positive");
    }

    if (cfg.command == "transition") {
        if (cfg.rule.empty()) {
            errs.push_back("missing --rule");
        } else {
            try {
                rule_from_name(cfg.rule);
            } catch (const validation_error& e) {
                errs.push_back(e.what());
            }
        }
        if (cfg.n_values.empty()) cfg.n_values = {10, 100, 1000, 10000};
    }

    if (cfg.command == "wigner") {
        try {
            cfg.wigner_alpha =
                wigner_alpha_str.empty() ? cplx(0.0, 0.0) : parse_complex(wigner_alpha_str);
        } catch (const validation_error& e) {
            errs.push_back(e.what());
        }
        if (cfg.slice) {
            if (!resolution_given) cfg.resolution = 401; // odd: α/2 lands on a sample
            if (cfg.wigner_alpha.imag() != 0.0 || cfg.wigner_alpha.real() < 0.0) {
                errs.push_back("--slice needs real alpha >= 0 (rotate the frame otherwise)");
            }
            if (cfg.x_range_set && !(cfg.x_max > cfg.x_min)) {
                errs.push_back("--xmax must exceed --xmin");
            }
        }
        if (cfg.resolution < 2) errs.push_back("--resolution must be at least 2");
        if (cfg.window <= 0.0) errs.push_back("--window must be positive");
    }

    if (cfg.command == "bench") {
        if (cfg.sizes.empty()) cfg.sizes = {12, 14, 16, 18, 20};
        for (std::int64_t n : cfg.sizes) {
            if (n < 1 || n > static_cast<std::int64_t>(kRyserMaxDim)) {
                errs.push_back("--sizes entries must lie in [1, " +
                               std::to_string(kRyserMaxDim) + "]");
                break;
            }
        }
        if (cfg.reps < 1) errs.push_back("--reps must be positive");
        if (cfg.threads < 1) errs.push_back("--threads must be positive");
    }

    if (!errs.empty()) {
        throw validation_error("usage error: " + join(errs, "; "));
    }
    return cfg;
}

int run(const RunConfig& cfg, std::ostream& out) {
    if (cfg.command == "distribution") return run_distribution(cfg, out);
    if (cfg.command == "sample") return run_sample(cfg, out);
    if (cfg.command == "oracle-check") return run_oracle_check(cfg, out);
    if (cfg.command == "transition") return run_transition(cfg, out);
    if (cfg.command == "wigner") return run_wigner(cfg, out);
    if (cfg.command == "bench") return run_bench(cfg, out);
    throw validation_error("usage error: unknown command '" + cfg.command + "'");
}

} // namespace losim
