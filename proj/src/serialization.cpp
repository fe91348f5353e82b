#include "losim/serialization.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace losim {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw validation_error(std::string("invalid-input: malformed JSON in ") + what);
    }
    return j;
}

void append_config(std::string& out, const OccupationConfig& config) {
    out += '[';
    for (std::size_t i = 0; i < config.modes(); ++i) {
        if (i) out += ',';
        out += std::to_string(config[i]);
    }
    out += ']';
}

void append_entries(std::string& out, const OutputDistribution& dist) {
    out += "[";
    bool first = true;
    for (const DistributionEntry& e : dist.entries()) {
        if (!first) out += ',';
        first = false;
        out += "{\"config\":";
        append_config(out, e.config);
        out += ",\"prob\":" + format_double(e.probability);
        if (e.has_amplitude) {
            out += ",\"amp_re\":" + format_double(e.amplitude.real());
            out += ",\"amp_im\":" + format_double(e.amplitude.imag());
        }
        out += '}';
    }
    out += ']';
}

OccupationConfig config_from_json(const json& j) {
    std::vector<int> occ;
    occ.reserve(j.size());
    for (const auto& v : j) occ.push_back(v.get<int>());
    return OccupationConfig(std::move(occ));
}

OutputDistribution entries_from_json(const json& j, std::size_t m) {
    OutputDistribution dist(m);
    for (const auto& e : j) {
        OccupationConfig config = config_from_json(e.at("config"));
        const double prob = e.at("prob").get<double>();
        if (e.contains("amp_re")) {
            dist.add(std::move(config),
                     cplx(e.at("amp_re").get<double>(), e.at("amp_im").get<double>()), prob);
        } else {
            dist.add(std::move(config), prob);
        }
    }
    dist.finalize();
    return dist;
}

// -1 when the support mixes photon totals.
int homogeneous_total(const OutputDistribution& dist) {
    int total = -1;
    for (const DistributionEntry& e : dist.entries()) {
        const int t = e.config.total();
        if (total == -1) total = t;
        else if (t != total) return -1;
    }
    return total;
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string matrix_to_json(const UnitaryMatrix& u) {
    std::string out = "{\"dim\":" + std::to_string(u.dim()) + ",\"entries\":[";
    for (std::size_t i = 0; i < u.dim(); ++i) {
        for (std::size_t j = 0; j < u.dim(); ++j) {
            if (i || j) out += ',';
            const cplx z = u(i, j);
            out += '[' + format_double(z.real()) + ',' + format_double(z.imag()) + ']';
        }
    }
    out += "]}\n";
    return out;
}

UnitaryMatrix matrix_from_json(const std::string& text) {
    const json j = parse_json(text, "matrix");
    const std::size_t dim = j.at("dim").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (entries.size() != dim * dim) {
        throw validation_error("invalid-input: matrix entry count does not match dim^2");
    }
    std::vector<cplx> data;
    data.reserve(entries.size());
    for (const auto& e : entries) {
        data.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
    }
    return UnitaryMatrix(ComplexMatrix(dim, dim, std::move(data)));
}

std::string distribution_to_json(const OutputDistribution& dist) {
    std::string out = "{\"m\":" + std::to_string(dist.modes());
    const int n = homogeneous_total(dist);
    if (n >= 0) out += ",\"n\":" + std::to_string(n);
    out += ",\"entries\":";
    append_entries(out, dist);
    out += "}\n";
    return out;
}

OutputDistribution distribution_from_json(const std::string& text) {
    const json j = parse_json(text, "distribution");
    return entries_from_json(j.at("entries"), j.at("m").get<std::size_t>());
}

std::string distribution_to_csv(const OutputDistribution& dist) {
    std::string out;
    for (std::size_t i = 0; i < dist.modes(); ++i) out += "s" + std::to_string(i) + ",";
    out += "prob,amp_re,amp_im\n";
    for (const DistributionEntry& e : dist.entries()) {
        for (std::size_t i = 0; i < dist.modes(); ++i) out += std::to_string(e.config[i]) + ",";
        out += format_double(e.probability);
        if (e.has_amplitude) {
            out += ',' + format_double(e.amplitude.real()) + ',' +
                   format_double(e.amplitude.imag());
        } else {
            out += ",,";
        }
        out += '\n';
    }
    return out;
}

std::string sectors_to_json(const SectorDecomposition& dec) {
    std::string out = "{\"m\":" + std::to_string(dec.m) + ",\"n\":" + std::to_string(dec.n) +
                      ",\"cross_checked\":" + (dec.weights_cross_checked ? "true" : "false") +
                      ",\"sectors\":[";
    for (std::size_t i = 0; i <= dec.n; ++i) {
        if (i) out += ',';
        out += "{\"i\":" + std::to_string(i) +
               ",\"weight\":" + format_double(dec.sector_weights[i]) + ",\"entries\":";
        append_entries(out, dec.sector_distributions[i]);
        out += '}';
    }
    out += "]}\n";
    return out;
}

SectorDecomposition sectors_from_json(const std::string& text) {
    const json j = parse_json(text, "sector decomposition");
    SectorDecomposition dec;
    dec.m = j.at("m").get<std::size_t>();
    dec.n = j.at("n").get<std::size_t>();
    dec.weights_cross_checked = j.at("cross_checked").get<bool>();
    dec.sector_weights.assign(dec.n + 1, 0.0);
    dec.sector_distributions.assign(dec.n + 1, OutputDistribution(dec.m));
    for (const auto& s : j.at("sectors")) {
        const std::size_t i = s.at("i").get<std::size_t>();
        if (i > dec.n) throw validation_error("invalid-input: sector index exceeds n");
        dec.sector_weights[i] = s.at("weight").get<double>();
        dec.sector_distributions[i] = entries_from_json(s.at("entries"), dec.m);
    }
    return dec;
}

std::string sectors_to_csv(const SectorDecomposition& dec) {
    std::string out = "sector,weight,";
    for (std::size_t i = 0; i < dec.m; ++i) out += "s" + std::to_string(i) + ",";
    out += "prob,amp_re,amp_im\n";
    for (std::size_t i = 0; i <= dec.n; ++i) {
        for (const DistributionEntry& e : dec.sector_distributions[i].entries()) {
            out += std::to_string(i) + ',' + format_double(dec.sector_weights[i]) + ',';
            for (std::size_t k = 0; k < dec.m; ++k) out += std::to_string(e.config[k]) + ",";
            out += format_double(e.probability);
            if (e.has_amplitude) {
                out += ',' + format_double(e.amplitude.real()) + ',' +
                       format_double(e.amplitude.imag());
            } else {
                out += ",,";
            }
            out += '\n';
        }
    }
    return out;
}

std::string batch_to_json(const SampleBatch& batch, std::size_t m) {
    std::string out = "{\"seed\":" + std::to_string(batch.seed) + ",\"source\":\"" +
                      batch.source + "\",\"m\":" + std::to_string(m) + ",\"draws\":[";
    for (std::size_t i = 0; i < batch.draws.size(); ++i) {
        if (i) out += ',';
        append_config(out, batch.draws[i]);
    }
    out += "]}\n";
    return out;
}

SampleBatch batch_from_json(const std::string& text) {
    const json j = parse_json(text, "sample batch");
    SampleBatch batch;
    batch.seed = j.at("seed").get<std::uint64_t>();
    batch.source = j.at("source").get<std::string>();
    for (const auto& d : j.at("draws")) batch.draws.push_back(config_from_json(d));
    return batch;
}

std::string batch_to_csv(const SampleBatch& batch, std::size_t m) {
    std::string out;
    for (std::size_t i = 0; i < m; ++i) {
        if (i) out += ',';
        out += "s" + std::to_string(i);
    }
    out += '\n';
    for (const OccupationConfig& c : batch.draws) {
        for (std::size_t i = 0; i < m; ++i) {
            if (i) out += ',';
            out += std::to_string(c[i]);
        }
        out += '\n';
    }
    return out;
}

std::string grid_to_csv(const WignerGrid& grid) {
    std::string out = "x,y,w\n";
    for (std::size_t iy = 0; iy < grid.resolution; ++iy) {
        for (std::size_t ix = 0; ix < grid.resolution; ++ix) {
            out += format_double(grid.x_at(ix)) + ',' + format_double(grid.y_at(iy)) + ',' +
                   format_double(grid.values[iy * grid.resolution + ix]) + '\n';
        }
    }
    return out;
}

std::string grid_to_json(const WignerGrid& grid) {
    std::string out = "{\"alpha_re\":" + format_double(grid.alpha.real()) +
                      ",\"alpha_im\":" + format_double(grid.alpha.imag()) + ",\"kind\":\"" +
                      (grid.kind == WignerKind::Spacs ? "spacs" : "coherent") + "\"" +
                      ",\"x_min\":" + format_double(grid.x_min) +
                      ",\"x_max\":" + format_double(grid.x_max) +
                      ",\"y_min\":" + format_double(grid.y_min) +
                      ",\"y_max\":" + format_double(grid.y_max) +
                      ",\"resolution\":" + std::to_string(grid.resolution) + ",\"values\":[";
    for (std::size_t i = 0; i < grid.values.size(); ++i) {
        if (i) out += ',';
        out += format_double(grid.values[i]);
    }
    out += "]}\n";
    return out;
}

std::string slice_to_csv(const std::vector<std::pair<double, double>>& slice) {
    std::string out = "x,w\n";
    for (const auto& [x, w] : slice) {
        out += format_double(x) + ',' + format_double(w) + '\n';
    }
    return out;
}

std::string sweep_to_csv(const std::vector<RegimeReport>& reports) {
    std::string out = "n,alpha_sq,p_n,p_0,regime\n";
    for (const RegimeReport& r : reports) {
        out += std::to_string(r.n) + ',' + format_double(r.alpha_sq) + ',' +
               format_double(r.p_n) + ',' + format_double(r.p_0) + ',' + regime_name(r.regime) +
               '\n';
    }
    return out;
}

std::string state_to_json(const TruncatedState& state) {
    std::string out = "{\"m\":" + std::to_string(state.m) +
                      ",\"cutoff\":" + std::to_string(state.cutoff) +
                      ",\"leakage\":" + format_double(state.leakage) + ",\"entries\":[";
    bool first = true;
    for (std::size_t idx = 0; idx < state.amplitudes.size(); ++idx) {
        const cplx a = state.amplitudes[idx];
        if (a == cplx(0.0, 0.0)) continue;
        if (!first) out += ',';
        first = false;
        out += "{\"config\":";
        append_config(out, state.config_of(idx));
        out += ",\"amp_re\":" + format_double(a.real()) +
               ",\"amp_im\":" + format_double(a.imag()) + '}';
    }
    out += "]}\n";
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("invalid-input: cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw validation_error("invalid-input: cannot write file '" + path + "'");
    out << content;
    if (!out) throw validation_error("invalid-input: write failed for '" + path + "'");
}

} // namespace losim
