#include "pmimo/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace pmimo {

ValidatedConfig validate(const SimConfig& cfg) {
    auto positive = [](int v, const char* field) {
        if (v < 1)
            throw ConfigError(ConfigFault::NonPositive, field,
                              std::string(field) + " must be >= 1, got " + std::to_string(v));
    };
    positive(cfg.n_subcarriers, "n_subcarriers");
    positive(cfg.n_tx, "n_tx");
    positive(cfg.n_rx_chains, "n_rx_chains");
    positive(cfg.n0, "n0");
    positive(cfg.n_paths, "n_paths");

    if (cfg.cp_len < 0)
        throw ConfigError(ConfigFault::NegativeCp, "cp_len", "cp_len must be >= 0");
    if (cfg.cp_len < cfg.n_paths - 1)
        throw ConfigError(ConfigFault::CpTooShort, "cp_len",
                          "cp_len = " + std::to_string(cfg.cp_len) + " < n_paths - 1 = " +
                              std::to_string(cfg.n_paths - 1) + "; inter-symbol interference");
    if (cfg.n_subcarriers < 2 * cfg.n_paths)
        throw ConfigError(ConfigFault::TooFewSubcarriers, "n_subcarriers",
                          "n_subcarriers = " + std::to_string(cfg.n_subcarriers) +
                              " < 2 * n_paths = " + std::to_string(2 * cfg.n_paths));
    if (cfg.snr_grid_db.empty())
        throw ConfigError(ConfigFault::EmptySnrGrid, "snr_grid_db", "snr_grid_db must be non-empty");
    if (cfg.n_realizations < 1)
        throw ConfigError(ConfigFault::NoRealizations, "n_realizations", "n_realizations must be >= 1");
    if (cfg.pattern_source == PatternSource::QuantizedOptimized && cfg.quant_bits < 1)
        throw ConfigError(ConfigFault::BadQuantBits, "quant_bits", "quant_bits must be >= 1");

    return ValidatedConfig(cfg);
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

int parse_int(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        int x = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError(ConfigFault::BadValue, key, "bad integer for " + key + ": '" + v + "'");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        std::uint64_t x = std::stoull(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError(ConfigFault::BadValue, key, "bad unsigned integer for " + key + ": '" + v + "'");
    }
}

std::vector<double> parse_double_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        if (tok.empty()) continue;
        try {
            size_t pos = 0;
            out.push_back(std::stod(tok, &pos));
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ConfigError(ConfigFault::BadValue, key, "bad number in " + key + ": '" + tok + "'");
        }
    }
    return out;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

} // namespace

void apply_key_value(SimConfig& cfg, const std::string& raw_key, const std::string& raw_value) {
    const std::string key = trim(raw_key);
    const std::string value = trim(raw_value);
    if (key == "n_subcarriers") cfg.n_subcarriers = parse_int(key, value);
    else if (key == "cp_len") cfg.cp_len = parse_int(key, value);
    else if (key == "n_tx") cfg.n_tx = parse_int(key, value);
    else if (key == "n_rx_chains") cfg.n_rx_chains = parse_int(key, value);
    else if (key == "n0") cfg.n0 = parse_int(key, value);
    else if (key == "n_paths") cfg.n_paths = parse_int(key, value);
    else if (key == "snr_grid_db") cfg.snr_grid_db = parse_double_list(key, value);
    else if (key == "n_realizations") cfg.n_realizations = parse_int(key, value);
    else if (key == "master_seed") cfg.master_seed = parse_u64(key, value);
    else if (key == "noise_model") {
        if (lower(value) == "white_oversampled") cfg.noise_model = NoiseModel::WhiteOversampled;
        else throw ConfigError(ConfigFault::BadValue, key, "unknown noise_model '" + value + "'");
    } else if (key == "precoding") {
        const std::string v = lower(value);
        if (v == "isotropic_equal_power" || v == "iso") cfg.precoding = Precoding::IsotropicEqualPower;
        else if (v == "svd_waterfilling" || v == "wf") cfg.precoding = Precoding::SvdWaterfilling;
        else throw ConfigError(ConfigFault::BadValue, key, "unknown precoding '" + value + "'");
    } else if (key == "pattern_source") {
        const std::string v = lower(value);
        if (v == "dft_fixed" || v == "dft") cfg.pattern_source = PatternSource::DftFixed;
        else if (v == "random_phase" || v == "random") cfg.pattern_source = PatternSource::RandomPhase;
        else if (v == "optimized" || v == "opt") cfg.pattern_source = PatternSource::Optimized;
        else if (v.rfind("quantized_optimized:", 0) == 0 || v.rfind("quant:", 0) == 0) {
            cfg.pattern_source = PatternSource::QuantizedOptimized;
            cfg.quant_bits = parse_int(key, v.substr(v.find(':') + 1));
        } else
            throw ConfigError(ConfigFault::BadValue, key, "unknown pattern_source '" + value + "'");
    } else if (key == "quant_bits") {
        cfg.quant_bits = parse_int(key, value);
    } else {
        throw ConfigError(ConfigFault::UnknownKey, key, "unknown config key '" + key + "'");
    }
}

SimConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    SimConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(ConfigFault::BadValue, "line " + std::to_string(lineno),
                              path + ":" + std::to_string(lineno) + ": expected key = value");
        apply_key_value(cfg, line.substr(0, eq), line.substr(eq + 1));
    }
    return cfg;
}

std::string to_string(Precoding p) {
    return p == Precoding::IsotropicEqualPower ? "isotropic_equal_power" : "svd_waterfilling";
}

std::string to_string(NoiseModel) { return "white_oversampled"; }

std::string to_string(PatternSource s, int quant_bits) {
    switch (s) {
    case PatternSource::DftFixed: return "dft_fixed";
    case PatternSource::RandomPhase: return "random_phase";
    case PatternSource::Optimized: return "optimized";
    case PatternSource::QuantizedOptimized: return "quantized_optimized:" + std::to_string(quant_bits);
    }
    return "?";
}

std::string to_key_values(const SimConfig& cfg) {
    std::ostringstream os;
    os << "n_subcarriers = " << cfg.n_subcarriers << "\n";
    os << "cp_len = " << cfg.cp_len << "\n";
    os << "n_tx = " << cfg.n_tx << "\n";
    os << "n_rx_chains = " << cfg.n_rx_chains << "\n";
    os << "n0 = " << cfg.n0 << "\n";
    os << "n_paths = " << cfg.n_paths << "\n";
    os << "snr_grid_db = ";
    for (size_t i = 0; i < cfg.snr_grid_db.size(); ++i) {
        if (i) os << ", ";
        os << cfg.snr_grid_db[i];
    }
    os << "\n";
    os << "n_realizations = " << cfg.n_realizations << "\n";
    os << "master_seed = " << cfg.master_seed << "\n";
    os << "noise_model = " << to_string(cfg.noise_model) << "\n";
    os << "precoding = " << to_string(cfg.precoding) << "\n";
    os << "pattern_source = " << to_string(cfg.pattern_source, cfg.quant_bits) << "\n";
    os << "quant_bits = " << cfg.quant_bits << "\n";
    return os.str();
}

std::string SchemeId::label() const {
    switch (kind) {
    case SchemeKind::Pmimo:
        return "pmimo_" + std::to_string(n_tx) + "x" + std::to_string(n_rx_chains) + "x" + std::to_string(n0);
    case SchemeKind::HybridMimo:
        return "hybrid_" + std::to_string(n_tx) + "x" + std::to_string(n_rx_chains) + "x" + std::to_string(n0);
    case SchemeKind::FdMimo:
        return "fd_" + std::to_string(n_tx) + "x" + std::to_string(n_rx_chains * n0);
    }
    return "?";
}

} // namespace pmimo
