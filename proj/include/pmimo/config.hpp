#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pmimo {

enum class NoiseModel { WhiteOversampled };
enum class Precoding { IsotropicEqualPower, SvdWaterfilling };
enum class PatternSource { DftFixed, RandomPhase, Optimized, QuantizedOptimized };

/**
 * Experiment configuration: every system dimension, the SNR grid, model
 * switches and the master seed. A SimConfig is plain data; validate() turns
 * it into a ValidatedConfig that the rest of the library consumes.
 *
 * Conventions fixed here and used everywhere:
 *  - all timing in units of the original sampling period (T_s = 1);
 *  - transmit SNR rho = total transmit power over all n_tx chains divided by
 *    the per-element noise variance, with the noise variance fixed to 1.
 */
struct SimConfig {
    int n_subcarriers = 63; ///< OFDM symbol length n
    int cp_len = 16;        ///< cyclic prefix length, original-rate samples
    int n_tx = 4;           ///< transmit RF chains, one antenna each
    int n_rx_chains = 1;    ///< receive RF chains
    int n0 = 2;             ///< antenna elements per receive chain = patterns per T_s = upsampling ratio
    int n_paths = 15;       ///< channel taps L
    std::vector<double> snr_grid_db = {0, 5, 10, 15, 20, 25, 30};
    int n_realizations = 500;
    std::uint64_t master_seed = 1;
    NoiseModel noise_model = NoiseModel::WhiteOversampled;
    Precoding precoding = Precoding::SvdWaterfilling;
    PatternSource pattern_source = PatternSource::DftFixed;
    int quant_bits = 2; ///< phase bits, used when pattern_source = QuantizedOptimized
};

enum class ConfigFault {
    NonPositive,       // a dimension that must be >= 1 is not
    NegativeCp,        // cp_len < 0
    CpTooShort,        // cp_len < n_paths - 1
    TooFewSubcarriers, // n_subcarriers < 2 * n_paths
    EmptySnrGrid,
    NoRealizations,
    BadQuantBits,
    UnknownKey, // config file key not in the schema
    BadValue,   // config file value failed to parse
};

class ConfigError : public std::runtime_error {
  public:
    ConfigError(ConfigFault fault, std::string field, const std::string& what)
        : std::runtime_error(what), fault_(fault), field_(std::move(field)) {}
    ConfigFault fault() const { return fault_; }
    const std::string& field() const { return field_; }

  private:
    ConfigFault fault_;
    std::string field_;
};

/// A SimConfig that passed validation, with derived bookkeeping cached.
/// Immutable; safe to share across worker threads.
class ValidatedConfig {
  public:
    const SimConfig& raw() const { return cfg_; }

    int n_subcarriers() const { return cfg_.n_subcarriers; }
    int cp_len() const { return cfg_.cp_len; }
    int n_tx() const { return cfg_.n_tx; }
    int n_rx_chains() const { return cfg_.n_rx_chains; }
    int n0() const { return cfg_.n0; }
    int n_paths() const { return cfg_.n_paths; }

    int n_rx_elements() const { return n_rx_elements_; }   ///< N_r^A = n_rx_chains * n0
    int oversampled_len() const { return oversampled_len_; } ///< n * n0
    int n_virtual_streams() const { return n_rx_elements_; } ///< receive rows of the pMIMO effective channel
    int n_streams_pmimo() const { return std::min(cfg_.n_tx, n_rx_elements_); }
    int n_streams_hybrid() const { return std::min(cfg_.n_tx, cfg_.n_rx_chains); }

    friend ValidatedConfig validate(const SimConfig& cfg);

  private:
    explicit ValidatedConfig(const SimConfig& cfg)
        : cfg_(cfg), n_rx_elements_(cfg.n_rx_chains * cfg.n0),
          oversampled_len_(cfg.n_subcarriers * cfg.n0) {}

    SimConfig cfg_;
    int n_rx_elements_;
    int oversampled_len_;
};

/// Checks every invariant; throws ConfigError naming the offending field.
ValidatedConfig validate(const SimConfig& cfg);

/// Flat `key = value` config file; keys are exactly the SimConfig field
/// names, unknown keys are an error. '#' starts a comment.
SimConfig parse_config_file(const std::string& path);

/// Applies one key/value pair (shared by the file parser and CLI overrides).
void apply_key_value(SimConfig& cfg, const std::string& key, const std::string& value);

/// Resolved key = value dump, one per line, in schema order (for .meta files).
std::string to_key_values(const SimConfig& cfg);

std::string to_string(Precoding p);
std::string to_string(NoiseModel m);
std::string to_string(PatternSource s, int quant_bits);

// ---------------------------------------------------------------------------

enum class SchemeKind { Pmimo, FdMimo, HybridMimo };

/// Scheme identity plus the dimension triple it was run with; FD carries
/// n0 = 1 semantics (every element has its own chain).
struct SchemeId {
    SchemeKind kind;
    int n_tx;
    int n_rx_chains;
    int n0;

    /// "pmimo_4x1x2", "hybrid_8x4x2", "fd_4x2"
    std::string label() const;
};

} // namespace pmimo
