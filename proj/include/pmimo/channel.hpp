#pragma once

#include <armadillo>
#include <vector>

#include "pmimo/config.hpp"
#include "pmimo/rng.hpp"

namespace pmimo {

/**
 * L-tap Rayleigh multipath MIMO impulse response.
 *
 * taps(a, t, l) is the gain from transmit chain t to receive element a on
 * tap l; taps are spaced one original sample apart. Entries are i.i.d.
 * circularly-symmetric complex Gaussian with variance 1/L (uniform power
 * delay profile, unit total power per element pair).
 */
struct ChannelRealization {
    arma::cx_cube taps; // n_rx_elements x n_tx x L

    int n_rx_elements() const { return static_cast<int>(taps.n_rows); }
    int n_tx() const { return static_cast<int>(taps.n_cols); }
    int n_paths() const { return static_cast<int>(taps.n_slices); }
};

/// Draws one block-fading realization; deterministic given the rng stream.
ChannelRealization draw_realization(RngStream rng, const ValidatedConfig& cfg);

/// Per-subcarrier frequency responses H_q = sum_l taps_l e^{-j2pi ql/n},
/// q = 0..n-1. Requires L <= n.
std::vector<arma::cx_mat> freq_response(const ChannelRealization& ch, int n);

/**
 * Time-domain application of the channel at the oversampled rate: tap l acts
 * at oversampled delay l*n0 (taps are spaced at the original rate). Linear
 * convolution with zero initial state, output truncated to the input length.
 * All transmit vectors must have equal length divisible by n0.
 */
std::vector<arma::cx_vec> apply_time_domain(const ChannelRealization& ch,
                                            const std::vector<arma::cx_vec>& tx_oversampled,
                                            int n0);

} // namespace pmimo
