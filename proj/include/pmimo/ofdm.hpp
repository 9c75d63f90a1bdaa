#pragma once

#include <armadillo>
#include <vector>

namespace pmimo {

// OFDM and multirate DSP primitives. All transforms are unitary (symmetric
// 1/sqrt(n) normalization) so Parseval checks and SNR bookkeeping need no
// per-call scale factors. Lengths are not restricted to powers of two.

/// Unitary forward DFT: X[q] = (1/sqrt(n)) sum_k x[k] e^{-j2pi qk/n}.
arma::cx_vec dft(const arma::cx_vec& x);

/// Unitary inverse DFT (adjoint of dft).
arma::cx_vec idft(const arma::cx_vec& X);

/// Prepends the last cp_len samples (cyclic prefix). cp_len <= x.n_elem.
arma::cx_vec add_cp(const arma::cx_vec& x, int cp_len);

/// Drops the first cp_len samples and returns the next n.
arma::cx_vec remove_cp(const arma::cx_vec& y, int cp_len, int n);

/// Signed frequency of bin q for an n-point DFT: q for q < n/2, q - n for
/// q > n/2. The Nyquist bin of an even n is split between +n/2 and -n/2 by
/// the callers that need it (see upsample_bandlimited, fractional_phase).
inline long signed_freq(int q, int n) { return (2 * q < n) ? q : q - n; }

/**
 * Ideal band-limited upsampling by integer ratio n0.
 *
 * Returns the n*n0 samples of the unique signal band-limited to the input's
 * own Nyquist band that interpolates x: forward DFT, coefficients placed at
 * their signed frequencies in a length-n*n0 spectrum (the Nyquist bin of an
 * even n split equally between +n/2 and -n/2), inverse DFT. Original sample
 * positions are reproduced exactly; output indices j = k*n0 equal x[k].
 */
arma::cx_vec upsample_bandlimited(const arma::cx_vec& x, int n0);

/// Splits y into n0 streams; stream m keeps samples with index = m (mod n0),
/// order preserved. y.n_elem must be divisible by n0.
std::vector<arma::cx_vec> polyphase_split(const arma::cx_vec& y, int n0);

/// Inverse of polyphase_split: streams[m][k] -> y[k*n0 + m].
arma::cx_vec interleave(const std::vector<arma::cx_vec>& streams);

} // namespace pmimo
