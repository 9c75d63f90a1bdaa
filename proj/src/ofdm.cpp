#include "pmimo/ofdm.hpp"

#include <stdexcept>

namespace pmimo {

arma::cx_vec dft(const arma::cx_vec& x) {
    if (x.n_elem == 0) throw std::invalid_argument("dft: empty input");
    return arma::fft(x) / std::sqrt(static_cast<double>(x.n_elem));
}

arma::cx_vec idft(const arma::cx_vec& X) {
    if (X.n_elem == 0) throw std::invalid_argument("idft: empty input");
    return arma::ifft(X) * std::sqrt(static_cast<double>(X.n_elem));
}

arma::cx_vec add_cp(const arma::cx_vec& x, int cp_len) {
    const int n = static_cast<int>(x.n_elem);
    if (cp_len < 0 || cp_len > n) throw std::invalid_argument("add_cp: cp_len out of range");
    if (cp_len == 0) return x;
    arma::cx_vec y(n + cp_len);
    y.head(cp_len) = x.tail(cp_len);
    y.tail(n) = x;
    return y;
}

arma::cx_vec remove_cp(const arma::cx_vec& y, int cp_len, int n) {
    if (cp_len < 0 || n < 0 || static_cast<arma::uword>(cp_len + n) > y.n_elem)
        throw std::invalid_argument("remove_cp: cp_len + n exceeds input length");
    return y.subvec(cp_len, cp_len + n - 1);
}

arma::cx_vec upsample_bandlimited(const arma::cx_vec& x, int n0) {
    const int n = static_cast<int>(x.n_elem);
    if (n0 < 1) throw std::invalid_argument("upsample_bandlimited: n0 must be >= 1");
    if (n < 2) throw std::invalid_argument("upsample_bandlimited: input length must be >= 2");
    if (n0 == 1) return x;

    const int big_n = n * n0;
    const arma::cx_vec X = dft(x);
    arma::cx_vec S(big_n, arma::fill::zeros);
    for (int q = 0; q < n; ++q) {
        if (n % 2 == 0 && q == n / 2) {
            // Nyquist bin: split equally between +n/2 and -n/2
            S(n / 2) += 0.5 * X(q);
            S(big_n - n / 2) += 0.5 * X(q);
        } else {
            const long f = signed_freq(q, n);
            S(static_cast<arma::uword>((f + big_n) % big_n)) = X(q);
        }
    }
    // sqrt(n0) restores unit gain at the original sample positions under the
    // unitary transform pair (amplitude scale n0 in non-unitary terms).
    return idft(S) * std::sqrt(static_cast<double>(n0));
}

std::vector<arma::cx_vec> polyphase_split(const arma::cx_vec& y, int n0) {
    if (n0 < 1) throw std::invalid_argument("polyphase_split: n0 must be >= 1");
    if (y.n_elem % n0 != 0) throw std::invalid_argument("polyphase_split: length not divisible by n0");
    const arma::uword per = y.n_elem / n0;
    std::vector<arma::cx_vec> out(n0);
    for (int m = 0; m < n0; ++m) {
        out[m].set_size(per);
        for (arma::uword k = 0; k < per; ++k) out[m](k) = y(k * n0 + m);
    }
    return out;
}

arma::cx_vec interleave(const std::vector<arma::cx_vec>& streams) {
    if (streams.empty()) throw std::invalid_argument("interleave: no streams");
    const arma::uword per = streams[0].n_elem;
    const int n0 = static_cast<int>(streams.size());
    for (const auto& s : streams)
        if (s.n_elem != per) throw std::invalid_argument("interleave: stream length mismatch");
    arma::cx_vec y(per * n0);
    for (int m = 0; m < n0; ++m)
        for (arma::uword k = 0; k < per; ++k) y(k * n0 + m) = streams[m](k);
    return y;
}

} // namespace pmimo
