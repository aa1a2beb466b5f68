#pragma once

// Test-only reference computations. None of these call into the code paths they
// are used to check (partial_trace, hermitian_eigen, chsh_max, the loss models).

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "qloss/matrix.hpp"

namespace qloss::testing {

using cplx = std::complex<double>;

// Partial trace by enumerating every full multi-index pair explicitly.
inline ComplexMatrix brute_partial_trace(const ComplexMatrix& rho, const std::vector<std::size_t>& dims,
                                         const std::vector<bool>& keep) {
    const std::size_t n = dims.size();
    std::size_t total = 1;
    for (auto d : dims) total *= d;
    std::size_t kept_dim = 1;
    for (std::size_t f = 0; f < n; ++f)
        if (keep[f]) kept_dim *= dims[f];

    auto digits = [&](std::size_t idx) {
        std::vector<std::size_t> d(n);
        for (std::size_t f = n; f-- > 0;) {
            d[f] = idx % dims[f];
            idx /= dims[f];
        }
        return d;
    };
    auto kept_index = [&](const std::vector<std::size_t>& d) {
        std::size_t k = 0;
        for (std::size_t f = 0; f < n; ++f)
            if (keep[f]) k = k * dims[f] + d[f];
        return k;
    };

    ComplexMatrix out(kept_dim, kept_dim);
    for (std::size_t i = 0; i < total; ++i) {
        const auto di = digits(i);
        for (std::size_t j = 0; j < total; ++j) {
            const auto dj = digits(j);
            bool traced_equal = true;
            for (std::size_t f = 0; f < n && traced_equal; ++f)
                if (!keep[f] && di[f] != dj[f]) traced_equal = false;
            if (traced_equal) out(kept_index(di), kept_index(dj)) += rho(i, j);
        }
    }
    return out;
}

// Maximal CHSH value by direct search over measurement directions. For settings
// b, b' the optimal a, a' give S = |T(b + b')| + |T(b - b')|; b, b' are searched on
// a spherical grid and refined by coordinate descent.
inline double brute_chsh(const std::array<std::array<double, 3>, 3>& t) {
    auto dir = [](double th, double ph) {
        return std::array<double, 3>{std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph),
                                     std::cos(th)};
    };
    auto norm_t = [&](const std::array<double, 3>& v) {
        double s = 0.0;
        for (int i = 0; i < 3; ++i) {
            double r = 0.0;
            for (int j = 0; j < 3; ++j) r += t[i][j] * v[j];
            s += r * r;
        }
        return std::sqrt(s);
    };
    auto value = [&](const std::array<double, 4>& x) {
        const auto b = dir(x[0], x[1]);
        const auto bp = dir(x[2], x[3]);
        std::array<double, 3> sum{}, diff{};
        for (int k = 0; k < 3; ++k) {
            sum[k] = b[k] + bp[k];
            diff[k] = b[k] - bp[k];
        }
        return norm_t(sum) + norm_t(diff);
    };

    constexpr int kGrid = 10;
    const double pi = std::numbers::pi;
    std::array<double, 4> best{};
    double best_val = -1.0;
    for (int a = 0; a <= kGrid; ++a)
        for (int b = 0; b < 2 * kGrid; ++b)
            for (int c = 0; c <= kGrid; ++c)
                for (int d = 0; d < 2 * kGrid; ++d) {
                    std::array<double, 4> x{pi * a / kGrid, pi * b / kGrid, pi * c / kGrid,
                                            pi * d / kGrid};
                    const double v = value(x);
                    if (v > best_val) {
                        best_val = v;
                        best = x;
                    }
                }
    for (double h = pi / kGrid; h > 1e-10; h *= 0.5) {
        bool improved = true;
        while (improved) {
            improved = false;
            for (int k = 0; k < 4; ++k)
                for (double sgn : {-1.0, 1.0}) {
                    auto x = best;
                    x[k] += sgn * h;
                    const double v = value(x);
                    if (v > best_val) {
                        best_val = v;
                        best = x;
                        improved = true;
                    }
                }
        }
    }
    return best_val;
}

// Independent Bernoulli photon-survival trials.
struct MonteCarloCounts {
    std::array<std::uint64_t, 4> counts{};  // index 2 * nA + nB
    std::uint64_t trials = 0;

    double frequency(int na, int nb) const {
        return static_cast<double>(counts[2 * na + nb]) / static_cast<double>(trials);
    }
    // Standard error of the frequency estimate for true probability p.
    double standard_error(double p) const {
        return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    }
};

inline MonteCarloCounts simulate_two_arm(double t_a, double t_b, std::uint64_t trials,
                                         std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution arm_a(t_a), arm_b(t_b);
    MonteCarloCounts mc;
    mc.trials = trials;
    for (std::uint64_t k = 0; k < trials; ++k) {
        const int na = arm_a(rng) ? 1 : 0;
        const int nb = arm_b(rng) ? 1 : 0;
        ++mc.counts[2 * na + nb];
    }
    return mc;
}

// Histogram of surviving photons when n photons each survive with probability q.
inline std::vector<double> simulate_photon_survival(int n, double q, std::uint64_t trials,
                                                    std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution survive(q);
    std::vector<std::uint64_t> counts(n + 1, 0);
    for (std::uint64_t k = 0; k < trials; ++k) {
        int alive = 0;
        for (int p = 0; p < n; ++p) alive += survive(rng) ? 1 : 0;
        ++counts[alive];
    }
    std::vector<double> freq(n + 1);
    for (int j = 0; j <= n; ++j) freq[j] = static_cast<double>(counts[j]) / trials;
    return freq;
}

// Random draws for property tests.
class Random {
public:
    explicit Random(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo = 0.0, double hi = 1.0) {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }
    cplx gaussian_complex() {
        std::normal_distribution<double> g;
        return {g(rng_), g(rng_)};
    }
    ComplexMatrix ginibre(std::size_t rows, std::size_t cols) {
        ComplexMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = gaussian_complex();
        return m;
    }
    ComplexMatrix hermitian(std::size_t n) {
        ComplexMatrix g = ginibre(n, n);
        return 0.5 * (g + g.adjoint());
    }
    // G G^dagger / Tr(G G^dagger): full-rank random density matrix.
    ComplexMatrix density(std::size_t n) {
        ComplexMatrix g = ginibre(n, n);
        ComplexMatrix rho = g * g.adjoint();
        return rho * cplx(1.0 / rho.trace().real());
    }
    // Haar-ish unitary via Gram-Schmidt on a Ginibre matrix.
    ComplexMatrix unitary(std::size_t n) {
        ComplexMatrix g = ginibre(n, n);
        for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t prev = 0; prev < c; ++prev) {
                cplx dot = 0.0;
                for (std::size_t r = 0; r < n; ++r) dot += std::conj(g(r, prev)) * g(r, c);
                for (std::size_t r = 0; r < n; ++r) g(r, c) -= dot * g(r, prev);
            }
            double nrm = 0.0;
            for (std::size_t r = 0; r < n; ++r) nrm += std::norm(g(r, c));
            nrm = std::sqrt(nrm);
            for (std::size_t r = 0; r < n; ++r) g(r, c) /= nrm;
        }
        return g;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace qloss::testing
