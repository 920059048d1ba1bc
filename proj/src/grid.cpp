#include "galinv/simulator.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <numbers>

namespace galinv::sim {

Grid::Grid(int n, double spacing) : N(n), h(spacing) {
    if (n < 8 || (n & (n - 1)) != 0) throw std::invalid_argument("grid N must be a power of two >= 8");
    if (!(spacing > 0)) throw std::invalid_argument("grid spacing must be positive");
}

Scalar zeros(const Grid& g) { return Scalar(g.size(), 0.0); }

Vector zero_vector(const Grid& g) { return {zeros(g), zeros(g), zeros(g)}; }

double max_abs(const Scalar& f) {
    double m = 0;
    for (double x : f) m = std::max(m, std::abs(x));
    return m;
}

double max_abs(const Vector& f) { return std::max({max_abs(f[0]), max_abs(f[1]), max_abs(f[2])}); }

double mean(const Scalar& f) {
    double s = 0;
    for (double x : f) s += x;
    return f.empty() ? 0 : s / static_cast<double>(f.size());
}

double integrate(const Grid& g, const Scalar& f) { return mean(f) * std::pow(g.L(), 3); }

Scalar shift(const Grid& g, const Scalar& f, const std::array<int, 3>& s) {
    Scalar out(g.size());
    const int N = g.N;
    auto wrap = [N](int i) { return ((i % N) + N) % N; };
    for (int k = 0; k < N; ++k)
        for (int j = 0; j < N; ++j)
            for (int i = 0; i < N; ++i)
                out[g.index(i, j, k)] = f[g.index(wrap(i + s[0]), wrap(j + s[1]), wrap(k + s[2]))];
    return out;
}

// ---------------------------------------------------------------------------

struct Spectral::Fft {
    Eigen::FFT<double> fft;
};

Spectral::Spectral(const Grid& g) : g_(g), fft_(std::make_shared<Fft>()) {
    const int N = g.N;
    const double dk = 2 * std::numbers::pi / g.L();
    k_.resize(N);
    for (int i = 0; i < N; ++i) {
        int m = i <= N / 2 ? i : i - N;
        k_[i] = m == N / 2 ? 0.0 : m * dk;
    }
    ksq_.resize(N);
    for (int i = 0; i < N; ++i) ksq_[i] = k_[i] * k_[i];
}

void Spectral::transform(Spectrum& s, bool inv) const {
    const size_t N = g_.N;
    std::vector<std::complex<double>> in(N), out(N);
    const size_t stride[3] = {1, N, N * N};
    for (int axis = 0; axis < 3; ++axis) {
        const size_t st = stride[axis], o1 = stride[(axis + 1) % 3], o2 = stride[(axis + 2) % 3];
        for (size_t a = 0; a < N; ++a)
            for (size_t b = 0; b < N; ++b) {
                std::complex<double>* line = s.data() + a * o1 + b * o2;
                for (size_t m = 0; m < N; ++m) in[m] = line[m * st];
                if (inv)
                    fft_->fft.inv(out.data(), in.data(), static_cast<int>(N));
                else
                    fft_->fft.fwd(out.data(), in.data(), static_cast<int>(N));
                for (size_t m = 0; m < N; ++m) line[m * st] = out[m];
            }
    }
}

Spectral::Spectrum Spectral::forward(const Scalar& f) const {
    Spectrum s(f.begin(), f.end());
    transform(s, false);
    return s;
}

Scalar Spectral::inverse(Spectrum s) const {
    transform(s, true);
    Scalar f(s.size());
    for (size_t i = 0; i < s.size(); ++i) f[i] = s[i].real();
    return f;
}

Spectral::Spectrum Spectral::times_ik(const Spectrum& s, int axis) const {
    Spectrum out(s.size());
    const int N = g_.N;
    for (int k = 0; k < N; ++k)
        for (int j = 0; j < N; ++j)
            for (int i = 0; i < N; ++i) {
                size_t n = g_.index(i, j, k);
                out[n] = s[n] * std::complex<double>(0, k_[axis == 0 ? i : axis == 1 ? j : k]);
            }
    return out;
}

Spectral::Spectrum Spectral::inverse_laplacian(Spectrum s) const {
    const int N = g_.N;
    for (int k = 0; k < N; ++k)
        for (int j = 0; j < N; ++j)
            for (int i = 0; i < N; ++i) {
                double q = ksq_[i] + ksq_[j] + ksq_[k];
                auto& c = s[g_.index(i, j, k)];
                c = q == 0 ? 0.0 : c / -q;
            }
    return s;
}

Scalar Spectral::partial(const Scalar& f, int axis) const { return inverse(times_ik(forward(f), axis)); }

Vector Spectral::grad(const Scalar& f) const {
    Spectrum s = forward(f);
    return {inverse(times_ik(s, 0)), inverse(times_ik(s, 1)), inverse(times_ik(s, 2))};
}

Spectral::Spectrum Spectral::div_spectrum(const Vector& F) const {
    Spectrum out = times_ik(forward(F[0]), 0);
    for (int a = 1; a < 3; ++a) {
        Spectrum d = times_ik(forward(F[a]), a);
        for (size_t i = 0; i < out.size(); ++i) out[i] += d[i];
    }
    return out;
}

Scalar Spectral::div(const Vector& F) const { return inverse(div_spectrum(F)); }

Vector Spectral::curl(const Vector& F) const {
    std::array<Spectrum, 3> s{forward(F[0]), forward(F[1]), forward(F[2])};
    Vector out;
    for (int a = 0; a < 3; ++a) {
        int b = (a + 1) % 3, c = (a + 2) % 3;
        Spectrum p = times_ik(s[c], b), q = times_ik(s[b], c);
        for (size_t i = 0; i < p.size(); ++i) p[i] -= q[i];
        out[a] = inverse(std::move(p));
    }
    return out;
}

Scalar Spectral::laplacian(const Scalar& f) const {
    Spectrum s = forward(f);
    const int N = g_.N;
    for (int k = 0; k < N; ++k)
        for (int j = 0; j < N; ++j)
            for (int i = 0; i < N; ++i) s[g_.index(i, j, k)] *= -(ksq_[i] + ksq_[j] + ksq_[k]);
    return inverse(std::move(s));
}

Scalar Spectral::poisson(const Scalar& rhs) const {
    double m = mean(rhs), norm = max_abs(rhs);
    if (std::abs(m) > 1e-12 * std::max(norm, 1e-300) && norm > 0)
        throw NonZeroMean("Poisson right-hand side has mean " + std::to_string(m) + "; no periodic solution");
    return inverse(inverse_laplacian(forward(rhs)));
}

std::pair<Vector, Vector> Spectral::helmholtz(const Vector& F) const {
    // longitudinal part grad lap^-1 div F
    Spectrum phi = inverse_laplacian(div_spectrum(F));
    Vector L{inverse(times_ik(phi, 0)), inverse(times_ik(phi, 1)), inverse(times_ik(phi, 2))};
    Vector T;
    for (int a = 0; a < 3; ++a) {
        T[a] = F[a];
        double m = mean(F[a]);
        for (size_t i = 0; i < T[a].size(); ++i) T[a][i] -= L[a][i] + m;
    }
    return {T, L};
}

Scalar poisson_solve(const Scalar& rhs, const Grid& g) { return Spectral(g).poisson(rhs); }

// ---------------------------------------------------------------------------

Scalar cd_partial(const Grid& g, const Scalar& f, int axis) {
    std::array<int, 3> p{0, 0, 0}, m{0, 0, 0};
    p[axis] = 1;
    m[axis] = -1;
    Scalar a = shift(g, f, p), b = shift(g, f, m);
    for (size_t i = 0; i < a.size(); ++i) a[i] = (a[i] - b[i]) / (2 * g.h);
    return a;
}

Vector cd_grad(const Grid& g, const Scalar& f) { return {cd_partial(g, f, 0), cd_partial(g, f, 1), cd_partial(g, f, 2)}; }

Scalar cd_div(const Grid& g, const Vector& F) {
    Scalar out = cd_partial(g, F[0], 0);
    for (int a = 1; a < 3; ++a) {
        Scalar d = cd_partial(g, F[a], a);
        for (size_t i = 0; i < out.size(); ++i) out[i] += d[i];
    }
    return out;
}

Vector cd_curl(const Grid& g, const Vector& F) {
    Vector out;
    for (int a = 0; a < 3; ++a) {
        int b = (a + 1) % 3, c = (a + 2) % 3;
        Scalar p = cd_partial(g, F[c], b), q = cd_partial(g, F[b], c);
        for (size_t i = 0; i < p.size(); ++i) p[i] -= q[i];
        out[a] = std::move(p);
    }
    return out;
}

}  // namespace galinv::sim
