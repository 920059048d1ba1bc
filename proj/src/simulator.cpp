#include "galinv/simulator.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

namespace galinv::sim {

namespace {

Scalar& axpy(Scalar& y, double a, const Scalar& x) {
    for (size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
    return y;
}

Scalar scaled(const Scalar& x, double a) {
    Scalar y(x.size());
    for (size_t i = 0; i < x.size(); ++i) y[i] = a * x[i];
    return y;
}

Scalar diff(const Scalar& a, const Scalar& b, double scale) {
    Scalar y(a.size());
    for (size_t i = 0; i < a.size(); ++i) y[i] = (a[i] - b[i]) * scale;
    return y;
}

Vector diff(const Vector& a, const Vector& b, double scale) {
    return {diff(a[0], b[0], scale), diff(a[1], b[1], scale), diff(a[2], b[2], scale)};
}

Scalar dot(const Vector& a, const Vector& b) {
    Scalar y(a[0].size(), 0.0);
    for (int c = 0; c < 3; ++c)
        for (size_t i = 0; i < y.size(); ++i) y[i] += a[c][i] * b[c][i];
    return y;
}

Vector cross(const Vector& a, const Vector& b) {
    Vector y;
    for (int c = 0; c < 3; ++c) {
        int p = (c + 1) % 3, q = (c + 2) % 3;
        y[c].resize(a[0].size());
        for (size_t i = 0; i < y[c].size(); ++i) y[c][i] = a[p][i] * b[q][i] - a[q][i] * b[p][i];
    }
    return y;
}

// parts of a Helmholtz split are zero mean up to rounding
Scalar centered(Scalar f) {
    double m = mean(f);
    for (double& x : f) x -= m;
    return f;
}

Scalar mul(const Scalar& a, const Scalar& b) {
    Scalar y(a.size());
    for (size_t i = 0; i < a.size(); ++i) y[i] = a[i] * b[i];
    return y;
}

int step_count(const RunConfig& c) {
    if (!(c.dt > 0)) throw std::invalid_argument("dt must be positive");
    return static_cast<int>(std::llround(c.t_end / c.dt));
}

std::vector<int> output_steps(const RunConfig& c, int M) {
    std::vector<int> out;
    if (c.outputs.empty()) return {M};
    for (double t : c.outputs) {
        int n = static_cast<int>(std::llround(t / c.dt));
        if (n < 0 || n > M) throw std::invalid_argument("output time outside the run");
        out.push_back(n);
    }
    return out;
}

Snapshot make_snapshot(const Trajectory& tr, double t, std::vector<std::pair<std::string, const Scalar*>> comps) {
    Snapshot s{tr.system, tr.rep, tr.grid.N, tr.grid.h, t, {}, {}};
    for (auto& [n, f] : comps) {
        s.names.push_back(n);
        s.components.push_back(*f);
    }
    return s;
}

void require_zero_mean(const Scalar& f, const char* what) {
    double m = mean(f), n = max_abs(f);
    if (n > 0 && std::abs(m) > 1e-12 * n)
        throw NonZeroMean(std::string(what) + " has nonzero mean " + std::to_string(m));
}

// largest wavenumber magnitude times a field norm: the scale of a derivative
double derivative_scale(const Grid& g, double norm) { return (1 + norm) * std::numbers::pi / g.h; }

void check_compatible(const Scalar& defect, double scale, const std::string& what) {
    double d = max_abs(defect);
    if (d > 1e-6 * scale)
        throw IncompatibleSources("sources violate " + what + " (defect " + std::to_string(d) + ")");
}

// d/dt by a centered difference of a sampled source
Scalar source_rate(const Grid& g, const SourceFn& f, double t) {
    const double d = 1e-4;
    return diff(sample(g, f, t + d), sample(g, f, t - d), 1 / (2 * d));
}

}  // namespace

const Scalar& Snapshot::component(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return components[i];
    throw std::out_of_range("snapshot has no component " + name);
}

double Trajectory::max_residual() const {
    double m = 0;
    for (auto& s : steps)
        for (double r : s.residual_inf) m = std::max(m, r);
    return m;
}

double Trajectory::max_continuity() const {
    double m = 0;
    for (auto& s : steps) m = std::max(m, s.continuity);
    return m;
}

std::string Trajectory::csv() const {
    std::ostringstream os;
    os << std::setprecision(17);
    os << "t";
    for (auto& e : equations) os << ",residual_" << e;
    os << ",energy,momentum_x,momentum_y,momentum_z,continuity";
    const bool extended = system == "extended";
    if (extended) os << ",momentum_continuity";
    os << "\n";
    for (auto& s : steps) {
        os << s.t;
        for (double r : s.residual_inf) os << "," << r;
        os << "," << s.energy << "," << s.momentum[0] << "," << s.momentum[1] << "," << s.momentum[2] << ",";
        if (std::isnan(s.continuity))
            os << "nan";
        else
            os << s.continuity;
        if (extended) os << "," << s.momentum_continuity;
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

// Values of a field at t = n dt, computed on demand and dropped once passed
template <class T>
class Series {
public:
    explicit Series(std::function<T(int)> f) : f_(std::move(f)) {}
    const T& operator()(int n) {
        auto it = v_.find(n);
        if (it != v_.end()) return it->second;
        return v_[n] = f_(n);
    }
    void forget_before(int n) { v_.erase(v_.begin(), v_.lower_bound(n)); }

private:
    std::function<T(int)> f_;
    std::map<int, T> v_;
};

// centered time derivative at step n, second or fourth order
Vector ddt(Series<Vector>& f, int n, double dt, int order) {
    Vector d = diff(f(n + 1), f(n - 1), 1 / (2 * dt));
    if (order == 4) {
        Vector wide = diff(f(n + 2), f(n - 2), 1 / (12 * dt));
        for (int a = 0; a < 3; ++a) {
            for (double& x : d[a]) x *= 4.0 / 3.0;
            axpy(d[a], -1, wide[a]);
        }
    }
    return d;
}

int stencil_reach(int order) { return order == 4 ? 2 : 1; }

}  // namespace

Trajectory run_magnetic(const RunConfig& c) {
    const Grid& g = c.grid;
    Spectral sp(g);
    const int M = step_count(c);
    const double dt = c.dt, e = c.e;
    Trajectory tr;
    tr.system = "magnetic";
    tr.rep = "D(2,0,0) on (E, -H)";
    tr.header = "magnetic limit: -lap A = e j (Coulomb gauge), -lap A0 = e j0, H = curl A, E = dA/dt - grad A0; "
                "centered time differences of order " +
                std::to_string(c.time_order);
    tr.grid = g;
    tr.equations = {"F", "G", "M", "Q"};

    for (double t : {0.0, M * dt}) {
        Vector j = sample(g, c.sources.j, t);
        check_compatible(sp.div(j), derivative_scale(g, max_abs(j)), "div j = 0");
    }
    Series<Vector> A([&](int n) {
        Vector j = sample(g, c.sources.j, n * dt);
        Vector a;
        for (int k = 0; k < 3; ++k) {
            require_zero_mean(j[k], "current j");
            a[k] = sp.poisson(scaled(j[k], -e));
        }
        return a;
    });
    Series<Vector> Hs([&](int n) { return sp.curl(A(n)); });
    const auto outputs = output_steps(c, M);
    const int reach = stencil_reach(c.time_order);
    for (int n = 0; n <= M; ++n) {
        const double t = n * dt;
        Scalar j0 = sample(g, c.sources.j0, t);
        Vector j = sample(g, c.sources.j, t);
        Scalar phi = sp.poisson(scaled(j0, -e));
        Vector H = Hs(n), gphi = sp.grad(phi);
        Vector dA = ddt(A, n, dt, c.time_order);
        Vector E;
        for (int a = 0; a < 3; ++a) E[a] = diff(dA[a], gphi[a], 1);
        Vector dH = ddt(Hs, n, dt, c.time_order);

        StepDiagnostics d;
        d.t = t;
        Vector F = sp.curl(E);
        for (int a = 0; a < 3; ++a) axpy(F[a], -1, dH[a]);
        Scalar G = sp.div(E);
        axpy(G, -e, j0);
        Vector Mr = sp.curl(H);
        for (int a = 0; a < 3; ++a) axpy(Mr[a], -e, j[a]);
        d.residual_inf = {max_abs(F), max_abs(G), max_abs(Mr), max_abs(sp.div(H))};
        Scalar u = dot(E, E);
        axpy(u, 1, dot(H, H));
        d.energy = 0.5 * integrate(g, u);
        Vector p = cross(E, H);
        for (int a = 0; a < 3; ++a) d.momentum[a] = integrate(g, p[a]);
        d.continuity = std::nan("");
        tr.steps.push_back(d);

        for (int k : outputs)
            if (k == n)
                tr.snapshots.push_back(make_snapshot(tr, t,
                                                     {{"E1", &E[0]}, {"E2", &E[1]}, {"E3", &E[2]},
                                                      {"H1", &H[0]}, {"H2", &H[1]}, {"H3", &H[2]}}));
        if (n == M) {
            const Vector& a = A(n);
            double scale = max_abs(a) / (g.h * g.h);
            tr.div_curl = scale > 0 ? max_abs(cd_div(g, cd_curl(g, a))) / scale : 0;
        }
        A.forget_before(n + 1 - reach);
        Hs.forget_before(n + 1 - reach);
    }
    return tr;
}

Trajectory run_electric(const RunConfig& c) {
    const Grid& g = c.grid;
    Spectral sp(g);
    const int M = step_count(c);
    const double dt = c.dt, e = c.e;
    Trajectory tr;
    tr.system = "electric";
    tr.rep = "D(2,0,0) on (H, E)";
    tr.header = "electric limit: -lap A4 = e j4, E = -grad A4, -lap A = (e j - dE/dt)_T (Coulomb gauge), "
                "H = curl A; centered time differences of order " +
                std::to_string(c.time_order);
    tr.grid = g;
    tr.equations = {"X", "Y", "Z", "Q"};

    for (double t : {0.0, M * dt}) {
        Vector j = sample(g, c.sources.j, t);
        Scalar d = sp.div(j);
        axpy(d, -1, source_rate(g, c.sources.j4, t));
        check_compatible(d, derivative_scale(g, max_abs(j)), "div j = dj4/dt");
    }
    // E = -grad A4 with lap A4 = -e j4
    Series<Vector> Es([&](int n) {
        Scalar j4 = sample(g, c.sources.j4, n * dt);
        require_zero_mean(j4, "charge j4");
        return sp.grad(sp.poisson(scaled(j4, e)));
    });
    const auto outputs = output_steps(c, M);
    const int reach = stencil_reach(c.time_order);
    for (int n = 0; n <= M; ++n) {
        const double t = n * dt;
        const Vector E = Es(n);
        Vector j = sample(g, c.sources.j, t);
        Scalar j4 = sample(g, c.sources.j4, t);
        Vector dE = ddt(Es, n, dt, c.time_order);
        Vector rhs;
        for (int a = 0; a < 3; ++a) {
            require_zero_mean(j[a], "current j");
            rhs[a] = scaled(j[a], e);
            axpy(rhs[a], -1, dE[a]);
        }
        Vector rT = sp.helmholtz(rhs).first;
        Vector A;
        for (int a = 0; a < 3; ++a) A[a] = sp.poisson(centered(scaled(rT[a], -1)));
        Vector H = sp.curl(A);

        StepDiagnostics d;
        d.t = t;
        Vector X = sp.curl(H);
        for (int a = 0; a < 3; ++a) {
            axpy(X[a], 1, dE[a]);
            axpy(X[a], -e, j[a]);
        }
        Scalar Y = sp.div(E);
        axpy(Y, -e, j4);
        d.residual_inf = {max_abs(X), max_abs(Y), max_abs(sp.curl(E)), max_abs(sp.div(H))};
        Scalar u = dot(E, E);
        axpy(u, 1, dot(H, H));
        d.energy = 0.5 * integrate(g, u);
        Vector p = cross(E, H);
        for (int a = 0; a < 3; ++a) d.momentum[a] = integrate(g, p[a]);
        d.continuity = std::nan("");
        tr.steps.push_back(d);
        for (int k : outputs)
            if (k == n)
                tr.snapshots.push_back(make_snapshot(tr, t,
                                                     {{"H1", &H[0]}, {"H2", &H[1]}, {"H3", &H[2]},
                                                      {"E1", &E[0]}, {"E2", &E[1]}, {"E3", &E[2]}}));
        if (n == M) {
            double scale = max_abs(A) / (g.h * g.h);
            tr.div_curl = scale > 0 ? max_abs(cd_div(g, cd_curl(g, A))) / scale : 0;
        }
        Es.forget_before(n + 1 - reach);
    }
    return tr;
}

// ---------------------------------------------------------------------------

namespace {

struct ExtendedFields {
    Scalar B;
    Vector N, W, R;
};

class ExtendedRun {
public:
    ExtendedRun(const RunConfig& c) : c_(c), g_(c.grid), sp_(c.grid) {}

    // A = A_T + A_L with -lap A_T = e j_T and lap A_L = e j_L
    const Vector& A(int n) {
        auto it = A_.find(n);
        if (it != A_.end()) return it->second;
        Vector j = sample(g_, c_.sources.j, n * c_.dt);
        for (auto& ja : j) require_zero_mean(ja, "current j");
        auto [jT, jL] = sp_.helmholtz(j);
        Vector a;
        for (int k = 0; k < 3; ++k) {
            a[k] = sp_.poisson(centered(scaled(jT[k], -c_.e)));
            axpy(a[k], 1, sp_.poisson(centered(scaled(jL[k], c_.e))));
        }
        return A_[n] = std::move(a);
    }

    // div A = lap^-1 (e div j) at any time
    Scalar divA(double t) {
        Scalar d = sp_.div(sample(g_, c_.sources.j, t));
        return sp_.poisson(centered(scaled(d, c_.e)));
    }

    // explicit midpoint for dA4/dt = div A
    const Scalar& A4(int n) {
        if (A4_.empty()) {
            Scalar j4 = sample(g_, c_.sources.j4, 0);
            require_zero_mean(j4, "charge j4");
            A4_[0] = sp_.poisson(scaled(j4, c_.e));
        }
        auto it = A4_.find(n);
        if (it != A4_.end()) return it->second;
        Scalar a;
        if (n > 0) {
            a = A4(n - 1);
            axpy(a, c_.dt, divA((n - 0.5) * c_.dt));
        } else {
            a = A4(n + 1);
            axpy(a, -c_.dt, divA((n + 0.5) * c_.dt));
        }
        return A4_[n] = std::move(a);
    }

    Scalar A0(int n) { return sp_.poisson(scaled(sample(g_, c_.sources.j0, n * c_.dt), -c_.e)); }

    const ExtendedFields& fields(int n) {
        auto it = F_.find(n);
        if (it != F_.end()) return it->second;
        ExtendedFields f;
        const Vector& a = A(n);
        f.W = sp_.curl(a);
        Vector dA = diff(A(n + 1), A(n - 1), 1 / (2 * c_.dt));
        Vector gphi = sp_.grad(A0(n));
        for (int k = 0; k < 3; ++k) f.N[k] = diff(dA[k], gphi[k], 1);
        f.R = sp_.grad(A4(n));
        f.B = sp_.div(a);
        return F_[n] = std::move(f);
    }

    void forget_before(int n) {
        for (auto* m : {&F_}) m->erase(m->begin(), m->lower_bound(n));
        A_.erase(A_.begin(), A_.lower_bound(n - 1));
        A4_.erase(A4_.begin(), A4_.lower_bound(n - 1));
    }

    const Spectral& sp() const { return sp_; }

private:
    const RunConfig& c_;
    Grid g_;
    Spectral sp_;
    std::map<int, Vector> A_;
    std::map<int, Scalar> A4_;
    std::map<int, ExtendedFields> F_;
};

Scalar energy_density(const ExtendedFields& f) {
    Scalar u = mul(f.B, f.B);
    axpy(u, 1, dot(f.W, f.W));
    return scaled(u, 0.5);
}

// energy flux N x W - B N
Vector energy_flux(const ExtendedFields& f) {
    Vector s = cross(f.N, f.W);
    for (int a = 0; a < 3; ++a) axpy(s[a], -1, mul(f.B, f.N[a]));
    return s;
}

// momentum density B R + R x W
Vector momentum_density(const ExtendedFields& f) {
    Vector p = cross(f.R, f.W);
    for (int a = 0; a < 3; ++a) axpy(p[a], 1, mul(f.B, f.R[a]));
    return p;
}

// momentum flux, row b: W_a W_b - N_a R_b - N_b R_a + delta_ab (N.R - T00)
Vector momentum_flux_row(const ExtendedFields& f, int b) {
    Scalar iso = dot(f.N, f.R);
    axpy(iso, -1, energy_density(f));
    Vector row;
    for (int a = 0; a < 3; ++a) {
        row[a] = mul(f.W[a], f.W[b]);
        axpy(row[a], -1, mul(f.N[a], f.R[b]));
        axpy(row[a], -1, mul(f.N[b], f.R[a]));
        if (a == b) axpy(row[a], 1, iso);
    }
    return row;
}

}  // namespace

Trajectory run_extended(const RunConfig& c) {
    const Grid& g = c.grid;
    const int M = step_count(c);
    const double dt = c.dt, e = c.e;
    ExtendedRun run(c);
    const Spectral& sp = run.sp();
    Trajectory tr;
    tr.system = "extended";
    tr.rep = "D(3,1,1) on (B, N, W, R)";
    tr.header =
        "extended system: sign +1 in dA4/dt = +div A (explicit midpoint); -lap A_T = e j_T, lap A_L = e j_L, "
        "-lap A0 = e j0, lap A4 = e j4 at t = 0; W = curl A, N = dA/dt - grad A0, R = grad A4, B = div A";
    tr.grid = g;
    tr.equations = {"C", "U", "A", "N", "W", "R", "B"};

    for (double t : {0.0, M * dt}) {
        Vector j = sample(g, c.sources.j, t);
        double scale = derivative_scale(g, max_abs(j));
        Scalar d = sp.div(j);
        axpy(d, -1, source_rate(g, c.sources.j4, t));
        check_compatible(d, scale, "div j = dj4/dt");
        Vector rate = sp.curl({source_rate(g, c.sources.j[0], t), source_rate(g, c.sources.j[1], t),
                               source_rate(g, c.sources.j[2], t)});
        check_compatible(rate[0], scale, "a static transverse current");
        check_compatible(rate[1], scale, "a static transverse current");
        check_compatible(rate[2], scale, "a static transverse current");
    }

    const auto outputs = output_steps(c, M);
    for (int n = 0; n <= M; ++n) {
        const double t = n * dt;
        const ExtendedFields& fm = run.fields(n - 1);
        const ExtendedFields& fp = run.fields(n + 1);
        const ExtendedFields& f = run.fields(n);
        Scalar j0 = sample(g, c.sources.j0, t), j4 = sample(g, c.sources.j4, t);
        Vector j = sample(g, c.sources.j, t);
        const double s = 1 / (2 * dt);

        Scalar C = sp.div(f.N);
        axpy(C, -1, diff(fp.B, fm.B, s));
        axpy(C, -e, j0);
        Vector dR = diff(fp.R, fm.R, s), dW = diff(fp.W, fm.W, s);
        Vector U = sp.curl(f.W), Nr = sp.curl(f.N), gB = sp.grad(f.B), Rr = sp.curl(f.R);
        Vector Wr;
        for (int a = 0; a < 3; ++a) {
            axpy(U[a], 1, dR[a]);
            axpy(U[a], -e, j[a]);
            axpy(Nr[a], 1, dW[a]);
            Wr[a] = diff(dR[a], gB[a], 1);
        }
        Scalar Ar = sp.div(f.R);
        axpy(Ar, -e, j4);
        StepDiagnostics d;
        d.t = t;
        d.residual_inf = {max_abs(C),  max_abs(U),  max_abs(Ar),          max_abs(Nr),
                          max_abs(Wr), max_abs(Rr), max_abs(sp.div(f.W))};

        Scalar T00 = energy_density(f);
        d.energy = integrate(g, T00);
        Vector P = momentum_density(f);
        for (int a = 0; a < 3; ++a) d.momentum[a] = integrate(g, P[a]);

        // continuity with the work done by the sources
        Scalar ce = diff(energy_density(fp), energy_density(fm), s);
        axpy(ce, 1, sp.div(energy_flux(f)));
        axpy(ce, e, mul(f.B, j0));
        axpy(ce, e, dot(f.N, j));
        d.continuity = max_abs(ce);
        Vector Pp = momentum_density(fp), Pm = momentum_density(fm), Wxj = cross(f.W, j);
        double mc = 0;
        for (int b = 0; b < 3; ++b) {
            Scalar cm = diff(Pp[b], Pm[b], s);
            axpy(cm, 1, sp.div(momentum_flux_row(f, b)));
            axpy(cm, e, mul(f.R[b], j0));
            axpy(cm, e, Wxj[b]);
            axpy(cm, e, mul(f.N[b], j4));
            mc = std::max(mc, max_abs(cm));
        }
        d.momentum_continuity = mc;
        tr.steps.push_back(d);

        for (int k : outputs)
            if (k == n)
                tr.snapshots.push_back(make_snapshot(
                    tr, t,
                    {{"B", &f.B}, {"N1", &f.N[0]}, {"N2", &f.N[1]}, {"N3", &f.N[2]}, {"W1", &f.W[0]},
                     {"W2", &f.W[1]}, {"W3", &f.W[2]}, {"R1", &f.R[0]}, {"R2", &f.R[1]}, {"R3", &f.R[2]}}));
        if (n == M) {
            const Vector& a = run.A(n);
            double scale = max_abs(a) / (g.h * g.h);
            tr.div_curl = scale > 0 ? max_abs(cd_div(g, cd_curl(g, a))) / scale : 0;
        }
        run.forget_before(n - 1);
    }
    return tr;
}

// ---------------------------------------------------------------------------

namespace {

constexpr char kMagic[8] = {'G', 'A', 'L', 'F', 'L', 'D', '1', '\0'};

static_assert(std::endian::native == std::endian::little, "snapshot I/O assumes a little-endian host");

template <class T>
void put(std::vector<char>& out, const T& v) {
    const char* p = reinterpret_cast<const char*>(&v);
    out.insert(out.end(), p, p + sizeof(T));
}

void put_string(std::vector<char>& out, const std::string& s) {
    put(out, static_cast<uint32_t>(s.size()));
    out.insert(out.end(), s.begin(), s.end());
}

class Reader {
public:
    explicit Reader(const std::vector<char>& b) : b_(b) {}
    template <class T>
    T get() {
        need(sizeof(T));
        T v;
        std::memcpy(&v, b_.data() + p_, sizeof(T));
        p_ += sizeof(T);
        return v;
    }
    std::string get_string() {
        uint32_t n = get<uint32_t>();
        need(n);
        std::string s(b_.data() + p_, n);
        p_ += n;
        return s;
    }
    void read(double* dst, size_t count) {
        need(count * sizeof(double));
        std::memcpy(dst, b_.data() + p_, count * sizeof(double));
        p_ += count * sizeof(double);
    }
    size_t remaining() const { return b_.size() - p_; }

private:
    void need(size_t n) const {
        if (p_ + n > b_.size()) throw Truncated("snapshot ends early");
    }
    const std::vector<char>& b_;
    size_t p_ = 0;
};

}  // namespace

std::vector<char> encode_snapshot(const Snapshot& s) {
    const size_t cells = static_cast<size_t>(s.N) * s.N * s.N;
    std::vector<char> out(kMagic, kMagic + 8);
    put_string(out, s.system);
    put_string(out, s.rep);
    put(out, static_cast<uint32_t>(s.N));
    put(out, s.h);
    put(out, s.t);
    put(out, static_cast<uint32_t>(s.components.size()));
    for (auto& c : s.components) {
        if (c.size() != cells) throw GridMismatch("component size does not match N^3");
        const char* p = reinterpret_cast<const char*>(c.data());
        out.insert(out.end(), p, p + cells * sizeof(double));
    }
    return out;
}

Snapshot decode_snapshot(const std::vector<char>& bytes, int expected_N) {
    if (bytes.size() < 8 || std::memcmp(bytes.data(), kMagic, 8) != 0) throw BadMagic("not a GALFLD1 snapshot");
    std::vector<char> rest(bytes.begin() + 8, bytes.end());
    Reader r(rest);
    Snapshot s;
    s.system = r.get_string();
    s.rep = r.get_string();
    s.N = static_cast<int>(r.get<uint32_t>());
    s.h = r.get<double>();
    s.t = r.get<double>();
    uint32_t count = r.get<uint32_t>();
    if (expected_N > 0 && s.N != expected_N)
        throw GridMismatch("snapshot has N = " + std::to_string(s.N) + ", expected " + std::to_string(expected_N));
    const size_t cells = static_cast<size_t>(s.N) * s.N * s.N;
    if (r.remaining() != count * cells * sizeof(double))
        throw Truncated("payload has " + std::to_string(r.remaining()) + " bytes, header implies " +
                        std::to_string(count * cells * sizeof(double)));
    for (uint32_t c = 0; c < count; ++c) {
        Scalar f(cells);
        r.read(f.data(), cells);
        s.components.push_back(std::move(f));
    }
    return s;
}

void write_snapshot(const std::string& path, const Snapshot& s) {
    std::vector<char> b = encode_snapshot(s);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f.write(b.data(), static_cast<std::streamsize>(b.size()));
}

Snapshot read_snapshot(const std::string& path, int expected_N) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::vector<char> b((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return decode_snapshot(b, expected_N);
}

void write_outputs(const Trajectory& tr, const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (size_t k = 0; k < tr.snapshots.size(); ++k)
        write_snapshot(dir + "/" + tr.system + "_" + std::to_string(k) + ".gfld", tr.snapshots[k]);
    std::ofstream f(dir + "/diagnostics.csv");
    if (!f) throw std::runtime_error("cannot write " + dir + "/diagnostics.csv");
    f << "# " << tr.header << "\n" << tr.csv();
}

FrameComparison frame_consistency(Limit limit, const RunConfig& c, int m) {
    const Grid& g = c.grid;
    FrameComparison out;
    out.shift = m;
    out.v = {m * g.h / c.t_end, 0, 0};
    RunConfig moving = c;
    moving.outputs.clear();
    RunConfig rest = moving;
    const bool mag = limit == Limit::Magnetic;
    moving.sources = mag ? boost_magnetic_sources(c.sources, out.v) : boost_electric_sources(c.sources, out.v);
    Trajectory a = mag ? run_magnetic(rest) : run_electric(rest);
    Trajectory b = mag ? run_magnetic(moving) : run_electric(moving);
    out.rest_residual = a.max_residual();
    out.moving_residual = b.max_residual();

    const Snapshot &sa = a.snapshots.back(), &sb = b.snapshots.back();
    Vector E, H;
    for (int k = 0; k < 3; ++k) {
        E[k] = shift(g, sa.component("E" + std::to_string(k + 1)), {m, 0, 0});
        H[k] = shift(g, sa.component("H" + std::to_string(k + 1)), {m, 0, 0});
    }
    // magnetic: E' = E - v x H, H' = H; electric: E' = E, H' = H + v x E
    const Vector& F = mag ? H : E;
    Vector vxF;
    for (int k = 0; k < 3; ++k) {
        int p = (k + 1) % 3, q = (k + 2) % 3;
        vxF[k].resize(g.size());
        for (size_t i = 0; i < g.size(); ++i) vxF[k][i] = out.v[p] * F[q][i] - out.v[q] * F[p][i];
    }
    for (int k = 0; k < 3; ++k) {
        const Scalar &Eb = sb.component("E" + std::to_string(k + 1)), &Hb = sb.component("H" + std::to_string(k + 1));
        for (size_t i = 0; i < g.size(); ++i) {
            double Ee = mag ? E[k][i] - vxF[k][i] : E[k][i];
            double He = mag ? H[k][i] : H[k][i] + vxF[k][i];
            out.max_error = std::max({out.max_error, std::abs(Ee - Eb[i]), std::abs(He - Hb[i])});
        }
    }
    return out;
}

}  // namespace galinv::sim
