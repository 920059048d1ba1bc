#pragma once

#include "galinv/serialize.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace galinv::sim {

class NonZeroMean : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IncompatibleSources : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SnapshotError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class BadMagic : public SnapshotError {
public:
    using SnapshotError::SnapshotError;
};
class Truncated : public SnapshotError {
public:
    using SnapshotError::SnapshotError;
};
class GridMismatch : public SnapshotError {
public:
    using SnapshotError::SnapshotError;
};

// Periodic cube with N points per axis and spacing h; index i + N (j + N k)
struct Grid {
    int N = 32;
    double h = 0;

    Grid() = default;
    Grid(int n, double spacing);  // N >= 8 a power of two, h > 0
    double L() const { return N * h; }
    size_t size() const { return static_cast<size_t>(N) * N * N; }
    size_t index(int i, int j, int k) const { return static_cast<size_t>(i) + N * (static_cast<size_t>(j) + N * k); }
};

using Scalar = std::vector<double>;
using Vector = std::array<Scalar, 3>;

Scalar zeros(const Grid& g);
Vector zero_vector(const Grid& g);
double max_abs(const Scalar& f);
double max_abs(const Vector& f);
double mean(const Scalar& f);
// sum over the grid times the cell volume
double integrate(const Grid& g, const Scalar& f);
// f(x + shift_i h) on the periodic lattice, shift in points per axis
Scalar shift(const Grid& g, const Scalar& f, const std::array<int, 3>& s);

// Spectral derivatives; the Nyquist wavenumber is treated as zero so that
// every operator is a Fourier multiplier with the same symbol i k
class Spectral {
public:
    explicit Spectral(const Grid& g);
    const Grid& grid() const { return g_; }

    Scalar partial(const Scalar& f, int axis) const;
    Vector grad(const Scalar& f) const;
    Scalar div(const Vector& F) const;
    Vector curl(const Vector& F) const;
    Scalar laplacian(const Scalar& f) const;
    // u with laplacian(u) = rhs and zero mean; throws NonZeroMean
    Scalar poisson(const Scalar& rhs) const;
    // transverse and longitudinal parts (zero mean each)
    std::pair<Vector, Vector> helmholtz(const Vector& F) const;

private:
    using Spectrum = std::vector<std::complex<double>>;
    Spectrum forward(const Scalar& f) const;
    Scalar inverse(Spectrum s) const;
    void transform(Spectrum& s, bool inv) const;
    Spectrum times_ik(const Spectrum& s, int axis) const;
    Spectrum inverse_laplacian(Spectrum s) const;
    Spectrum div_spectrum(const Vector& F) const;

    Grid g_;
    std::vector<double> k_;  // wavenumber per index, Nyquist zeroed
    std::vector<double> ksq_;
    struct Fft;
    std::shared_ptr<Fft> fft_;
};

// Laplacian solve on a grid: lap u = rhs
Scalar poisson_solve(const Scalar& rhs, const Grid& g);

// Second-order central differences on the torus
Scalar cd_partial(const Grid& g, const Scalar& f, int axis);
Vector cd_grad(const Grid& g, const Scalar& f);
Scalar cd_div(const Grid& g, const Vector& F);
Vector cd_curl(const Grid& g, const Vector& F);

// ---------------------------------------------------------------------------
// Sources

using SourceFn = std::function<double(double t, double x, double y, double z)>;

// Closed-form expression in t, x, y, z with constants pi and L, operators
// + - * / ^ (integer powers), sin, cos, exp, sqrt and gauss(x0, y0, z0, s), a
// Gaussian summed over the neighbouring periodic images
class SourceExpr {
public:
    SourceExpr(const std::string& text, double L);
    double operator()(double t, double x, double y, double z) const;
    const std::string& text() const { return text_; }
    // throws IncompatibleSources unless periodic in x, y, z with period L
    void check_periodic(double L) const;

    struct Node;

private:
    std::string text_;
    std::shared_ptr<const Node> root_;
};

// Five-current: j0, j (three components), j4; missing components are zero
struct SourceSpec {
    SourceFn j0, j4;
    std::array<SourceFn, 3> j;

    SourceSpec();
    static SourceSpec from_json(const Json& j, double L);
};

Scalar sample(const Grid& g, const SourceFn& f, double t);
Vector sample(const Grid& g, const std::array<SourceFn, 3>& f, double t);

// Sources seen from the frame moving with velocity v: j'(t, x) = Lambda j(t, x + v t)
SourceSpec boost_magnetic_sources(const SourceSpec& s, const std::array<double, 3>& v);  // j0 -> j0 + v.j
SourceSpec boost_electric_sources(const SourceSpec& s, const std::array<double, 3>& v);  // j -> j + v j4

// ---------------------------------------------------------------------------
// Runs

struct RunConfig {
    Grid grid{32, 6.283185307179586 / 32};
    double dt = 1e-2;
    double t_end = 0.1;
    double e = 1;
    int time_order = 4;  // centered stencil for dA/dt and dE/dt in the limits: 2 or 4
    SourceSpec sources;
    std::vector<double> outputs;  // snapshot times, rounded to steps; empty: final time

    static RunConfig from_json(const Json& j);
};

struct Snapshot {
    std::string system;
    std::string rep;
    int N = 0;
    double h = 0;
    double t = 0;
    std::vector<std::string> names;  // component names, not stored in the file
    std::vector<Scalar> components;

    const Scalar& component(const std::string& name) const;
};

void write_snapshot(const std::string& path, const Snapshot& s);
std::vector<char> encode_snapshot(const Snapshot& s);
// expected_N > 0 makes a header with a different N a GridMismatch
Snapshot read_snapshot(const std::string& path, int expected_N = 0);
Snapshot decode_snapshot(const std::vector<char>& bytes, int expected_N = 0);

struct StepDiagnostics {
    double t = 0;
    std::vector<double> residual_inf;  // per equation, in system order
    double energy = 0;
    std::array<double, 3> momentum{};
    double continuity = 0;           // energy continuity residual, inf norm
    double momentum_continuity = 0;  // extended system only
};

struct Trajectory {
    std::string system;
    std::string rep;
    std::string header;  // sign conventions used
    Grid grid;
    std::vector<std::string> equations;
    std::vector<StepDiagnostics> steps;
    std::vector<Snapshot> snapshots;
    double div_curl = 0;  // scaled inf norm of div_h curl_h of the vector potential

    double max_residual() const;
    double max_continuity() const;
    std::string csv() const;
};

// Magnetic limit: -lap A = e j (Coulomb gauge, div j = 0), -lap A0 = e j0,
// H = curl A, E = dA/dt - grad A0 with a centered difference in time of
// order time_order
Trajectory run_magnetic(const RunConfig& c);
// Electric limit: -lap A4 = e j4, E = -grad A4, -lap A = e j - dE/dt with
// div j = dj4/dt, H = curl A
Trajectory run_electric(const RunConfig& c);
// Extended system: -lap A_T = e j_T, lap A_L = e j_L, -lap A0 = e j0,
// dA4/dt = div A by explicit midpoint from lap A4 = e j4 at t = 0;
// W = curl A, N = dA/dt - grad A0, R = grad A4, B = dA4/dt. Requires
// dj4/dt = div j and a static transverse current.
Trajectory run_extended(const RunConfig& c);

// Writes snapshots as <dir>/<system>_<k>.gfld and diagnostics.csv
void write_outputs(const Trajectory& tr, const std::string& dir);

// Runs a limit at rest and in the frame moving with v = (m h / t_end, 0, 0),
// then compares the final fields: the moving-frame fields must equal the
// transformed rest fields shifted by m grid points.
enum class Limit { Magnetic, Electric };

struct FrameComparison {
    std::array<double, 3> v{};
    int shift = 0;
    double max_error = 0;
    double rest_residual = 0;
    double moving_residual = 0;
};

FrameComparison frame_consistency(Limit limit, const RunConfig& c, int m = 1);

}  // namespace galinv::sim
