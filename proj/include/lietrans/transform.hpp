#pragma once

// Discrete and continuous C-, S-, E-transforms.
//
// The discrete forward transform uses the self-normalising quotient
//     b_lambda = <f, phi_lambda>_M / <phi_lambda, phi_lambda>_M
// with both scalar products computed by epsilon-weighted summation over the
// grid.  Norms are never taken from closed forms: on the affine wall of the
// weight simplex the closed form undercounts (1D: lambda = M gives 8M, not 4M).

#include <functional>
#include <random>
#include <span>
#include <vector>

#include "lietrans/orbit_function.hpp"

namespace lietrans {

struct Spectrum {
    AlgebraId algebra = AlgebraId::A1xA1xA1;
    Family family = Family::C;
    GridSpec spec;
    std::vector<Weight> weights;
    std::vector<Complex> coeffs;
    std::vector<double> norms;
    std::vector<double> stderrs; // Monte Carlo standard errors; empty for discrete spectra
};

// <f, g>_M = sum_i eps(x_i) f(x_i) conj(g(x_i)).
inline Complex discrete_dot(std::span<const Complex> f, std::span<const Complex> g,
                            std::span<const GridPoint> grid) {
    if (f.size() != grid.size() || g.size() != grid.size())
        throw data_error("discrete_dot: expected " + std::to_string(grid.size()) + " samples, got " +
                         std::to_string(f.size()) + " and " + std::to_string(g.size()));
    Complex acc{};
    for (std::size_t i = 0; i < grid.size(); ++i) acc += static_cast<double>(grid[i].eps) * f[i] * std::conj(g[i]);
    return acc;
}

// Precomputed B matrix: row lambda holds conj(phi_lambda(x_j)) / <phi_lambda, phi_lambda>_M.
// b = B * (eps .* f).
struct TransformMatrix {
    AlgebraId algebra = AlgebraId::A1xA1xA1;
    Family family = Family::C;
    GridSpec spec;
    std::vector<Weight> weights;
    std::vector<Vec3i> grid_indices;
    std::vector<double> eps;
    std::vector<double> norms;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Complex> B; // row-major rows x cols

    Spectrum apply(std::span<const Complex> samples) const {
        if (samples.size() != cols)
            throw data_error("expected " + std::to_string(cols) + " samples, got " + std::to_string(samples.size()));
        Spectrum s{algebra, family, spec, weights, std::vector<Complex>(rows), norms, {}};
        for (std::size_t r = 0; r < rows; ++r) {
            Complex acc{};
            const Complex* row = B.data() + r * cols;
            for (std::size_t c = 0; c < cols; ++c) acc += row[c] * (eps[c] * samples[c]);
            s.coeffs[r] = acc;
        }
        return s;
    }
};

class DiscreteTransform {
  public:
    DiscreteTransform(AlgebraId id, const GridSpec& spec, Family family)
        : DiscreteTransform(id, spec, family, lambda_set(id, spec, family).weights) {}

    // Custom weight list on the canonical grid (e.g. a shifted system).
    DiscreteTransform(AlgebraId id, const GridSpec& spec, Family family, std::vector<Weight> weights)
        : id_(id), spec_(spec), family_(family), grid_(grid_points(id, spec, family)), weights_(std::move(weights)) {
        functions_.reserve(weights_.size());
        for (const auto& w : weights_) functions_.emplace_back(id, family, w);
        values_.resize(weights_.size() * grid_.size());
        norms_.assign(weights_.size(), 0.0);
        for (std::size_t l = 0; l < weights_.size(); ++l) {
            double n = 0;
            for (std::size_t j = 0; j < grid_.size(); ++j) {
                Complex v = functions_[l](grid_[j]);
                values_[l * grid_.size() + j] = v;
                n += static_cast<double>(grid_[j].eps) * std::norm(v);
            }
            norms_[l] = n;
        }
    }

    AlgebraId algebra() const { return id_; }
    Family family() const { return family_; }
    const GridSpec& spec() const { return spec_; }
    const std::vector<GridPoint>& grid() const { return grid_; }
    const std::vector<Weight>& weights() const { return weights_; }
    const std::vector<double>& norms() const { return norms_; }
    const std::vector<OrbitFunction>& functions() const { return functions_; }

    // phi_lambda sampled on the grid.
    std::span<const Complex> row(std::size_t l) const {
        return {values_.data() + l * grid_.size(), grid_.size()};
    }

    Spectrum forward(std::span<const Complex> samples) const {
        if (weights_.empty())
            throw data_error("empty interior: no admissible " + std::string(name(family_)) + "-weights for M = " +
                             spec_.to_string());
        if (samples.size() != grid_.size())
            throw data_error("expected " + std::to_string(grid_.size()) + " samples, got " +
                             std::to_string(samples.size()));
        Spectrum s{id_, family_, spec_, weights_, std::vector<Complex>(weights_.size()), norms_, {}};
        for (std::size_t l = 0; l < weights_.size(); ++l) s.coeffs[l] = discrete_dot(samples, row(l), grid_) / norms_[l];
        return s;
    }

    // <phi_a, phi_b>_M for every pair, row-major.
    std::vector<Complex> gram() const {
        const std::size_t n = weights_.size();
        std::vector<Complex> g(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a; b < n; ++b) {
                Complex v = discrete_dot(row(a), row(b), grid_);
                g[a * n + b] = v;
                g[b * n + a] = std::conj(v);
            }
        return g;
    }

    TransformMatrix matrix() const {
        TransformMatrix m{id_, family_, spec_, weights_, {}, {}, norms_, weights_.size(), grid_.size(), {}};
        for (const auto& p : grid_) {
            m.grid_indices.push_back(p.s);
            m.eps.push_back(static_cast<double>(p.eps));
        }
        m.B.resize(m.rows * m.cols);
        for (std::size_t l = 0; l < m.rows; ++l)
            for (std::size_t j = 0; j < m.cols; ++j) m.B[l * m.cols + j] = std::conj(values_[l * m.cols + j]) / norms_[l];
        return m;
    }

  private:
    AlgebraId id_;
    GridSpec spec_;
    Family family_;
    std::vector<GridPoint> grid_;
    std::vector<Weight> weights_;
    std::vector<OrbitFunction> functions_;
    std::vector<Complex> values_; // |Lambda| x |grid|
    std::vector<double> norms_;
};

// Continuous extension of a spectrum: sum_lambda b_lambda phi_lambda(x).
class Synthesizer {
  public:
    explicit Synthesizer(const Spectrum& s) : coeffs_(s.coeffs) {
        if (s.coeffs.size() != s.weights.size()) throw data_error("spectrum has mismatched weights and coefficients");
        functions_.reserve(s.weights.size());
        for (const auto& w : s.weights) functions_.emplace_back(s.algebra, s.family, w);
    }

    template <class Point> Complex operator()(const Point& x) const {
        Complex acc{};
        for (std::size_t l = 0; l < functions_.size(); ++l)
            if (coeffs_[l] != Complex{}) acc += coeffs_[l] * functions_[l](x);
        return acc;
    }

  private:
    std::vector<Complex> coeffs_;
    std::vector<OrbitFunction> functions_;
};

inline Complex synthesize(const Spectrum& s, const Vec3d& x) { return Synthesizer(s)(x); }

// Uniform sampling of F (or F_e = F u r_1 F for the E family) in omega-check
// coordinates.  Each simple factor is a simplex {x >= 0, sum m_i x_i <= 1};
// normalised exponential spacings give a uniform point of the standard
// simplex, and x_i = u_i / m_i is a linear map, so uniformity carries over.
class RegionSampler {
  public:
    RegionSampler(AlgebraId id, Family family) : id_(id), family_(family) {}

    double volume() const { return (family_ == Family::E ? 2.0 : 1.0) * cartan(id_).volF; }

    template <class Rng> Vec3d operator()(Rng& rng) const {
        const auto& d = cartan(id_);
        std::exponential_distribution<double> expo(1.0);
        Vec3d x{};
        for (const auto& f : d.factors) {
            std::array<double, 4> e{};
            double total = 0;
            for (int k = 0; k <= f.rank; ++k) total += (e[k] = expo(rng));
            for (int k = 0; k < f.rank; ++k) x[f.offset + k] = e[k] / total / d.marks[f.offset + k];
        }
        if (family_ == Family::E) {
            std::bernoulli_distribution coin(0.5);
            if (coin(rng)) x = reflect<double>(id_, 1, x, Action::Coweight);
        }
        return x;
    }

  private:
    AlgebraId id_;
    Family family_;
};

struct Estimate {
    double value = 0;
    double stderr_ = 0;
    double stddev = 0; // sample standard deviation of the integrand
};

struct ComplexEstimate {
    Complex value{};
    double stderr_ = 0; // sqrt(var(Re) + var(Im)) / sqrt(N)
};

using Field = std::function<Complex(const Vec3d&)>;

namespace detail {

struct ComplexAccumulator {
    Complex sum{};
    double sum_re2 = 0, sum_im2 = 0;
    std::size_t n = 0;

    void add(Complex v) {
        sum += v;
        sum_re2 += v.real() * v.real();
        sum_im2 += v.imag() * v.imag();
        ++n;
    }
    Complex mean() const { return sum / static_cast<double>(n); }
    double variance() const {
        const double N = static_cast<double>(n);
        const Complex m = mean();
        const double vr = (sum_re2 / N - m.real() * m.real()) * N / (N - 1);
        const double vi = (sum_im2 / N - m.imag() * m.imag()) * N / (N - 1);
        return std::max(0.0, vr) + std::max(0.0, vi);
    }
};

inline void check_budget(std::size_t n) {
    if (n < 1000) throw std::invalid_argument("Monte Carlo budget must be at least 1000 samples");
}

} // namespace detail

inline std::vector<Vec3d> sample_region(AlgebraId id, Family family, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    RegionSampler sampler(id, family);
    std::vector<Vec3d> pts(n);
    for (auto& p : pts) p = sampler(rng);
    return pts;
}

// Continuous scalar product int_F phi conj(psi) dx by uniform Monte Carlo.
inline ComplexEstimate continuous_dot(const Field& phi, const Field& psi, AlgebraId id, Family family,
                                      std::size_t n, std::uint64_t seed) {
    detail::check_budget(n);
    const double vol = RegionSampler(id, family).volume();
    detail::ComplexAccumulator acc;
    for (const auto& x : sample_region(id, family, n, seed)) acc.add(phi(x) * std::conj(psi(x)));
    return {vol * acc.mean(), vol * std::sqrt(acc.variance() / static_cast<double>(n))};
}

// c_lambda = <f, phi_lambda> / (|orbit| |F|), the continuous expansion coefficients.
inline Spectrum continuous_coeffs(const Field& f, AlgebraId id, Family family, const std::vector<Weight>& weights,
                                  std::size_t n, std::uint64_t seed) {
    detail::check_budget(n);
    const auto pts = sample_region(id, family, n, seed);
    std::vector<Complex> fx(n);
    for (std::size_t i = 0; i < n; ++i) fx[i] = f(pts[i]);
    Spectrum s{id, family, GridSpec{}, weights, {}, {}, {}};
    for (const auto& w : weights) {
        OrbitFunction phi(id, family, w);
        detail::ComplexAccumulator acc;
        for (std::size_t i = 0; i < n; ++i) acc.add(fx[i] * std::conj(phi(pts[i])));
        const double size = static_cast<double>(phi.size());
        s.coeffs.push_back(acc.mean() / size);
        s.norms.push_back(size * RegionSampler(id, family).volume());
        s.stderrs.push_back(std::sqrt(acc.variance() / static_cast<double>(n)) / size);
    }
    return s;
}

// int_F |T(x) - f(x)| dx where T is the continuous extension of s.
inline Estimate error_integral(const Field& f, const Spectrum& s, std::size_t n, std::uint64_t seed) {
    detail::check_budget(n);
    const Synthesizer T(s);
    const double vol = RegionSampler(s.algebra, s.family).volume();
    double sum = 0, sum2 = 0;
    detail::ComplexAccumulator diff;
    for (const auto& x : sample_region(s.algebra, s.family, n, seed)) {
        const Complex d = T(x) - f(x);
        const double a = std::abs(d);
        sum += a;
        sum2 += a * a;
        diff.add(d);
    }
    const double N = static_cast<double>(n);
    const double mean = sum / N;
    const double var = std::max(0.0, (sum2 / N - mean * mean) * N / (N - 1));
    return {vol * mean, vol * std::sqrt(var / N), std::sqrt(diff.variance())};
}

// Higher-harmonic system: every weight moved by s * shift.  Defined for
// A1xA1xA1 only, with each shift component a multiple of that factor's density.
inline WeightSet shifted_lambda_set(AlgebraId id, const GridSpec& spec, const WeightSet& base, const Vec3i& shift,
                                    std::int64_t s) {
    if (id != AlgebraId::A1xA1xA1)
        throw unsupported_operation("shifted weight systems are only defined for A1xA1xA1");
    const Vec3<int> M = spec.per_coordinate(id);
    for (int i = 0; i < 3; ++i)
        if (shift[i] % M[i] != 0)
            throw std::invalid_argument("shift component " + std::to_string(i + 1) + " is not a multiple of M");
    WeightSet out{base.family, {}, {}};
    for (const auto& w : base.weights) out.weights.push_back(w + scaled(shift, s));
    return out;
}

// For each weight of `other`, the index of the weight of `base` whose function
// takes the same values on the grid (to tol), both divided by their orbit
// sizes so that e.g. C_0 and C_{2M} on A1 pair up.  Throws when one is missing.
inline std::vector<std::size_t> grid_value_pairing(const DiscreteTransform& base, const DiscreteTransform& other,
                                                   double tol = 1e-10) {
    if (base.grid().size() != other.grid().size()) throw data_error("transforms live on different grids");
    std::vector<std::size_t> match;
    for (std::size_t a = 0; a < other.weights().size(); ++a) {
        const auto ra = other.row(a);
        const double sa = static_cast<double>(other.functions()[a].size());
        std::size_t found = base.weights().size();
        for (std::size_t b = 0; b < base.weights().size() && found == base.weights().size(); ++b) {
            const auto rb = base.row(b);
            const double sb = static_cast<double>(base.functions()[b].size());
            double worst = 0;
            for (std::size_t j = 0; j < ra.size(); ++j) worst = std::max(worst, std::abs(ra[j] / sa - rb[j] / sb));
            if (worst < tol) found = b;
        }
        if (found == base.weights().size())
            throw consistency_error("weight " + format_vec(other.weights()[a]) + " has no grid-equivalent partner");
        match.push_back(found);
    }
    return match;
}

} // namespace lietrans
