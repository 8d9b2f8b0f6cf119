#include "fnls/galerkin.hpp"

#include "fnls/spectrum.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace fnls {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// FFTW plan creation/destruction is not thread-safe.
std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

bool NonlinearitySpec::is_zero() const {
    for (double a : taylor)
        if (a != 0.0) return false;
    return true;
}

double NonlinearitySpec::f(double u) const {
    double acc = 0.0;
    for (std::size_t m = taylor.size(); m-- > 0;) acc = (acc + taylor[m]) * u;
    return acc;
}

double NonlinearitySpec::antiderivative(double u) const {
    double acc = 0.0;
    for (std::size_t m = taylor.size(); m-- > 0;)
        acc = acc * u + taylor[m] / static_cast<double>(m + 2);
    return acc * u * u;
}

ModeState::ModeState(int n_modes) : N(n_modes) {
    if (n_modes < 0) throw std::invalid_argument("ModeState: N must be >= 0");
    xi.assign(static_cast<std::size_t>(2 * n_modes + 1), Complex{0.0, 0.0});
}

CollocationGrid::CollocationGrid(int n_modes, int poly_degree) : N_(n_modes) {
    if (n_modes < 0) throw std::invalid_argument("CollocationGrid: N must be >= 0");
    if (poly_degree < 0) throw std::invalid_argument("CollocationGrid: degree must be >= 0");

    const int required = (poly_degree + 1) * (2 * n_modes + 1);
    int m = 8;
    while (m < required) m *= 2;
    M_ = m;

    buf_in_.resize(static_cast<std::size_t>(M_));
    buf_out_.resize(static_cast<std::size_t>(M_));

    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    auto* in = reinterpret_cast<fftw_complex*>(buf_in_.data());
    auto* out = reinterpret_cast<fftw_complex*>(buf_out_.data());
    forward_ = fftw_plan_dft_1d(M_, in, out, FFTW_FORWARD, FFTW_ESTIMATE);
    backward_ = fftw_plan_dft_1d(M_, in, out, FFTW_BACKWARD, FFTW_ESTIMATE);
}

CollocationGrid::~CollocationGrid() {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    fftw_destroy_plan(forward_);
    fftw_destroy_plan(backward_);
}

double CollocationGrid::node(int m) const { return kTwoPi * m / M_; }

void CollocationGrid::to_grid(const ModeState& state, std::vector<Complex>& u) const {
    if (state.N != N_) throw std::invalid_argument("to_grid: mode cutoff mismatch");
    std::fill(buf_in_.begin(), buf_in_.end(), Complex{0.0, 0.0});
    for (int k = -N_; k <= N_; ++k)
        buf_in_[static_cast<std::size_t>((k + M_) % M_)] = state.mode(k);
    fftw_execute(backward_);
    u.assign(buf_out_.begin(), buf_out_.end());
}

void CollocationGrid::to_modes(const std::vector<Complex>& u, ModeState& state) const {
    if (static_cast<int>(u.size()) != M_)
        throw std::invalid_argument("to_modes: grid size mismatch");
    if (state.N != N_) throw std::invalid_argument("to_modes: mode cutoff mismatch");
    std::copy(u.begin(), u.end(), buf_in_.begin());
    fftw_execute(forward_);
    const double inv_m = 1.0 / M_;
    for (int k = -N_; k <= N_; ++k)
        state.mode(k) = buf_out_[static_cast<std::size_t>((k + M_) % M_)] * inv_m;
}

double CollocationGrid::integrate(const std::vector<double>& values) const {
    if (static_cast<int>(values.size()) != M_)
        throw std::invalid_argument("integrate: grid size mismatch");
    double sum = 0.0;
    for (double v : values) sum += v;
    return kTwoPi * sum / M_;
}

GalerkinSystem::GalerkinSystem(int n_modes, double s, NonlinearitySpec f)
    : N_(n_modes), s_(s), f_(std::move(f)), grid_(n_modes, f_.degree()) {
    if (s <= 0.5) throw std::domain_error("GalerkinSystem: s must be > 1/2");
    omega_.resize(static_cast<std::size_t>(N_) + 1);
    omega_[0] = 0.0;
    for (int j = 1; j <= N_; ++j)
        omega_[static_cast<std::size_t>(j)] = std::pow(static_cast<double>(j) * j, s);
}

double GalerkinSystem::hamiltonian(const ModeState& state) const {
    double h0 = 0.0;
    for (int k = -N_; k <= N_; ++k) h0 += omega(k) * std::norm(state.mode(k));
    if (f_.is_zero()) return h0;

    grid_.to_grid(state, u_);
    // |ψ(x)|² = |u|²/(2π) under ψ = (2π)^{-1/2} Σ ξ e^{ikx}
    std::vector<double> integrand(u_.size());
    for (std::size_t m = 0; m < u_.size(); ++m)
        integrand[m] = f_.antiderivative(std::norm(u_[m]) / kTwoPi);
    return h0 + grid_.integrate(integrand);
}

void GalerkinSystem::vector_field(const ModeState& state, std::vector<Complex>& dxi) const {
    dxi.assign(static_cast<std::size_t>(state.size()), Complex{0.0, 0.0});
    ModeState nonlin(N_);
    if (!f_.is_zero()) {
        grid_.to_grid(state, u_);
        w_.resize(u_.size());
        for (std::size_t m = 0; m < u_.size(); ++m)
            w_[m] = f_.f(std::norm(u_[m]) / kTwoPi) * u_[m];
        grid_.to_modes(w_, nonlin);
    }
    const Complex minus_i{0.0, -1.0};
    for (int k = -N_; k <= N_; ++k)
        dxi[static_cast<std::size_t>(k + N_)] =
            minus_i * (omega(k) * state.mode(k) + nonlin.mode(k));
}

double gauge_invariant(const ModeState& state) {
    double sum = 0.0;
    for (const Complex& xi : state.xi) sum += std::norm(xi);
    return sum;
}

std::vector<double> actions(const ModeState& state) {
    std::vector<double> result(static_cast<std::size_t>(state.N) + 1);
    result[0] = std::norm(state.mode(0));
    for (int j = 1; j <= state.N; ++j)
        result[static_cast<std::size_t>(j)] =
            std::norm(state.mode(j)) + std::norm(state.mode(-j));
    return result;
}

double sobolev_norm(const ModeState& state, double r) {
    if (r < 0.0) throw std::invalid_argument("sobolev_norm: r must be >= 0");
    double sum = 0.0;
    for (int k = -state.N; k <= state.N; ++k) {
        const double lambda = static_cast<double>(k) * k;
        sum += sobolev_weight(lambda, r) * std::norm(state.mode(k));
    }
    return std::sqrt(sum);
}

double poisson_bracket_numeric(const Observable& F, const Observable& G,
                               const ModeState& state, double step) {
    if (step <= 0.0) throw std::invalid_argument("poisson_bracket_numeric: step must be > 0");

    ModeState probe = state;
    const auto gradient = [&](const Observable& fn, int k) {
        const Complex saved = probe.mode(k);
        probe.mode(k) = saved + step;
        const double f_re_p = fn(probe);
        probe.mode(k) = saved - step;
        const double f_re_m = fn(probe);
        probe.mode(k) = saved + Complex{0.0, step};
        const double f_im_p = fn(probe);
        probe.mode(k) = saved - Complex{0.0, step};
        const double f_im_m = fn(probe);
        probe.mode(k) = saved;
        const double d_re = (f_re_p - f_re_m) / (2.0 * step);
        const double d_im = (f_im_p - f_im_m) / (2.0 * step);
        // Wirtinger: ∂/∂ξ = (∂_re - i ∂_im)/2, ∂/∂η = (∂_re + i ∂_im)/2
        return std::pair<Complex, Complex>{Complex{d_re, -d_im} * 0.5,
                                           Complex{d_re, d_im} * 0.5};
    };

    Complex bracket{0.0, 0.0};
    for (int k = -state.N; k <= state.N; ++k) {
        const auto [dF_dxi, dF_deta] = gradient(F, k);
        const auto [dG_dxi, dG_deta] = gradient(G, k);
        bracket += Complex{0.0, 1.0} * (dF_deta * dG_dxi - dF_dxi * dG_deta);
    }
    if (!std::isfinite(bracket.real()) || !std::isfinite(bracket.imag()))
        throw std::runtime_error("poisson_bracket_numeric: non-finite intermediate value");
    return bracket.real();
}

}  // namespace fnls
