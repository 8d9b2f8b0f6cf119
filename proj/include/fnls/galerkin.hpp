// galerkin.hpp — finite-mode truncation of the fractional NLS on T^1 as a
// Hamiltonian system in the Fourier amplitudes ξ_k, k = -N..N.
//
// Convention: torus is [0, 2π) and ψ(x) = (2π)^{-1/2} Σ_k ξ_k e^{ikx}, so the
// L² mass is Γ = Σ_k |ξ_k|² with no 2π factors and the level actions are
// I_0 = |ξ_0|², I_j = |ξ_j|² + |ξ_{-j}|². The nonlinearity is polynomial,
// f(u) = Σ_{m=1}^p a_m u^m, and all pointwise products are evaluated on a
// collocation grid large enough to be exact for the polynomial degree, so the
// pseudo-spectral operations coincide with the Galerkin truncation.

#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <fftw3.h>

namespace fnls {

using Complex = std::complex<double>;

// f(u) = Σ_{m=1}^{p} taylor[m-1] u^m; no constant term, so f(0) = 0.
struct NonlinearitySpec {
    std::vector<double> taylor;

    int degree() const { return static_cast<int>(taylor.size()); }
    bool is_zero() const;

    double f(double u) const;
    // Antiderivative with F(0) = 0: F(u) = Σ a_m u^{m+1}/(m+1).
    double antiderivative(double u) const;
};

// Complex amplitudes over the retained modes k = -N..N.
struct ModeState {
    int N{0};
    double time{0.0};
    std::vector<Complex> xi;  // size 2N+1, entry k stored at index k+N

    ModeState() : xi(1) {}
    explicit ModeState(int n_modes);

    Complex& mode(int k) { return xi[static_cast<std::size_t>(k + N)]; }
    const Complex& mode(int k) const { return xi[static_cast<std::size_t>(k + N)]; }
    int size() const { return 2 * N + 1; }
};

// Uniform collocation grid with forward/backward transforms between the
// retained modes and grid values u_m = Σ_k ξ_k e^{ik x_m}, x_m = 2πm/M.
// Grid size M is the smallest power of two >= (p+1)(2N+1), which makes the
// quadrature and the mode extraction exact for integrands of polynomial
// degree <= 2(p+1) in (ψ, ψ̄).
//
// Owns FFTW plans and scratch buffers: confine each instance to one thread.
class CollocationGrid {
public:
    CollocationGrid(int n_modes, int poly_degree);
    ~CollocationGrid();

    CollocationGrid(const CollocationGrid&) = delete;
    CollocationGrid& operator=(const CollocationGrid&) = delete;

    int grid_size() const { return M_; }
    int n_modes() const { return N_; }
    double node(int m) const;

    // grid values of Σ_k ξ_k e^{ikx} at the M nodes
    void to_grid(const ModeState& state, std::vector<Complex>& u) const;
    // Fourier coefficients of a grid function, restricted to |k| <= N
    void to_modes(const std::vector<Complex>& u, ModeState& state) const;
    // (2π/M) Σ_m values[m]
    double integrate(const std::vector<double>& values) const;

private:
    int N_;
    int M_;
    fftw_plan forward_;
    fftw_plan backward_;
    mutable std::vector<Complex> buf_in_;
    mutable std::vector<Complex> buf_out_;
};

// The truncated system at fixed (N, s, f): Hamiltonian, vector field and
// cached frequencies ω_{|k|} = |k|^{2s}. Holds transform scratch space, so
// share across threads only with external synchronization.
class GalerkinSystem {
public:
    GalerkinSystem(int n_modes, double s, NonlinearitySpec f);

    int N() const { return N_; }
    double s() const { return s_; }
    const NonlinearitySpec& nonlinearity() const { return f_; }
    const CollocationGrid& grid() const { return grid_; }
    double omega(int k) const { return omega_[static_cast<std::size_t>(std::abs(k))]; }

    // H = Σ_k ω_{|k|} |ξ_k|² + ∫ F(|ψ|²) dx
    double hamiltonian(const ModeState& state) const;

    // dξ_k/dt = -i (ω_{|k|} ξ_k + [f(|ψ|²)ψ]^_k)
    void vector_field(const ModeState& state, std::vector<Complex>& dxi) const;

private:
    int N_;
    double s_;
    NonlinearitySpec f_;
    CollocationGrid grid_;
    std::vector<double> omega_;  // index |k| = 0..N
    mutable std::vector<Complex> u_;
    mutable std::vector<Complex> w_;
};

// Γ = Σ_k |ξ_k|²  (conserved by the flow; equals Σ_j I_j)
double gauge_invariant(const ModeState& state);

// I_0 = |ξ_0|², I_j = |ξ_j|² + |ξ_{-j}|² for j = 1..N
std::vector<double> actions(const ModeState& state);

// sqrt( Σ_k (1 + |k|^{2r}) |ξ_k|² )
double sobolev_norm(const ModeState& state, double r);

// i Σ_k [∂F/∂η_k ∂G/∂ξ_k - ∂F/∂ξ_k ∂G/∂η_k] via central differences in the
// real and imaginary parts of each mode (η = ξ̄ on the reality subspace).
using Observable = std::function<double(const ModeState&)>;
double poisson_bracket_numeric(const Observable& F, const Observable& G,
                               const ModeState& state, double step = 1e-6);

}  // namespace fnls
