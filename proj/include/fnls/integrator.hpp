// integrator.hpp — long-time propagation of the truncated system by operator
// splitting with exactly-unitary substeps.
//
// The linear flow rotates each mode by e^{-iω_{|k|}dt} and the nonlinear flow
// rotates each grid value by e^{-i f(|ψ(x)|²) dt}; both preserve the L² mass
// on their side exactly, so Γ drift over long runs stays at rounding level.
// A high-order adaptive integrator of the full vector field serves as the
// reference solution for small systems.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fnls/galerkin.hpp"

namespace fnls {

enum class SplitScheme { Lie, Strang };

struct StepPlan {
    double dt{1e-2};
    SplitScheme scheme{SplitScheme::Strang};
    double t_end{1.0};
    int observer_stride{1};
    double blowup_factor{1e6};        // abort when ‖ψ‖_{H^r} exceeds this × initial
    std::int64_t max_steps{50'000'000};

    void validate() const;  // throws std::invalid_argument
};

struct TrajectorySample {
    double t{0.0};
    double gamma{0.0};
    double h_total{0.0};
    double sobolev_r{0.0};
    std::vector<double> actions;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    ModeState final_state;
    std::optional<std::string> abort_reason;
};

// Exact phase rotation ξ_k ← e^{-iω_{|k|}dt} ξ_k; |ξ_k| preserved per mode.
// Does not advance state.time (steps own the clock).
ModeState linear_flow(const GalerkinSystem& sys, ModeState state, double dt);

// Exact pointwise rotation ψ(x) ← e^{-i f(|ψ(x)|²) dt} ψ(x) on the grid,
// projected back to the retained modes. Does not advance state.time.
ModeState nonlinear_flow(const GalerkinSystem& sys, ModeState state, double dt);

// linear(dt/2) ∘ nonlinear(dt) ∘ linear(dt/2); advances time by dt.
ModeState strang_step(const GalerkinSystem& sys, ModeState state, double dt);

// linear(dt) ∘ nonlinear(dt); advances time by dt.
ModeState lie_step(const GalerkinSystem& sys, ModeState state, double dt);

// Fixed-step propagation with observables sampled every observer_stride
// steps. Aborts (partial trajectory, reason recorded) on non-finite values
// or when the H^r norm exceeds the blow-up guard.
Trajectory evolve(const GalerkinSystem& sys, ModeState initial, const StepPlan& plan,
                  double r);

// First sampled time with ‖ψ‖_{H^r} >= exit_norm, or nullopt if censored at
// t_end. Same stepping as evolve, without storing samples.
std::optional<double> exit_time(const GalerkinSystem& sys, ModeState initial,
                                const StepPlan& plan, double r, double exit_norm);

// Reference solution: adaptive Dormand–Prince integration of the full vector
// field with absolute and relative error control at tol. Guarded to small
// systems (2N+1 <= 16). Advances time by T (T may be negative).
ModeState ode_oracle(const GalerkinSystem& sys, const ModeState& initial, double T,
                     double tol);

// Random small datum: ξ_k = ε ρ_k e^{iφ_k} / Z with ρ_k = (1+|k|)^{-r-1},
// phases drawn from a seeded generator, Z normalizing ‖ψ‖_{H^r} to ε.
// Bit-reproducible for a fixed seed.
ModeState random_initial_state(int n_modes, double r, double eps, std::uint64_t seed);

}  // namespace fnls
