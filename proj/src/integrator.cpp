#include "fnls/integrator.hpp"

#include <boost/numeric/odeint.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace fnls {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool all_finite(const ModeState& state) {
    for (const Complex& xi : state.xi)
        if (!std::isfinite(xi.real()) || !std::isfinite(xi.imag())) return false;
    return true;
}

// One splitting step with precomputed linear phases (dt is fixed in a run).
class SplitStepper {
public:
    SplitStepper(const GalerkinSystem& sys, double dt, SplitScheme scheme)
        : sys_(sys), dt_(dt), scheme_(scheme) {
        const double half = scheme == SplitScheme::Strang ? 0.5 * dt : dt;
        phase_half_.resize(static_cast<std::size_t>(2 * sys.N() + 1));
        for (int k = -sys.N(); k <= sys.N(); ++k)
            phase_half_[static_cast<std::size_t>(k + sys.N())] =
                std::polar(1.0, -sys.omega(k) * half);
    }

    void step(ModeState& state) {
        rotate_linear(state);
        nonlinear_kick(state);
        if (scheme_ == SplitScheme::Strang) rotate_linear(state);
        state.time += dt_;
    }

private:
    void rotate_linear(ModeState& state) const {
        for (std::size_t i = 0; i < state.xi.size(); ++i) state.xi[i] *= phase_half_[i];
    }

    void nonlinear_kick(ModeState& state) {
        if (sys_.nonlinearity().is_zero()) return;
        sys_.grid().to_grid(state, u_);
        for (Complex& v : u_)
            v *= std::polar(1.0, -sys_.nonlinearity().f(std::norm(v) / kTwoPi) * dt_);
        sys_.grid().to_modes(u_, state);
    }

    const GalerkinSystem& sys_;
    double dt_;
    SplitScheme scheme_;
    std::vector<Complex> phase_half_;
    std::vector<Complex> u_;
};

TrajectorySample sample_observables(const GalerkinSystem& sys, const ModeState& state,
                                    double r) {
    TrajectorySample s;
    s.t = state.time;
    s.gamma = gauge_invariant(state);
    s.h_total = sys.hamiltonian(state);
    s.sobolev_r = sobolev_norm(state, r);
    s.actions = actions(state);
    return s;
}

}  // namespace

void StepPlan::validate() const {
    if (dt <= 0.0) throw std::invalid_argument("StepPlan: dt must be > 0");
    if (observer_stride < 1) throw std::invalid_argument("StepPlan: observer_stride must be >= 1");
    if (t_end < 0.0) throw std::invalid_argument("StepPlan: t_end must be >= 0");
    if (blowup_factor <= 1.0) throw std::invalid_argument("StepPlan: blow-up guard must exceed 1");
    const double steps = t_end / dt;
    if (steps > static_cast<double>(max_steps))
        throw std::invalid_argument("StepPlan: t_end/dt exceeds the step budget");
}

ModeState linear_flow(const GalerkinSystem& sys, ModeState state, double dt) {
    for (int k = -state.N; k <= state.N; ++k)
        state.mode(k) *= std::polar(1.0, -sys.omega(k) * dt);
    return state;
}

ModeState nonlinear_flow(const GalerkinSystem& sys, ModeState state, double dt) {
    if (sys.nonlinearity().is_zero()) return state;
    std::vector<Complex> u;
    sys.grid().to_grid(state, u);
    for (Complex& v : u)
        v *= std::polar(1.0, -sys.nonlinearity().f(std::norm(v) / kTwoPi) * dt);
    sys.grid().to_modes(u, state);
    return state;
}

ModeState strang_step(const GalerkinSystem& sys, ModeState state, double dt) {
    state = linear_flow(sys, std::move(state), 0.5 * dt);
    state = nonlinear_flow(sys, std::move(state), dt);
    state = linear_flow(sys, std::move(state), 0.5 * dt);
    state.time += dt;
    return state;
}

ModeState lie_step(const GalerkinSystem& sys, ModeState state, double dt) {
    state = linear_flow(sys, std::move(state), dt);
    state = nonlinear_flow(sys, std::move(state), dt);
    state.time += dt;
    return state;
}

Trajectory evolve(const GalerkinSystem& sys, ModeState initial, const StepPlan& plan,
                  double r) {
    plan.validate();

    Trajectory traj;
    const double guard = plan.blowup_factor * std::max(sobolev_norm(initial, r), 1e-300);
    const std::int64_t n_steps = static_cast<std::int64_t>(std::llround(plan.t_end / plan.dt));

    SplitStepper stepper(sys, plan.dt, plan.scheme);
    traj.samples.push_back(sample_observables(sys, initial, r));
    ModeState state = std::move(initial);
    for (std::int64_t step = 1; step <= n_steps; ++step) {
        stepper.step(state);
        if (step % plan.observer_stride == 0 || step == n_steps) {
            if (!all_finite(state)) {
                traj.abort_reason = "non-finite state at t = " + std::to_string(state.time);
                break;
            }
            traj.samples.push_back(sample_observables(sys, state, r));
            if (traj.samples.back().sobolev_r > guard) {
                traj.abort_reason = "blow-up guard tripped at t = " + std::to_string(state.time);
                break;
            }
        }
    }
    traj.final_state = std::move(state);
    return traj;
}

std::optional<double> exit_time(const GalerkinSystem& sys, ModeState initial,
                                const StepPlan& plan, double r, double exit_norm) {
    plan.validate();
    if (exit_norm <= 0.0) throw std::invalid_argument("exit_time: exit norm must be > 0");

    if (sobolev_norm(initial, r) >= exit_norm) return initial.time;
    const std::int64_t n_steps = static_cast<std::int64_t>(std::llround(plan.t_end / plan.dt));

    SplitStepper stepper(sys, plan.dt, plan.scheme);
    ModeState state = std::move(initial);
    for (std::int64_t step = 1; step <= n_steps; ++step) {
        stepper.step(state);
        if (step % plan.observer_stride == 0 || step == n_steps) {
            if (!all_finite(state))
                throw std::runtime_error("exit_time: non-finite state at t = " +
                                         std::to_string(state.time));
            if (sobolev_norm(state, r) >= exit_norm) return state.time;
        }
    }
    return std::nullopt;
}

ModeState ode_oracle(const GalerkinSystem& sys, const ModeState& initial, double T,
                     double tol) {
    if (2 * initial.N + 1 > 16)
        throw std::invalid_argument("ode_oracle: guarded to 2N+1 <= 16 modes");
    if (tol < 1e-12 || tol > 1e-6)
        throw std::invalid_argument("ode_oracle: tol must lie in [1e-12, 1e-6]");

    namespace odeint = boost::numeric::odeint;
    using State = std::vector<Complex>;

    const auto rhs = [&](const State& xi, State& dxi, double /*t*/) {
        ModeState tmp(initial.N);
        tmp.xi = xi;
        sys.vector_field(tmp, dxi);
    };

    State xi = initial.xi;
    const double dt0 = T >= 0.0 ? std::min(1e-3, std::abs(T)) : -std::min(1e-3, std::abs(T));
    try {
        odeint::integrate_adaptive(
            odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(tol, tol), rhs, xi,
            initial.time, initial.time + T, dt0);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("ode_oracle: step-size control failed: ") +
                                 e.what());
    }

    ModeState result(initial.N);
    result.xi = std::move(xi);
    result.time = initial.time + T;
    return result;
}

ModeState random_initial_state(int n_modes, double r, double eps, std::uint64_t seed) {
    if (eps <= 0.0) throw std::invalid_argument("random_initial_state: eps must be > 0");
    ModeState state(n_modes);
    std::mt19937_64 rng(seed);
    // explicit bits-to-double conversion keeps phases platform-independent
    const auto uniform = [&rng]() {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    for (int k = -n_modes; k <= n_modes; ++k) {
        const double rho = std::pow(1.0 + std::abs(k), -r - 1.0);
        state.mode(k) = std::polar(rho, kTwoPi * uniform());
    }
    const double z = sobolev_norm(state, r);
    for (Complex& xi : state.xi) xi *= eps / z;
    return state;
}

}  // namespace fnls
