// normalform.hpp — sparse polynomial algebra in the mode amplitudes (ξ, η)
// with exact Poisson brackets, homological-equation solving, and truncated
// Lie-transform normalization of the mode Hamiltonian.
//
// Monomials are c · ξ^J η^L with exponent maps J, L over the signed torus
// modes; level bookkeeping aggregates a mode k to the level |k|. The bracket
// is {F;G} = i Σ_m [∂F/∂η_m ∂G/∂ξ_m - ∂F/∂ξ_m ∂G/∂η_m], so that
// {H_0, ξ^J η^L} = iΩ ξ^J η^L with Ω = Σ_m ω_{|m|}(J_m - L_m), and the
// homological equation {H_0, χ} + Z = P is solved monomial-wise by
// χ_{JL} = P_{JL} / (iΩ).

#pragma once

#include <complex>
#include <map>
#include <vector>

#include "fnls/galerkin.hpp"
#include "fnls/multi_index.hpp"
#include "fnls/spectrum.hpp"

namespace fnls {

struct MonomialKey {
    MultiIndex J;  // ξ exponents by mode
    MultiIndex L;  // η exponents by mode

    int degree() const { return J.l1_norm() + L.l1_norm(); }
    friend auto operator<=>(const MonomialKey&, const MonomialKey&) = default;
};

// Sparse sum of monomials, canonically keyed; zero coefficients never stored.
class PolyHamiltonian {
public:
    using TermMap = std::map<MonomialKey, Complex>;

    PolyHamiltonian() = default;

    void add(const MonomialKey& key, Complex coeff);
    void add(const MultiIndex& J, const MultiIndex& L, Complex coeff) { add({J, L}, coeff); }

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    int min_degree() const;  // 0 when empty
    int max_degree() const;
    double max_abs_coeff() const;

    PolyHamiltonian homogeneous_part(int degree) const;
    PolyHamiltonian truncated(int max_degree) const;

    // Drops terms below rel_tol × the largest coefficient of the same degree.
    void prune(double rel_tol = 1e-14);

    PolyHamiltonian& operator+=(const PolyHamiltonian& other);
    PolyHamiltonian& operator-=(const PolyHamiltonian& other);
    PolyHamiltonian& operator*=(Complex scalar);

    // Value at η = ξ̄ (the reality subspace); modes taken from the state.
    Complex evaluate(const ModeState& state) const;

    // Hermitian coefficient symmetry coeff(J,L) = conj(coeff(L,J)), i.e.
    // real-valuedness on the reality subspace.
    bool is_real_symmetric(double tol = 1e-12) const;

private:
    TermMap terms_;
};

PolyHamiltonian operator+(PolyHamiltonian a, const PolyHamiltonian& b);
PolyHamiltonian operator-(PolyHamiltonian a, const PolyHamiltonian& b);
PolyHamiltonian operator*(Complex scalar, PolyHamiltonian p);

// Exact symbolic bracket; output pruned at 1e-14 relative per degree.
PolyHamiltonian poisson_bracket(const PolyHamiltonian& F, const PolyHamiltonian& G);

// H_0 = Σ_{|k| <= n_modes} ω_{|k|} ξ_k η_k from the table's frequencies.
PolyHamiltonian h0_polynomial(const FrequencyTable& freqs, int n_modes);

// The level action I_j as a polynomial: ξ_0η_0 for j = 0, else
// ξ_jη_j + ξ_{-j}η_{-j}.
PolyHamiltonian action_polynomial(int level);

// Fourier-space expansion of ∫ F(|ψ|²) dx over modes |k| <= n_modes, exact
// up to max_degree. Every emitted monomial conserves momentum
// Σ k (J_k - L_k) = 0 and satisfies |J| = |L|.
PolyHamiltonian expand_hp(const NonlinearitySpec& f, int n_modes, int max_degree);

// Ω = Σ_m ω_{|m|} (J_m - L_m)
double omega_divisor(const FrequencyTable& freqs, const MultiIndex& J,
                     const MultiIndex& L);

struct HomologicalSplit {
    PolyHamiltonian chi;     // generator: monomials with |Ω| > threshold
    PolyHamiltonian z_part;  // resonant part: |Ω| <= threshold, kept verbatim
};

// Splits a homogeneous P so that {H_0, chi} + z_part = P.
HomologicalSplit homological_solve(const FrequencyTable& freqs, const PolyHamiltonian& P,
                                   double threshold);

struct NormalFormResult {
    PolyHamiltonian Z;                       // resonant part, degrees 3..K+2
    std::vector<PolyHamiltonian> generators; // χ per degree, same order
    PolyHamiltonian remainder;               // degrees K+3..tracked window
    std::vector<double> residuals;           // per-degree homological residual,
                                             // coefficient-wise, relative to ‖P‖
};

// Order-by-order normalization of H_0 + Hp through degree K+2, tracking a
// remainder window of extra degrees. Throws when the term count exceeds
// term_cap.
NormalFormResult birkhoff_normal_form(const FrequencyTable& freqs,
                                      const PolyHamiltonian& Hp, int K,
                                      double threshold, int remainder_window = 2,
                                      std::size_t term_cap = 1'000'000);

struct MonomialReport {
    std::vector<MonomialKey> violations;
    double max_abs{0.0};  // largest offending coefficient, when applicable
    bool pass() const { return violations.empty(); }
};

// Monomials violating Σ_modes (L_m - J_m) = 0.
MonomialReport verify_gauge_rule(const PolyHamiltonian& P);

// Monomials violating the per-level balance Σ_{|m|=j} (L_m - J_m) = 0 for
// j ≠ 0, or L_0 ≠ J_0 at the zero mode.
MonomialReport verify_level_balance(const PolyHamiltonian& P);

// Coefficients of {Z, I_level} exceeding 1e-12 (symbolic bracket).
MonomialReport verify_action_commutation(const PolyHamiltonian& Z, int level,
                                         const FrequencyTable& freqs);

}  // namespace fnls
