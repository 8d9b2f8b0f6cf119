#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fnls/integrator.hpp"
#include "fnls/normalform.hpp"

using namespace fnls;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const NonlinearitySpec kCubic{{1.0}};

PolyHamiltonian monomial(std::initializer_list<std::pair<const int, int>> J,
                         std::initializer_list<std::pair<const int, int>> L,
                         Complex coeff = {1.0, 0.0}) {
    PolyHamiltonian p;
    p.add(MultiIndex(J), MultiIndex(L), coeff);
    return p;
}

// random polynomial over modes -2..2 with term degrees in [2, 4]
PolyHamiltonian random_poly(std::mt19937_64& rng, int n_terms, bool gauge_invariant) {
    const auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    const auto rand_exponents = [&](int degree) {
        MultiIndex m;
        for (int i = 0; i < degree; ++i)
            m.add(static_cast<int>(rng() % 5) - 2, 1);
        return m;
    };
    PolyHamiltonian p;
    for (int t = 0; t < n_terms; ++t) {
        const int deg_j = 1 + static_cast<int>(rng() % 2);
        const int deg_l = gauge_invariant ? deg_j : 1 + static_cast<int>(rng() % 2);
        p.add(rand_exponents(deg_j), rand_exponents(deg_l),
              Complex{2.0 * uniform() - 1.0, 2.0 * uniform() - 1.0});
    }
    return p;
}

double max_coeff(const PolyHamiltonian& p) { return p.max_abs_coeff(); }

}  // namespace

TEST_CASE("bracket of an action with its own mode: {xi_m eta_m, xi_m} = i xi_m") {
    for (int m : {-1, 0, 2}) {
        const auto bracket = poisson_bracket(monomial({{m, 1}}, {{m, 1}}), monomial({{m, 1}}, {}));
        REQUIRE(bracket.size() == 1);
        const auto& [key, coeff] = *bracket.terms().begin();
        CHECK(key.J.get(m) == 1);
        CHECK(key.L.empty());
        CHECK(std::abs(coeff - Complex{0.0, 1.0}) <= 1e-15);
    }
}

TEST_CASE("bracket antisymmetry and bilinearity") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 10; ++trial) {
        const PolyHamiltonian F = random_poly(rng, 3, false);
        const PolyHamiltonian G = random_poly(rng, 3, false);
        const PolyHamiltonian H = random_poly(rng, 2, false);

        CHECK(poisson_bracket(F, F).empty());

        PolyHamiltonian anti = poisson_bracket(F, G) + poisson_bracket(G, F);
        CHECK(max_coeff(anti) <= 1e-13);

        // {F, aG + H} = a{F,G} + {F,H}
        const Complex a{0.7, -1.3};
        PolyHamiltonian lhs = poisson_bracket(F, a * G + H);
        PolyHamiltonian rhs = a * poisson_bracket(F, G) + poisson_bracket(F, H);
        CHECK(max_coeff(lhs - rhs) <= 1e-12);
    }
}

TEST_CASE("bracket with H0 scales a monomial by i Omega") {
    const FrequencyTable freqs(torus(1), 1.0, 7);
    const PolyHamiltonian h0 = h0_polynomial(freqs, 7);

    const MultiIndex J{{1, 1}, {7, 1}};
    const MultiIndex L{{5, 2}};
    PolyHamiltonian m = monomial({{1, 1}, {7, 1}}, {{5, 2}}, Complex{0.3, 0.1});
    const PolyHamiltonian bracket = poisson_bracket(h0, m);
    // Ω = ω_1 + ω_7 - 2ω_5 = 1 + 49 - 50 = 0: the monomial is resonant
    CHECK(max_coeff(bracket) <= 1e-14);

    PolyHamiltonian m2 = monomial({{1, 1}, {-1, 1}}, {{0, 2}}, Complex{1.0, 0.0});
    const PolyHamiltonian b2 = poisson_bracket(h0, m2);
    REQUIRE(b2.size() == 1);
    // Ω = ω_1 + ω_{-1} - 2ω_0 = 2, so {H0, m} = 2i m
    CHECK(std::abs(b2.terms().begin()->second - Complex{0.0, 2.0}) <= 1e-14);
}

TEST_CASE("jacobi identity on random triples") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 6; ++trial) {
        const PolyHamiltonian F = random_poly(rng, 2, false);
        const PolyHamiltonian G = random_poly(rng, 2, false);
        const PolyHamiltonian H = random_poly(rng, 2, false);
        PolyHamiltonian total = poisson_bracket(F, poisson_bracket(G, H));
        total += poisson_bracket(G, poisson_bracket(H, F));
        total += poisson_bracket(H, poisson_bracket(F, G));
        CHECK(max_coeff(total) <= 1e-10);
    }
}

TEST_CASE("bracket preserves hermitian coefficient symmetry") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 8; ++trial) {
        PolyHamiltonian F, G;
        for (const PolyHamiltonian& half :
             {random_poly(rng, 2, false), random_poly(rng, 2, false)}) {
            PolyHamiltonian& target = F.empty() ? F : G;
            for (const auto& [key, c] : half.terms()) {
                target.add(key, c);
                target.add({key.L, key.J}, std::conj(c));
            }
        }
        REQUIRE(F.is_real_symmetric(1e-13));
        REQUIRE(G.is_real_symmetric(1e-13));
        CHECK(poisson_bracket(F, G).is_real_symmetric(1e-12));
    }
}

TEST_CASE("gauge rule survives brackets of gauge-invariant polynomials") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const PolyHamiltonian F = random_poly(rng, 3, true);
        const PolyHamiltonian G = random_poly(rng, 3, true);
        REQUIRE(verify_gauge_rule(F).pass());
        REQUIRE(verify_gauge_rule(G).pass());
        CHECK(verify_gauge_rule(poisson_bracket(F, G)).pass());
    }
}

TEST_CASE("expand_hp: empty for f=0, constant-field quartic for N=0") {
    CHECK(expand_hp(NonlinearitySpec{}, 3, 6).empty());

    const PolyHamiltonian hp = expand_hp(kCubic, 0, 4);
    REQUIRE(hp.size() == 1);
    const auto& [key, coeff] = *hp.terms().begin();
    CHECK(key.J.get(0) == 2);
    CHECK(key.L.get(0) == 2);
    CHECK(std::abs(coeff - Complex{1.0 / (2.0 * kTwoPi), 0.0}) <= 1e-15);
}

TEST_CASE("expand_hp conserves momentum and the gauge rule by construction") {
    const PolyHamiltonian hp = expand_hp(NonlinearitySpec{{1.0, 0.5}}, 2, 6);
    CHECK(verify_gauge_rule(hp).pass());
    for (const auto& [key, c] : hp.terms()) {
        int momentum = 0;
        for (const auto& [mode, e] : key.J) momentum += mode * e;
        for (const auto& [mode, e] : key.L) momentum -= mode * e;
        CHECK(momentum == 0);
    }
}

TEST_CASE("expand_hp evaluates to the grid-quadrature H_p on random states") {
    for (const NonlinearitySpec& f :
         {NonlinearitySpec{{1.0}}, NonlinearitySpec{{0.4, -0.7}}}) {
        const int n_modes = 2;
        const GalerkinSystem sys(n_modes, 1.0, f);
        const PolyHamiltonian hp = expand_hp(f, n_modes, 2 * (f.degree() + 1));
        std::mt19937_64 rng(123);
        const auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
        for (int trial = 0; trial < 5; ++trial) {
            ModeState state(n_modes);
            for (int k = -n_modes; k <= n_modes; ++k)
                state.mode(k) = std::polar(0.2 + 0.8 * uniform(), kTwoPi * uniform());
            double h0 = 0.0;
            for (int k = -n_modes; k <= n_modes; ++k)
                h0 += sys.omega(k) * std::norm(state.mode(k));
            const double hp_grid = sys.hamiltonian(state) - h0;
            const Complex hp_poly = hp.evaluate(state);
            CHECK(std::abs(hp_poly.imag()) <= 1e-12);
            CHECK(hp_poly.real() == doctest::Approx(hp_grid).epsilon(1e-12));
        }
    }
}

TEST_CASE("omega divisor: action monomials, the 1-5-7 resonance, the zero mode") {
    const FrequencyTable freqs(torus(1), 1.0, 7);
    const MultiIndex J1{{3, 1}, {-2, 2}};
    CHECK(omega_divisor(freqs, J1, J1) == 0.0);

    CHECK(omega_divisor(freqs, MultiIndex{{1, 1}, {7, 1}}, MultiIndex{{5, 2}}) == 0.0);
    CHECK(omega_divisor(freqs, MultiIndex{{1, 1}, {-1, 1}}, MultiIndex{{0, 2}}) == 2.0);
    CHECK_THROWS_AS(omega_divisor(freqs, MultiIndex{{9, 1}}, MultiIndex{}),
                    std::out_of_range);
}

TEST_CASE("homological solve: resonant terms pass through, the rest divide by i Omega") {
    const FrequencyTable freqs(torus(1), 1.0, 3);

    PolyHamiltonian action_term = monomial({{1, 1}, {2, 1}}, {{1, 1}, {2, 1}});
    auto split = homological_solve(freqs, action_term, 1e-10);
    CHECK(split.chi.empty());
    CHECK(max_coeff(split.z_part - action_term) == 0.0);

    const Complex p{0.6, -0.2};
    PolyHamiltonian nonres = monomial({{1, 1}, {-1, 1}}, {{0, 2}}, p);
    split = homological_solve(freqs, nonres, 1e-10);
    CHECK(split.z_part.empty());
    REQUIRE(split.chi.size() == 1);
    CHECK(std::abs(split.chi.terms().begin()->second) ==
          doctest::Approx(std::abs(p) / 2.0).epsilon(1e-14));

    // the defining identity {H0, chi} + Z = P, coefficient-wise
    const PolyHamiltonian h0 = h0_polynomial(freqs, 3);
    PolyHamiltonian residual = poisson_bracket(h0, split.chi);
    residual += split.z_part;
    residual -= nonres;
    CHECK(max_coeff(residual) <= 1e-12 * max_coeff(nonres));

    CHECK_THROWS_AS(homological_solve(freqs, action_term + nonres + h0, 1e-10),
                    std::invalid_argument);  // not homogeneous
}

TEST_CASE("birkhoff normal form: trivial for Hp = 0") {
    const FrequencyTable freqs(torus(1), 1.0, 2);
    const auto nf = birkhoff_normal_form(freqs, PolyHamiltonian{}, 2, 1e-10);
    CHECK(nf.Z.empty());
    CHECK(nf.remainder.empty());
}

TEST_CASE("birkhoff normal form of the cubic system: structure at N=1 and N=2") {
    for (int n_modes : {1, 2}) {
        const FrequencyTable freqs(torus(1), 1.0, std::max(1, n_modes));
        const PolyHamiltonian hp = expand_hp(kCubic, n_modes, 6);
        const auto nf = birkhoff_normal_form(freqs, hp, 2, 1e-10);

        CHECK(!nf.Z.empty());
        CHECK(nf.Z.max_degree() <= 4);
        CHECK(verify_gauge_rule(nf.Z).pass());
        CHECK(verify_level_balance(nf.Z).pass());
        for (const auto& [key, c] : nf.Z.terms()) CHECK(key.J.get(0) == key.L.get(0));
        for (int j = 0; j <= n_modes; ++j)
            CHECK(verify_action_commutation(nf.Z, j, freqs).pass());
        for (double r : nf.residuals) CHECK(r <= 1e-12);

        // every Z monomial is resonant, every generator monomial is not
        for (const auto& [key, c] : nf.Z.terms())
            CHECK(std::abs(omega_divisor(freqs, key.J, key.L)) <= 1e-10);
        for (const auto& chi : nf.generators)
            for (const auto& [key, c] : chi.terms())
                CHECK(std::abs(omega_divisor(freqs, key.J, key.L)) > 1e-10);
    }
}

TEST_CASE("birkhoff normal form rejects quadratic perturbations and tiny caps") {
    const FrequencyTable freqs(torus(1), 1.0, 1);
    PolyHamiltonian quadratic = monomial({{1, 1}}, {{1, 1}});
    CHECK_THROWS_AS(birkhoff_normal_form(freqs, quadratic, 2, 1e-10),
                    std::invalid_argument);

    const PolyHamiltonian hp = expand_hp(kCubic, 1, 6);
    CHECK_THROWS_AS(birkhoff_normal_form(freqs, hp, 2, 1e-10, 2, 3),
                    std::runtime_error);  // term cap
}

TEST_CASE("gauge rule verifier flags hand-built violators") {
    PolyHamiltonian bad = monomial({{1, 2}}, {{1, 1}});  // ξ_1² η_1
    const auto report = verify_gauge_rule(bad);
    REQUIRE(report.violations.size() == 1);
    CHECK_FALSE(report.pass());
    CHECK(verify_gauge_rule(expand_hp(kCubic, 2, 4)).pass());
}

TEST_CASE("action commutation verifier: action functions pass, transfers fail") {
    const FrequencyTable freqs(torus(1), 1.0, 2);
    PolyHamiltonian product;  // I_1 I_2 expanded over the four mode pairs
    for (int a : {1, -1})
        for (int b : {2, -2}) product.add(MultiIndex{{a, 1}, {b, 1}}, MultiIndex{{a, 1}, {b, 1}}, 1.0);
    for (int j = 0; j <= 2; ++j) CHECK(verify_action_commutation(product, j, freqs).pass());

    PolyHamiltonian transfer = monomial({{1, 1}}, {{2, 1}});  // ξ_1 η_2
    CHECK(verify_action_commutation(transfer, 0, freqs).pass());
    CHECK_FALSE(verify_action_commutation(transfer, 1, freqs).pass());
    CHECK_FALSE(verify_action_commutation(transfer, 2, freqs).pass());
}

TEST_CASE("level balance verifier distinguishes level moves from inside-level moves") {
    // ξ_2 η_{-2} moves within level 2: balanced; ξ_1 η_2 moves across levels
    CHECK(verify_level_balance(monomial({{2, 1}}, {{-2, 1}})).pass());
    CHECK_FALSE(verify_level_balance(monomial({{1, 1}}, {{2, 1}})).pass());
    CHECK_FALSE(verify_level_balance(monomial({{0, 1}}, {{1, 1}})).pass());
}

TEST_CASE("quartic normal form predicts the nonlinear frequency shift of mode 1") {
    // with only modes -1, 0, 1 and s = 1 every resonant quartic monomial is a
    // product of mode actions, so dθ_1/dt = -(ω_1 + ∂Z/∂ι_1) up to O(ε⁴)
    const int n_modes = 1;
    const FrequencyTable freqs(torus(1), 1.0, 1);
    const auto nf = birkhoff_normal_form(freqs, expand_hp(kCubic, n_modes, 6), 2, 1e-10);

    ModeState psi0(n_modes);
    psi0.mode(0) = 1.0e-3;
    psi0.mode(1) = Complex{0.6e-3, 0.4e-3};
    psi0.mode(-1) = Complex{-0.3e-3, 0.2e-3};

    // ∂Z/∂ι_1 from the action representation of Z
    const double i0 = std::norm(psi0.mode(0));
    const double i1 = std::norm(psi0.mode(1));
    const double im1 = std::norm(psi0.mode(-1));
    const auto mode_action = [&](int m) { return m == 0 ? i0 : (m == 1 ? i1 : im1); };
    double shift = 0.0;
    for (const auto& [key, c] : nf.Z.terms()) {
        REQUIRE(key.J == key.L);  // pure action monomial
        const int e1 = key.J.get(1);
        if (e1 == 0) continue;
        double value = c.real() * e1;
        for (const auto& [mode, e] : key.J)
            for (int i = 0; i < (mode == 1 ? e - 1 : e); ++i) value *= mode_action(mode);
        shift += value;
    }

    const GalerkinSystem sys(n_modes, 1.0, kCubic);
    const double T = 100.0;
    const double dt = 1e-3;
    ModeState state = psi0;
    for (int i = 0; i < 100000; ++i) state = strang_step(sys, std::move(state), dt);

    const Complex ratio = state.mode(1) * std::polar(1.0, sys.omega(1) * T) / psi0.mode(1);
    const double measured_shift = -std::arg(ratio) / T;
    CHECK(measured_shift == doctest::Approx(shift).epsilon(0.01));
}
