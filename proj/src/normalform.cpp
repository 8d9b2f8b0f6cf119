#include "fnls/normalform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fnls {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPruneRel = 1e-14;

}  // namespace

void PolyHamiltonian::add(const MonomialKey& key, Complex coeff) {
    if (coeff == Complex{0.0, 0.0}) return;
    const auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == Complex{0.0, 0.0}) terms_.erase(it);
    }
}

int PolyHamiltonian::min_degree() const {
    int deg = 0;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (first || key.degree() < deg) deg = key.degree();
        first = false;
    }
    return deg;
}

int PolyHamiltonian::max_degree() const {
    int deg = 0;
    for (const auto& [key, c] : terms_) deg = std::max(deg, key.degree());
    return deg;
}

double PolyHamiltonian::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [key, c] : terms_) m = std::max(m, std::abs(c));
    return m;
}

PolyHamiltonian PolyHamiltonian::homogeneous_part(int degree) const {
    PolyHamiltonian part;
    for (const auto& [key, c] : terms_)
        if (key.degree() == degree) part.terms_.emplace(key, c);
    return part;
}

PolyHamiltonian PolyHamiltonian::truncated(int max_deg) const {
    PolyHamiltonian part;
    for (const auto& [key, c] : terms_)
        if (key.degree() <= max_deg) part.terms_.emplace(key, c);
    return part;
}

void PolyHamiltonian::prune(double rel_tol) {
    std::map<int, double> degree_max;
    for (const auto& [key, c] : terms_) {
        double& m = degree_max[key.degree()];
        m = std::max(m, std::abs(c));
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) < rel_tol * degree_max[it->first.degree()])
            it = terms_.erase(it);
        else
            ++it;
    }
}

PolyHamiltonian& PolyHamiltonian::operator+=(const PolyHamiltonian& other) {
    for (const auto& [key, c] : other.terms_) add(key, c);
    return *this;
}

PolyHamiltonian& PolyHamiltonian::operator-=(const PolyHamiltonian& other) {
    for (const auto& [key, c] : other.terms_) add(key, -c);
    return *this;
}

PolyHamiltonian& PolyHamiltonian::operator*=(Complex scalar) {
    if (scalar == Complex{0.0, 0.0}) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, c] : terms_) c *= scalar;
    return *this;
}

Complex PolyHamiltonian::evaluate(const ModeState& state) const {
    const auto power = [](Complex base, int exp) {
        Complex r{1.0, 0.0};
        for (int i = 0; i < exp; ++i) r *= base;
        return r;
    };
    Complex total{0.0, 0.0};
    for (const auto& [key, c] : terms_) {
        Complex value = c;
        for (const auto& [mode, exp] : key.J) value *= power(state.mode(mode), exp);
        for (const auto& [mode, exp] : key.L)
            value *= power(std::conj(state.mode(mode)), exp);
        total += value;
    }
    return total;
}

bool PolyHamiltonian::is_real_symmetric(double tol) const {
    for (const auto& [key, c] : terms_) {
        const auto it = terms_.find({key.L, key.J});
        const Complex mirror = it == terms_.end() ? Complex{0.0, 0.0} : it->second;
        if (std::abs(c - std::conj(mirror)) > tol) return false;
    }
    return true;
}

PolyHamiltonian operator+(PolyHamiltonian a, const PolyHamiltonian& b) { return a += b; }
PolyHamiltonian operator-(PolyHamiltonian a, const PolyHamiltonian& b) { return a -= b; }
PolyHamiltonian operator*(Complex scalar, PolyHamiltonian p) { return p *= scalar; }

PolyHamiltonian poisson_bracket(const PolyHamiltonian& F, const PolyHamiltonian& G) {
    PolyHamiltonian out;
    const Complex i_unit{0.0, 1.0};

    // product of (f minus one η_m) and (g minus one ξ_m), or vice versa
    const auto emit = [&out](const MonomialKey& fk, const MonomialKey& gk, int m,
                             bool f_eta_side, Complex coeff) {
        MonomialKey prod{fk.J, fk.L};
        for (const auto& [mm, e] : gk.J) prod.J.add(mm, e);
        for (const auto& [mm, e] : gk.L) prod.L.add(mm, e);
        if (f_eta_side) {
            prod.L.add(m, -1);  // ∂F/∂η_m
            prod.J.add(m, -1);  // ∂G/∂ξ_m
        } else {
            prod.J.add(m, -1);  // ∂F/∂ξ_m
            prod.L.add(m, -1);  // ∂G/∂η_m
        }
        out.add(prod, coeff);
    };

    for (const auto& [fk, fc] : F.terms()) {
        for (const auto& [gk, gc] : G.terms()) {
            const Complex fg = fc * gc;
            // i ∂F/∂η_m ∂G/∂ξ_m
            for (const auto& [m, le] : fk.L) {
                const int je = gk.J.get(m);
                if (je != 0)
                    emit(fk, gk, m, true, i_unit * fg * static_cast<double>(le * je));
            }
            // -i ∂F/∂ξ_m ∂G/∂η_m
            for (const auto& [m, je] : fk.J) {
                const int le = gk.L.get(m);
                if (le != 0)
                    emit(fk, gk, m, false, -i_unit * fg * static_cast<double>(je * le));
            }
        }
    }
    out.prune(kPruneRel);
    return out;
}

PolyHamiltonian h0_polynomial(const FrequencyTable& freqs, int n_modes) {
    PolyHamiltonian h0;
    for (int k = -n_modes; k <= n_modes; ++k) {
        const double omega = freqs.omega(std::abs(k));
        if (omega == 0.0) continue;
        MultiIndex J, L;
        J.set(k, 1);
        L.set(k, 1);
        h0.add(J, L, Complex{omega, 0.0});
    }
    return h0;
}

PolyHamiltonian action_polynomial(int level) {
    if (level < 0) throw std::invalid_argument("action_polynomial: level must be >= 0");
    PolyHamiltonian p;
    MultiIndex J, L;
    J.set(level, 1);
    L.set(level, 1);
    p.add(J, L, Complex{1.0, 0.0});
    if (level > 0) {
        MultiIndex Jm, Lm;
        Jm.set(-level, 1);
        Lm.set(-level, 1);
        p.add(Jm, Lm, Complex{1.0, 0.0});
    }
    return p;
}

namespace {

// Multisets of `size` modes drawn from [-n_modes, n_modes], nondecreasing,
// visited in lexicographic order together with the multinomial count of
// their orderings and the momentum sum.
struct ModeMultiset {
    MultiIndex exponents;
    double multinomial;
    int momentum;
};

std::int64_t factorial(int n) {
    std::int64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

void collect_multisets(int n_modes, int size, int from, MultiIndex& current,
                       std::vector<ModeMultiset>& out) {
    if (size == 0) {
        std::int64_t orderings = 1;
        int total = 0;
        int momentum = 0;
        for (const auto& [mode, exp] : current) {
            total += exp;
            orderings *= factorial(exp);
            momentum += mode * exp;
        }
        out.push_back({current, static_cast<double>(factorial(total) / orderings),
                       momentum});
        return;
    }
    for (int mode = from; mode <= n_modes; ++mode) {
        current.add(mode, 1);
        collect_multisets(n_modes, size - 1, mode, current, out);
        current.add(mode, -1);
    }
}

std::vector<ModeMultiset> mode_multisets(int n_modes, int size) {
    std::vector<ModeMultiset> out;
    MultiIndex current;
    collect_multisets(n_modes, size, -n_modes, current, out);
    return out;
}

}  // namespace

PolyHamiltonian expand_hp(const NonlinearitySpec& f, int n_modes, int max_degree) {
    if (max_degree < 4) throw std::invalid_argument("expand_hp: max_degree must be >= 4");

    PolyHamiltonian hp;
    for (int m = 1; m <= f.degree(); ++m) {
        const double a_m = f.taylor[static_cast<std::size_t>(m - 1)];
        if (a_m == 0.0) continue;
        const int q = m + 1;  // ξ- and η-degree of this contribution
        if (2 * q > max_degree) continue;

        // ∫ (ψψ̄)^q dx picks the momentum-conserving tuples; each canonical
        // (J, L) collects its orderings through the multinomial counts.
        const double prefactor = a_m / (q * std::pow(kTwoPi, q - 1));
        const auto multisets = mode_multisets(n_modes, q);
        for (const auto& jset : multisets) {
            for (const auto& lset : multisets) {
                if (jset.momentum != lset.momentum) continue;
                hp.add(jset.exponents, lset.exponents,
                       Complex{prefactor * jset.multinomial * lset.multinomial, 0.0});
            }
        }
    }
    return hp;
}

double omega_divisor(const FrequencyTable& freqs, const MultiIndex& J,
                     const MultiIndex& L) {
    std::vector<double> terms;
    for (const auto& [mode, exp] : J) {
        if (std::abs(mode) > freqs.max_level())
            throw std::out_of_range("omega_divisor: mode outside table cutoff");
        terms.push_back(freqs.omega(std::abs(mode)) * exp);
    }
    for (const auto& [mode, exp] : L) {
        if (std::abs(mode) > freqs.max_level())
            throw std::out_of_range("omega_divisor: mode outside table cutoff");
        terms.push_back(-freqs.omega(std::abs(mode)) * exp);
    }
    std::sort(terms.begin(), terms.end(),
              [](double a, double b) { return std::abs(a) < std::abs(b); });
    double sum = 0.0;
    for (double t : terms) sum += t;
    return sum;
}

HomologicalSplit homological_solve(const FrequencyTable& freqs, const PolyHamiltonian& P,
                                   double threshold) {
    if (threshold <= 0.0)
        throw std::invalid_argument("homological_solve: threshold must be > 0");
    if (!P.empty() && P.min_degree() != P.max_degree())
        throw std::invalid_argument("homological_solve: P must be homogeneous");

    HomologicalSplit split;
    const Complex i_unit{0.0, 1.0};
    for (const auto& [key, coeff] : P.terms()) {
        const double omega = omega_divisor(freqs, key.J, key.L);
        if (std::abs(omega) <= threshold)
            split.z_part.add(key, coeff);
        else
            split.chi.add(key, coeff / (i_unit * omega));
    }
    return split;
}

NormalFormResult birkhoff_normal_form(const FrequencyTable& freqs,
                                      const PolyHamiltonian& Hp, int K,
                                      double threshold, int remainder_window,
                                      std::size_t term_cap) {
    if (K < 1) throw std::invalid_argument("birkhoff_normal_form: K must be >= 1");
    if (!Hp.empty() && Hp.min_degree() < 3)
        throw std::invalid_argument("birkhoff_normal_form: Hp must vanish to order 3");

    const int normal_degree = K + 2;
    const int tracked_degree = normal_degree + std::max(0, remainder_window);

    // mode cutoff implied by Hp's support
    int n_modes = 0;
    for (const auto& [key, c] : Hp.terms()) {
        for (const auto& [mode, e] : key.J) n_modes = std::max(n_modes, std::abs(mode));
        for (const auto& [mode, e] : key.L) n_modes = std::max(n_modes, std::abs(mode));
    }

    const PolyHamiltonian h0 = h0_polynomial(freqs, n_modes);
    PolyHamiltonian current = h0 + Hp.truncated(tracked_degree);

    NormalFormResult result;
    for (int degree = 3; degree <= normal_degree; ++degree) {
        const PolyHamiltonian P = current.homogeneous_part(degree);
        const auto split = homological_solve(freqs, P, threshold);
        result.generators.push_back(split.chi);
        result.Z += split.z_part;

        // residual of {H_0, χ} + Z - P, coefficient-wise against ‖P‖
        PolyHamiltonian residual = poisson_bracket(h0, split.chi);
        residual += split.z_part;
        residual -= P;
        const double scale = std::max(P.max_abs_coeff(), 1e-300);
        result.residuals.push_back(residual.max_abs_coeff() / scale);

        if (split.chi.empty()) continue;

        // exp(ad_χ): H ← Σ_n ad_χ^n H / n!, finite after truncation since
        // ad_χ raises degree by degree-2 each application
        PolyHamiltonian transformed = current;
        PolyHamiltonian term = current;
        const int degree_gain = degree - 2;
        const int max_applications =
            degree_gain > 0 ? (tracked_degree - 2) / degree_gain + 1 : tracked_degree;
        for (int n = 1; n <= max_applications; ++n) {
            term = poisson_bracket(split.chi, term);
            term = term.truncated(tracked_degree);
            if (term.empty()) break;
            term *= Complex{1.0 / n, 0.0};
            transformed += term;
            if (transformed.size() > term_cap)
                throw std::runtime_error(
                    "birkhoff_normal_form: term cap exceeded; reduce the mode cutoff N "
                    "or the order K");
        }
        transformed.prune(kPruneRel);
        current = std::move(transformed);
    }

    for (int degree = normal_degree + 1; degree <= tracked_degree; ++degree)
        result.remainder += current.homogeneous_part(degree);
    return result;
}

MonomialReport verify_gauge_rule(const PolyHamiltonian& P) {
    MonomialReport report;
    for (const auto& [key, c] : P.terms()) {
        if (key.L.value_sum() - key.J.value_sum() != 0) {
            report.violations.push_back(key);
            report.max_abs = std::max(report.max_abs, std::abs(c));
        }
    }
    return report;
}

MonomialReport verify_level_balance(const PolyHamiltonian& P) {
    MonomialReport report;
    for (const auto& [key, c] : P.terms()) {
        MultiIndex per_level;
        for (const auto& [mode, e] : key.L) per_level.add(std::abs(mode), e);
        for (const auto& [mode, e] : key.J) per_level.add(std::abs(mode), -e);
        if (!per_level.empty()) {
            report.violations.push_back(key);
            report.max_abs = std::max(report.max_abs, std::abs(c));
        }
    }
    return report;
}

MonomialReport verify_action_commutation(const PolyHamiltonian& Z, int level,
                                         const FrequencyTable& freqs) {
    (void)freqs;  // level actions need no frequency data on T^1
    constexpr double kTol = 1e-12;
    const PolyHamiltonian bracket = poisson_bracket(Z, action_polynomial(level));
    MonomialReport report;
    for (const auto& [key, c] : bracket.terms()) {
        if (std::abs(c) > kTol) {
            report.violations.push_back(key);
            report.max_abs = std::max(report.max_abs, std::abs(c));
        }
    }
    return report;
}

}  // namespace fnls
