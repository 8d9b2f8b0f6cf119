#include "fnls/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fnls {

double ScanConfig::threshold() const { return gamma / std::pow(static_cast<double>(N), alpha); }

void ScanConfig::validate() const {
    if (K < 1) throw std::invalid_argument("ScanConfig: K must be >= 1");
    if (N < 1) throw std::invalid_argument("ScanConfig: N must be >= 1");
    if (j_max < N) throw std::invalid_argument("ScanConfig: j_max must be >= N");
    if (gamma <= 0.0) throw std::invalid_argument("ScanConfig: gamma must be > 0");
    if (s_grid.empty()) throw std::invalid_argument("ScanConfig: empty s grid");
    for (std::size_t i = 0; i < s_grid.size(); ++i) {
        if (s_grid[i] <= 0.5)
            throw std::invalid_argument("ScanConfig: s grid entries must be > 1/2");
        if (i > 0 && s_grid[i] <= s_grid[i - 1])
            throw std::invalid_argument("ScanConfig: s grid must be strictly increasing");
    }
}

double small_divisor(const FrequencyTable& table, const MultiIndex& L) {
    std::vector<double> terms;
    terms.reserve(L.support_size());
    for (const auto& [j, coeff] : L) {
        if (j == 0) continue;  // ω_0 = 0
        if (j < 0 || j > table.max_level())
            throw std::out_of_range("small_divisor: level " + std::to_string(j) +
                                    " exceeds table cutoff");
        terms.push_back(table.omega(j) * coeff);
    }
    std::sort(terms.begin(), terms.end(),
              [](double a, double b) { return std::abs(a) < std::abs(b); });
    double sum = 0.0;
    for (double t : terms) sum += t;
    return sum;
}

namespace {

// Distributes the remaining |L| budget over levels `level..j_max` in
// lexicographic order of the assignment; the tail budget caps Σ_{j>N}|L_j|.
// The last level consumes the budget exactly, so every leaf is a yield.
void enumerate_rec(int level, int j_max, int head_cutoff, int l1_left, int tail_left,
                   MultiIndex& current,
                   const std::function<void(const MultiIndex&)>& yield) {
    const int cap = level > head_cutoff ? std::min(l1_left, tail_left) : l1_left;
    if (level == j_max) {
        if (l1_left == 0) {
            yield(current);
        } else if (l1_left <= cap) {
            for (int v : {-l1_left, l1_left}) {
                current.set(level, v);
                yield(current);
            }
            current.set(level, 0);
        }
        return;
    }
    for (int v = -cap; v <= cap; ++v) {
        current.set(level, v);
        const int used = std::abs(v);
        enumerate_rec(level + 1, j_max, head_cutoff, l1_left - used,
                      level > head_cutoff ? tail_left - used : tail_left, current, yield);
    }
    current.set(level, 0);
}

}  // namespace

void enumerate_multi_indices(int K, int N, int j_max,
                             const std::function<void(const MultiIndex&)>& yield) {
    if (K < 1) throw std::invalid_argument("enumerate_multi_indices: K must be >= 1");
    if (N < 1 || j_max < N)
        throw std::invalid_argument("enumerate_multi_indices: need 1 <= N <= j_max");

    MultiIndex current;
    for (int l1 = 1; l1 <= K + 2; ++l1)
        enumerate_rec(1, j_max, N, l1, 2, current, yield);
}

KnrResult check_knr(double s, const ScanConfig& cfg, const Domain& domain) {
    cfg.validate();
    if (s <= 0.5) throw std::invalid_argument("check_knr: s must be > 1/2");

    const FrequencyTable table(domain, s, cfg.j_max);
    const double threshold = cfg.threshold();

    KnrResult result;
    result.pass = true;
    double worst = std::numeric_limits<double>::infinity();
    enumerate_multi_indices(cfg.K, cfg.N, cfg.j_max, [&](const MultiIndex& L) {
        const double value = small_divisor(table, L);
        if (std::abs(value) < worst) {
            worst = std::abs(value);
            result.worst = {L, s, value, threshold};
        }
        if (std::abs(value) < threshold) result.pass = false;
    });
    return result;
}

std::vector<ScanPoint> scan_s(const ScanConfig& cfg, const Domain& domain) {
    cfg.validate();
    std::vector<ScanPoint> points;
    points.reserve(cfg.s_grid.size());
    for (double s : cfg.s_grid) {
        const KnrResult r = check_knr(s, cfg, domain);
        points.push_back({s, std::abs(r.worst.value), r.worst.L});
    }
    return points;
}

namespace {

// Σ_j λ_j^s L_j over the support (level 0 contributes nothing).
double divisor_at(const MultiIndex& L, double s, const std::vector<double>& lambdas) {
    std::vector<double> terms;
    terms.reserve(L.support_size());
    std::size_t i = 0;
    for (const auto& [j, coeff] : L) {
        if (j != 0) terms.push_back(std::pow(lambdas[i], s) * coeff);
        ++i;
    }
    std::sort(terms.begin(), terms.end(),
              [](double a, double b) { return std::abs(a) < std::abs(b); });
    double sum = 0.0;
    for (double t : terms) sum += t;
    return sum;
}

// Bisects f (continuous, sign change on [a,b]) to a root bracket of width tol.
double bisect(const std::function<double(double)>& f, double a, double b, double fa,
              double tol) {
    while (b - a > tol) {
        const double mid = 0.5 * (a + b);
        const double fm = f(mid);
        if ((fa <= 0.0) == (fm <= 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

BadIntervalReport refine_bad_intervals(const MultiIndex& L, double s_lo, double s_hi,
                                       double threshold, const Domain& domain,
                                       double grid_step) {
    if (threshold <= 0.0)
        throw std::invalid_argument("refine_bad_intervals: threshold must be > 0");
    if (!(s_lo < s_hi)) throw std::invalid_argument("refine_bad_intervals: empty range");
    if (grid_step <= 0.0)
        throw std::invalid_argument("refine_bad_intervals: grid step must be > 0");

    std::vector<double> lambdas;
    for (const auto& [j, coeff] : L) lambdas.push_back(eigenvalue(domain, j));

    const auto g = [&](double s) { return divisor_at(L, s, lambdas); };
    // φ < 0 exactly on the sub-threshold set
    const auto phi = [&](double s) { return std::abs(g(s)) - threshold; };

    const int cells = std::max(1, static_cast<int>(std::ceil((s_hi - s_lo) / grid_step)));
    std::vector<double> points(cells + 1);
    for (int i = 0; i <= cells; ++i)
        points[i] = s_lo + (s_hi - s_lo) * (static_cast<double>(i) / cells);

    constexpr double kRootWidth = 1e-12;

    // zeros of g sit strictly inside the sub-threshold set; adding them to the
    // partition catches dips narrower than a grid cell
    std::vector<double> roots;
    for (int i = 1; i <= cells; ++i) {
        const double ga = g(points[i - 1]);
        const double gb = g(points[i]);
        if ((ga <= 0.0) != (gb <= 0.0))
            roots.push_back(bisect(g, points[i - 1], points[i], ga, kRootWidth));
    }
    points.insert(points.end(), roots.begin(), roots.end());
    std::sort(points.begin(), points.end());

    BadIntervalReport report;
    bool inside = phi(points[0]) < 0.0;
    double open_at = points[0];
    double prev_phi = phi(points[0]);
    for (std::size_t i = 1; i < points.size(); ++i) {
        const double cur_phi = phi(points[i]);
        if ((prev_phi < 0.0) != (cur_phi < 0.0)) {
            const double crossing =
                bisect(phi, points[i - 1], points[i], prev_phi, kRootWidth);
            if (inside) {
                report.intervals.push_back({L, open_at, crossing});
                inside = false;
            } else {
                open_at = crossing;
                inside = true;
            }
        }
        prev_phi = cur_phi;
    }
    if (inside) report.intervals.push_back({L, open_at, s_hi});

    for (const auto& iv : report.intervals) report.total_measure += iv.s_hi - iv.s_lo;
    return report;
}

namespace {

// The frequency-derivative matrix A(k, m) = (ln λ_{j_m})^k λ_{j_m}^s.
template <typename Real>
std::vector<Real> derivative_matrix(std::span<const int> levels, double s,
                                    const Domain& domain) {
    const std::size_t n = levels.size();
    std::vector<Real> a(n * n);
    for (std::size_t m = 0; m < n; ++m) {
        const Real lambda = static_cast<Real>(eigenvalue(domain, levels[m]));
        const Real x = std::log(lambda);
        const Real omega = std::pow(lambda, static_cast<Real>(s));
        Real pw = 1;
        for (std::size_t k = 0; k < n; ++k) {
            a[k * n + m] = pw * omega;
            pw *= x;
        }
    }
    return a;
}

// Determinant by in-place LU with partial pivoting.
template <typename Real>
Real lu_determinant(std::vector<Real> a, std::size_t n) {
    Real det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row)
            if (std::abs(a[row * n + col]) > std::abs(a[pivot * n + col])) pivot = row;
        if (a[pivot * n + col] == Real(0)) return 0;
        if (pivot != col) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a[col * n + k], a[pivot * n + k]);
            det = -det;
        }
        det *= a[col * n + col];
        for (std::size_t row = col + 1; row < n; ++row) {
            const Real factor = a[row * n + col] / a[col * n + col];
            for (std::size_t k = col + 1; k < n; ++k) a[row * n + k] -= factor * a[col * n + k];
        }
    }
    return det;
}

bool has_repeated_level(std::span<const int> levels) {
    std::vector<int> sorted(levels.begin(), levels.end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

void require_valid_levels(std::span<const int> levels, const char* who) {
    if (levels.empty()) throw std::invalid_argument(std::string(who) + ": empty index tuple");
    for (int j : levels)
        if (j < 1) throw std::invalid_argument(std::string(who) + ": levels must be >= 1");
}

}  // namespace

DeterminantResult vandermonde_determinant(std::span<const int> levels, double s,
                                          const Domain& domain) {
    require_valid_levels(levels, "vandermonde_determinant");
    if (has_repeated_level(levels)) return {0.0, true};

    const std::size_t n = levels.size();
    const auto a = derivative_matrix<double>(levels, s, domain);
    const double det = lu_determinant(a, n);

    double scale = 0.0;
    for (double v : a) scale = std::max(scale, std::abs(v));
    if (std::abs(det) < 1e-8 * scale) {
        // near-cancellation: redo in extended precision to separate
        // tiny-but-nonzero from zero
        const auto ax = derivative_matrix<long double>(levels, s, domain);
        return {static_cast<double>(lu_determinant(ax, n)), false};
    }
    return {det, false};
}

double vandermonde_closed_form(std::span<const int> levels, double s,
                               const Domain& domain) {
    require_valid_levels(levels, "vandermonde_closed_form");
    if (has_repeated_level(levels))
        throw std::invalid_argument("vandermonde_closed_form: repeated level");

    const std::size_t n = levels.size();
    std::vector<double> lambda(n);
    for (std::size_t m = 0; m < n; ++m) lambda[m] = eigenvalue(domain, levels[m]);

    double result = 1.0;
    for (std::size_t m = 0; m < n; ++m) result *= std::pow(lambda[m], s);
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t k = l + 1; k < n; ++k) result *= std::log(lambda[k] / lambda[l]);
    return result;
}

LemmaBoundReport lemma_bound_report(int K, double s, const Domain& domain) {
    if (K < 1) throw std::invalid_argument("lemma_bound_report: K must be >= 1");

    LemmaBoundReport report;
    report.min_scaled = std::numeric_limits<double>::infinity();

    std::vector<int> tuple;
    // all strictly increasing tuples in [1, K], by length then lexicographic
    const std::function<void(int)> extend = [&](int next) {
        if (!tuple.empty()) {
            const double kappa = static_cast<double>(tuple.size());
            const double scaled = std::abs(vandermonde_closed_form(tuple, s, domain)) *
                                  std::pow(static_cast<double>(K), 2.0 * kappa * kappa);
            if (scaled < report.min_scaled) {
                report.min_scaled = scaled;
                report.argmin = tuple;
            }
        }
        for (int j = next; j <= K; ++j) {
            tuple.push_back(j);
            extend(j + 1);
            tuple.pop_back();
        }
    };
    extend(1);
    return report;
}

}  // namespace fnls
