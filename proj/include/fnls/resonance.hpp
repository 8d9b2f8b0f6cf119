// resonance.hpp — small divisors Σ_j ω_j L_j, nonresonance scanning over the
// fractional exponent s, and numerical verification of the frequency
// determinant bound.
//
// A combination L is admissible when 0 ≠ |L| <= K+2 and at most 2 units of
// |L_j| sit above the head cutoff N. The scan asks whether every admissible
// divisor stays above γ/N^α; exact resonances (e.g. ω_1 - 2ω_5 + ω_7 = 0 on
// T^1 at s = 1) show up as zeros of s ↦ Σ λ_j^s L_j which we isolate and
// measure.

#pragma once

#include <functional>
#include <span>
#include <vector>

#include "fnls/multi_index.hpp"
#include "fnls/spectrum.hpp"

namespace fnls {

// A combination together with its divisor value at one s.
struct DivisorRecord {
    MultiIndex L;
    double s{0.0};
    double value{0.0};      // Σ_{j>=1} ω_j L_j
    double threshold{0.0};  // γ / N^α used in the test
};

struct ScanConfig {
    int K{3};           // combination order: |L| <= K + 2
    int N{8};           // head cutoff of the nonresonance test
    int j_max{8};       // truncation of the tail levels, N <= j_max
    double gamma{1e-4};
    double alpha{2.0};
    std::vector<double> s_grid;

    double threshold() const;
    void validate() const;  // throws std::invalid_argument
};

// Σ_{j>=1} ω_j L_j, summed in ascending |ω_j L_j| to limit cancellation.
// Level-0 entries are ignored (ω_0 = 0). Throws if the support exceeds the
// table cutoff.
double small_divisor(const FrequencyTable& table, const MultiIndex& L);

// Every L with support in [1, j_max], 0 ≠ |L| <= K+2 and Σ_{j>N} |L_j| <= 2,
// in graded lexicographic order (by |L|, then by assignment); both L and -L
// are yielded.
void enumerate_multi_indices(int K, int N, int j_max,
                             const std::function<void(const MultiIndex&)>& yield);

struct KnrResult {
    bool pass{false};
    DivisorRecord worst;
};

// Tests |divisor| >= γ/N^α over all admissible combinations at this s.
KnrResult check_knr(double s, const ScanConfig& cfg, const Domain& domain);

struct ScanPoint {
    double s{0.0};
    double min_divisor{0.0};
    MultiIndex argmin;
};

std::vector<ScanPoint> scan_s(const ScanConfig& cfg, const Domain& domain);

// An s-interval on which |Σ λ_j^s L_j| < threshold.
struct BadInterval {
    MultiIndex L;
    double s_lo{0.0};
    double s_hi{0.0};
};

struct BadIntervalReport {
    std::vector<BadInterval> intervals;
    double total_measure{0.0};
};

// Locates the sub-threshold set of s ↦ Σ_j λ_j^s L_j on [s_lo, s_hi]:
// grid sampling, bisection of every |g| = threshold crossing to width 1e-12.
BadIntervalReport refine_bad_intervals(const MultiIndex& L, double s_lo, double s_hi,
                                       double threshold, const Domain& domain,
                                       double grid_step = 1e-3);

struct DeterminantResult {
    double value{0.0};
    bool degenerate{false};  // repeated level: determinant vanishes identically
};

// det of the κ×κ matrix with rows (d^k ω_{j_m} / ds^k), k = 0..κ-1, by LU
// with partial pivoting; recomputed in extended precision when the result is
// tiny against the matrix scale.
DeterminantResult vandermonde_determinant(std::span<const int> levels, double s,
                                          const Domain& domain);

// ω_{j_1}···ω_{j_κ} · Π_{l<k} ln(λ_{j_k}/λ_{j_l}); throws on repeated levels.
double vandermonde_closed_form(std::span<const int> levels, double s,
                               const Domain& domain);

struct LemmaBoundReport {
    double min_scaled{0.0};   // min over index tuples of |D| · K^{2κ²}
    std::vector<int> argmin;  // the minimizing tuple
};

// Iterates every strictly increasing tuple in [1, K] of each length κ <= K.
// A strictly positive minimum certifies |D| >= C / K^{2κ²} with C = minimum.
LemmaBoundReport lemma_bound_report(int K, double s, const Domain& domain);

}  // namespace fnls
