// spectrum.hpp — eigenvalues, frequencies and Sobolev weights of the
// spectrally defined fractional Laplacian (-Δ)^s on S^d and T^d.
//
// Levels index eigenspaces of -Δ:
//   sphere S^d : λ_j = j(j+d-1), multiplicity = dim of degree-j harmonics
//   torus  T^1 : λ_j = j², level j collects the wave numbers ±j
//   torus  T^d : λ_j = j-th distinct value of |k|², k ∈ Z^d (analysis only)
// Frequencies are ω_j = λ_j^s with ω_0 = 0; s-derivatives follow from
// d^k ω_j / ds^k = (ln λ_j)^k λ_j^s.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fnls {

enum class DomainKind { Sphere, Torus };

struct Domain {
    DomainKind kind{DomainKind::Torus};
    int dim{1};  // spatial dimension d >= 1

    bool operator==(const Domain&) const = default;
};

inline Domain sphere(int d) {
    if (d < 1) throw std::invalid_argument("sphere: dimension must be >= 1");
    return {DomainKind::Sphere, d};
}

inline Domain torus(int d) {
    if (d < 1) throw std::invalid_argument("torus: dimension must be >= 1");
    return {DomainKind::Torus, d};
}

std::string to_string(const Domain& domain);

// Distinct values of |k|², k ∈ Z^d, in increasing order, with the number of
// lattice points realizing each value. Exact integer enumeration.
struct TorusLevel {
    std::int64_t lambda;
    std::int64_t count;
};
std::vector<TorusLevel> torus_levels(int d, int level_count);

// λ_j of -Δ at level j (total on j >= 0).
double eigenvalue(const Domain& domain, int level);

// ω_j = λ_j^s, with ω_0 = 0. Rejects s <= 0.
double frequency(const Domain& domain, int level, double s);

// d^k ω_j / ds^k = (ln λ_j)^k λ_j^s. Rejects level 0 (ln λ_0 undefined).
double frequency_derivative(const Domain& domain, int level, double s, int order);

// Dimension of the level-j eigenspace.
std::int64_t multiplicity(const Domain& domain, int level);

// Weight of a mode with eigenvalue λ in the squared H^r norm: 1 + λ^r.
double sobolev_weight(double lambda, double r);

// Immutable per-level (λ_j, ω_j) table for a fixed domain and exponent s.
class FrequencyTable {
public:
    struct Entry {
        int level;
        double lambda;
        double omega;
    };

    FrequencyTable(Domain domain, double s, int max_level);

    const Domain& domain() const { return domain_; }
    double s() const { return s_; }
    int max_level() const { return static_cast<int>(entries_.size()) - 1; }

    double lambda(int level) const { return at(level).lambda; }
    double omega(int level) const { return at(level).omega; }
    const std::vector<Entry>& entries() const { return entries_; }

private:
    const Entry& at(int level) const;

    Domain domain_;
    double s_;
    std::vector<Entry> entries_;
};

}  // namespace fnls
