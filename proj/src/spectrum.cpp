#include "fnls/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace fnls {

std::string to_string(const Domain& domain) {
    const char* base = domain.kind == DomainKind::Sphere ? "S^" : "T^";
    return base + std::to_string(domain.dim);
}

namespace {

// C(n, k) in exact integer arithmetic; small arguments only.
std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Tally |k|² over the lattice cube {-bound..bound}^d, keeping values <= limit.
void tally_lattice(int d, std::int64_t limit, int bound, int coord, std::int64_t partial,
                   std::map<std::int64_t, std::int64_t>& counts) {
    if (coord == d) {
        if (partial <= limit) ++counts[partial];
        return;
    }
    for (int k = -bound; k <= bound; ++k) {
        const std::int64_t next = partial + static_cast<std::int64_t>(k) * k;
        if (next > limit) continue;
        tally_lattice(d, limit, bound, coord + 1, next, counts);
    }
}

}  // namespace

std::vector<TorusLevel> torus_levels(int d, int level_count) {
    if (d < 1) throw std::invalid_argument("torus_levels: dimension must be >= 1");
    if (level_count < 1) throw std::invalid_argument("torus_levels: need at least one level");

    if (d == 1) {
        std::vector<TorusLevel> levels(level_count);
        for (int j = 0; j < level_count; ++j)
            levels[j] = {static_cast<std::int64_t>(j) * j, j == 0 ? 1 : 2};
        return levels;
    }

    // Grow the search radius until the enumeration below the limit is complete
    // and contains enough distinct values.
    std::int64_t limit = level_count;
    for (;;) {
        std::map<std::int64_t, std::int64_t> counts;
        const int bound = static_cast<int>(std::sqrt(static_cast<double>(limit))) + 1;
        tally_lattice(d, limit, bound, 0, 0, counts);
        if (static_cast<int>(counts.size()) >= level_count) {
            std::vector<TorusLevel> levels;
            levels.reserve(level_count);
            for (const auto& [lambda, count] : counts) {
                levels.push_back({lambda, count});
                if (static_cast<int>(levels.size()) == level_count) break;
            }
            return levels;
        }
        limit *= 2;
    }
}

double eigenvalue(const Domain& domain, int level) {
    if (level < 0) throw std::invalid_argument("eigenvalue: level must be >= 0");
    if (domain.kind == DomainKind::Sphere) {
        const double j = level;
        return j * (j + domain.dim - 1);
    }
    if (domain.dim == 1) return static_cast<double>(level) * level;
    return static_cast<double>(torus_levels(domain.dim, level + 1).back().lambda);
}

double frequency(const Domain& domain, int level, double s) {
    if (s <= 0.0) throw std::domain_error("frequency: s must be > 0");
    if (level == 0) return 0.0;
    return std::pow(eigenvalue(domain, level), s);
}

double frequency_derivative(const Domain& domain, int level, double s, int order) {
    if (level < 1)
        throw std::invalid_argument("frequency_derivative: level must be >= 1");
    if (order < 0)
        throw std::invalid_argument("frequency_derivative: order must be >= 0");
    const double lambda = eigenvalue(domain, level);
    return std::pow(std::log(lambda), order) * std::pow(lambda, s);
}

std::int64_t multiplicity(const Domain& domain, int level) {
    if (level < 0) throw std::invalid_argument("multiplicity: level must be >= 0");
    if (domain.kind == DomainKind::Torus) {
        if (domain.dim == 1) return level == 0 ? 1 : 2;
        return torus_levels(domain.dim, level + 1).back().count;
    }
    // dim of degree-j spherical harmonics on S^d = C(j+d, d) - C(j+d-2, d)
    const int d = domain.dim;
    return binomial(level + d, d) - binomial(level + d - 2, d);
}

double sobolev_weight(double lambda, double r) {
    if (lambda < 0.0) throw std::invalid_argument("sobolev_weight: lambda must be >= 0");
    if (r < 0.0) throw std::invalid_argument("sobolev_weight: r must be >= 0");
    return 1.0 + std::pow(lambda, r);
}

FrequencyTable::FrequencyTable(Domain domain, double s, int max_level)
    : domain_(domain), s_(s) {
    if (s <= 0.0) throw std::domain_error("FrequencyTable: s must be > 0");
    if (max_level < 0) throw std::invalid_argument("FrequencyTable: max_level must be >= 0");
    entries_.reserve(max_level + 1);

    if (domain.kind == DomainKind::Torus && domain.dim > 1) {
        const auto levels = torus_levels(domain.dim, max_level + 1);
        for (int j = 0; j <= max_level; ++j) {
            const double lambda = static_cast<double>(levels[j].lambda);
            entries_.push_back({j, lambda, j == 0 ? 0.0 : std::pow(lambda, s)});
        }
    } else {
        for (int j = 0; j <= max_level; ++j) {
            const double lambda = eigenvalue(domain, j);
            entries_.push_back({j, lambda, j == 0 ? 0.0 : std::pow(lambda, s)});
        }
    }
}

const FrequencyTable::Entry& FrequencyTable::at(int level) const {
    if (level < 0 || level >= static_cast<int>(entries_.size()))
        throw std::out_of_range("FrequencyTable: level " + std::to_string(level) +
                                " outside table cutoff " + std::to_string(max_level()));
    return entries_[level];
}

}  // namespace fnls
