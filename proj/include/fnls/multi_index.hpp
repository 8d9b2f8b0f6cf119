// multi_index.hpp — sparse integer-valued map over mode or level indices.
//
// Doubles as a resonance combination (signed coefficients over levels) and as
// a monomial exponent vector (non-negative exponents over signed modes).

#pragma once

#include <compare>
#include <cstdlib>
#include <map>
#include <string>

namespace fnls {

class MultiIndex {
public:
    using Map = std::map<int, int>;

    MultiIndex() = default;
    MultiIndex(std::initializer_list<std::pair<const int, int>> entries) {
        for (const auto& [j, v] : entries) set(j, v);
    }

    // Zero entries are never stored.
    void set(int index, int value) {
        if (value == 0)
            entries_.erase(index);
        else
            entries_[index] = value;
    }

    void add(int index, int delta) { set(index, get(index) + delta); }

    int get(int index) const {
        const auto it = entries_.find(index);
        return it == entries_.end() ? 0 : it->second;
    }

    bool empty() const { return entries_.empty(); }
    std::size_t support_size() const { return entries_.size(); }

    // |L| = Σ_j |L_j|
    int l1_norm() const {
        int n = 0;
        for (const auto& [j, v] : entries_) n += std::abs(v);
        return n;
    }

    // Σ_j L_j (for exponent maps: the total degree in those variables).
    int value_sum() const {
        int n = 0;
        for (const auto& [j, v] : entries_) n += v;
        return n;
    }

    MultiIndex negated() const {
        MultiIndex neg;
        for (const auto& [j, v] : entries_) neg.entries_[j] = -v;
        return neg;
    }

    // Canonical sign representative: first nonzero entry positive.
    MultiIndex canonical_sign() const {
        if (entries_.empty() || entries_.begin()->second > 0) return *this;
        return negated();
    }

    Map::const_iterator begin() const { return entries_.begin(); }
    Map::const_iterator end() const { return entries_.end(); }
    const Map& entries() const { return entries_; }

    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

    // Compact "index:coeff,index:coeff" encoding, e.g. "1:1,5:-2,7:1".
    std::string to_string() const {
        std::string out;
        for (const auto& [j, v] : entries_) {
            if (!out.empty()) out += ',';
            out += std::to_string(j) + ':' + std::to_string(v);
        }
        return out.empty() ? "0" : out;
    }

private:
    Map entries_;
};

}  // namespace fnls
