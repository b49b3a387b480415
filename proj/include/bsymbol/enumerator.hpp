#pragma once

#include <map>
#include <string>

namespace bsymbol {

/// Sparse weight distribution: weight -> codeword count.
class WeightEnumerator {
public:
    void add(long long weight, long long count = 1) {
        if (count != 0) counts_[weight] += count;
    }
    long long count(long long weight) const {
        auto it = counts_.find(weight);
        return it == counts_.end() ? 0 : it->second;
    }
    long long total() const {
        long long s = 0;
        for (auto [w, c] : counts_) s += c;
        return s;
    }
    const std::map<long long, long long>& counts() const { return counts_; }

    /// Pointwise count addition; associative and commutative.
    void merge(const WeightEnumerator& other) {
        for (auto [w, c] : other.counts_) counts_[w] += c;
    }

    /// Renders A(T) with terms ascending by exponent, e.g. "1 + 10T^2 + 5T^4".
    std::string to_text() const;

    friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;

private:
    std::map<long long, long long> counts_;
};

}  // namespace bsymbol
