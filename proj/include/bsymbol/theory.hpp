#pragma once

#include <optional>
#include <vector>

#include "bsymbol/code.hpp"
#include "bsymbol/enumerator.hpp"

namespace bsymbol {

/// Closed-form machinery parameters: u, the smallest d with u | p^d + 1,
/// s (= rt/(2d) for u > 1, else 1), and delta in {0, u/2}.
struct SemiprimitiveData {
    long long u = 1;
    long long d = 1;
    long long s = 1;
    long long delta = 0;
};

/// Smallest d >= 1 with u | p^d + 1, or nullopt when p is not semiprimitive
/// modulo u. Throws NotCoprimeError if gcd(p, u) != 1.
std::optional<long long> semiprimitivity(long long p, long long u);

/// Fills (d, s, delta) for a validated instance; u = 1 or semiprimitive.
/// Throws NotSemiprimitiveError or ParityError.
SemiprimitiveData theory_params(const CodeParams& params);

/// Exact Gaussian period value eta_i of order u from the two-value closed form.
long long gaussian_period_closed(long long i, const SemiprimitiveData& sp,
                                 const CodeParams& params);

/// Hamming weight of c(a) for a in class i: (q-1)(q^r - 1 - u*eta_i)/(qN).
/// The class-delta value is W_A, every other class gives W_B.
long long hamming_weight_class(long long i, const SemiprimitiveData& sp,
                               const CodeParams& params);

/// The set P(b) of (q^b - 1)/(q - 1) elements built from gamma^{jN} monomials.
struct PbSet {
    long long b = 1;
    std::vector<long long> exponents;  // sorted logs of the members
};

PbSet build_P(const CodeParams& params, long long b);  // 1 <= b <= r

/// mu[i] = number of P(b) members in cyclotomic class i of order u.
struct MuProfile {
    long long b = 1;
    std::vector<long long> mu;  // length u
    long long pb_size() const {
        long long s = 0;
        for (long long m : mu) s += m;
        return s;
    }
};

MuProfile mu_profile(const CodeParams& params, long long b);

/// b-symbol weight of codewords from class i:
/// (mu[(delta-i) mod u] * W_A + (|P(b)| - mu[(delta-i) mod u]) * W_B) / q^(b-1),
/// with the division checked exact.
long long bsymbol_weight_value(long long i, const CodeParams& params,
                               const SemiprimitiveData& sp, const MuProfile& mu,
                               long long b);

/// 1 + ((q^r-1)/u) T^{W_A} + ((q^r-1)(u-1)/u) T^{W_B}.
WeightEnumerator hamming_enumerator_closed(const CodeParams& params,
                                           const SemiprimitiveData& sp);

/// 1 + ((q^r-1)/u) sum_i T^{W_i^{(b)}}; requires 1 <= b <= min(r, n-1).
WeightEnumerator bsymbol_enumerator_closed(const CodeParams& params,
                                           const SemiprimitiveData& sp, long long b);

/// u = 1 shortcut: 1 + (q^r - 1) T^{(q^r - q^{r-b})/N}.
WeightEnumerator one_weight_enumerator(const CodeParams& params, long long b);

struct MdsReport {
    long long b = 1;
    long long d_b = 0;                  // min_i W_i^{(b)}
    long long singleton_exponent = 0;   // n - d_b + b; equality iff == r
    bool singleton_equality = false;
    bool all_weights_equal_n = false;   // meaningful at b = r
};

MdsReport mds_check(const CodeParams& params, const SemiprimitiveData& sp, long long b);

}  // namespace bsymbol
