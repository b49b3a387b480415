#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "bsymbol/field.hpp"

namespace bsymbol {

/// One validated code instance: n*N = q^r - 1 with Ord_n(q) = r.
struct CodeParams {
    FieldPtr field;
    long long N = 1;
    long long n = 1;
    long long delta = 1;  // (q^r - 1)/(q - 1)
    long long u = 1;      // gcd(delta, N)

    const FieldTables& F() const { return *field; }
    /// Largest b accepted by the enumerator operations.
    long long b_max() const { return std::min<long long>(field->r(), n - 1); }
};

/// Checks N | q^r - 1 and Ord_n(q) = r; fills n, Delta, u.
/// Throws NonDivisorError or OrderMismatchError.
CodeParams validate_params(FieldPtr field, long long N);

struct Codeword {
    std::vector<long long> coords;  // F_q codes, length n
    Element source;
};

/// c(a) = (Tr_{F_{q^r}/F_q}(a gamma^{N i}))_{i=0..n-1}.
Codeword codeword(const CodeParams& params, Element a);

long long hamming_weight(std::span<const long long> v);

/// Number of length-b cyclic windows containing a nonzero symbol.
/// Direct window-scan evaluation of the definition; requires 1 <= b < n.
long long b_symbol_weight(std::span<const long long> v, long long b);

/// w_b for every b in [1, b_max] in one pass over the zero-run structure.
/// Result is indexed by b - 1. Requires 1 <= b_max < n.
std::vector<long long> b_symbol_weights_all(std::span<const long long> v, long long b_max);

/// d_b(x, y) = w_b(x - y); subtraction is coordinate-wise over F_q.
long long b_distance(const FieldTables& field, std::span<const long long> x,
                     std::span<const long long> y, long long b);

}  // namespace bsymbol
