#include "bsymbol/code.hpp"

#include <numeric>
#include <string>

#include "bsymbol/numeric.hpp"

namespace bsymbol {

CodeParams validate_params(FieldPtr field, long long N) {
    const long long order = field->group_order();
    if (N < 1 || order % N != 0)
        throw NonDivisorError("N = " + std::to_string(N) + " does not divide q^r - 1 = " +
                              std::to_string(order));
    CodeParams params;
    params.field = std::move(field);
    params.N = N;
    params.n = order / N;
    params.delta = params.F().delta();
    params.u = std::gcd(params.delta, N);
    const long long ord = params.n == 1 ? 1 : mult_order(params.F().q() % params.n, params.n);
    if (ord != params.F().r())
        throw OrderMismatchError("Ord_n(q) = " + std::to_string(ord) + " != r = " +
                                 std::to_string(params.F().r()) +
                                 " (the code lives in a smaller extension)");
    return params;
}

Codeword codeword(const CodeParams& params, Element a) {
    const FieldTables& F = params.F();
    Codeword cw;
    cw.source = a;
    cw.coords.assign(params.n, 0);
    if (a.is_zero()) return cw;
    const long long order = F.group_order();
    long long e = a.log() % order;
    for (long long i = 0; i < params.n; ++i) {
        cw.coords[i] = F.trace_q_by_exp(e);
        e += params.N;
        if (e >= order) e -= order;
    }
    return cw;
}

long long hamming_weight(std::span<const long long> v) {
    long long w = 0;
    for (long long x : v)
        if (x != 0) ++w;
    return w;
}

long long b_symbol_weight(std::span<const long long> v, long long b) {
    const long long n = static_cast<long long>(v.size());
    if (b < 1 || b >= n)
        throw BOutOfRangeError("b = " + std::to_string(b) + " outside [1, n-1], n = " +
                               std::to_string(n));
    long long w = 0;
    for (long long i = 0; i < n; ++i) {
        for (long long j = 0; j < b; ++j) {
            if (v[(i + j) % n] != 0) {
                ++w;
                break;
            }
        }
    }
    return w;
}

std::vector<long long> b_symbol_weights_all(std::span<const long long> v, long long b_max) {
    const long long n = static_cast<long long>(v.size());
    if (b_max < 1 || b_max >= n)
        throw BOutOfRangeError("b_max = " + std::to_string(b_max) + " outside [1, n-1]");
    std::vector<long long> nonzero;
    for (long long i = 0; i < n; ++i)
        if (v[i] != 0) nonzero.push_back(i);
    std::vector<long long> w(b_max, 0);
    if (nonzero.empty()) return w;
    // cyclic zero-run lengths between consecutive nonzero coordinates;
    // a run of L zeros contributes max(L - b + 1, 0) all-zero windows
    for (long long b = 1; b <= b_max; ++b) w[b - 1] = n;
    for (std::size_t j = 0; j < nonzero.size(); ++j) {
        long long next = j + 1 < nonzero.size() ? nonzero[j + 1] : nonzero[0] + n;
        long long run = next - nonzero[j] - 1;
        for (long long b = 1; b <= b_max && b <= run; ++b) w[b - 1] -= run - b + 1;
    }
    return w;
}

long long b_distance(const FieldTables& field, std::span<const long long> x,
                     std::span<const long long> y, long long b) {
    if (x.size() != y.size())
        throw LengthMismatchError("vectors of length " + std::to_string(x.size()) +
                                  " and " + std::to_string(y.size()));
    std::vector<long long> diff(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        diff[i] = field.fq_add(x[i], field.fq_neg(y[i]));
    return b_symbol_weight(diff, b);
}

}  // namespace bsymbol
