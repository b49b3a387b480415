#include "bsymbol/theory.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "bsymbol/numeric.hpp"

namespace bsymbol {

std::optional<long long> semiprimitivity(long long p, long long u) {
    if (u < 1) throw Error("u must be >= 1");
    if (std::gcd(p, u) != 1)
        throw NotCoprimeError("gcd(p, u) != 1 with p = " + std::to_string(p) +
                              ", u = " + std::to_string(u));
    if (u <= 2) return 1;
    // p^d = -1 (mod u) has a solution iff Ord_u(p) is even and the half power
    // hits -1; the smallest such d is then Ord_u(p)/2
    const long long e = mult_order(p, u);
    if (e % 2 != 0) return std::nullopt;
    if (pow_mod(p, e / 2, u) != u - 1) return std::nullopt;
    return e / 2;
}

SemiprimitiveData theory_params(const CodeParams& params) {
    const long long p = params.F().p();
    const long long rt = static_cast<long long>(params.F().r()) * params.F().t();
    SemiprimitiveData sp;
    sp.u = params.u;
    if (sp.u == 1) return sp;  // d = s = 1, delta = 0

    auto d = semiprimitivity(p, sp.u);
    if (!d)
        throw NotSemiprimitiveError("p = " + std::to_string(p) +
                                    " is not semiprimitive modulo u = " +
                                    std::to_string(sp.u));
    sp.d = *d;
    if (rt % (2 * sp.d) != 0)
        throw ParityError("rt = " + std::to_string(rt) + " is not divisible by 2d = " +
                          std::to_string(2 * sp.d));
    sp.s = rt / (2 * sp.d);

    const long long pd1_over_u = (ipow(p, sp.d) + 1) / sp.u;
    if (p > 2 && sp.s % 2 != 0 && pd1_over_u % 2 != 0)
        sp.delta = sp.u / 2;
    return sp;
}

long long gaussian_period_closed(long long i, const SemiprimitiveData& sp,
                                 const CodeParams& params) {
    const long long u = sp.u;
    if (u == 1) return -1;
    const long long p = params.F().p();
    const long long half_power = ipow(p, sp.s * sp.d);  // q^{r/2}
    const bool s_odd = sp.s % 2 != 0;
    long long num;
    if (((i % u) + u) % u == sp.delta)
        num = (s_odd ? 1 : -1) * (u - 1) * half_power - 1;
    else
        num = (s_odd ? -1 : 1) * half_power - 1;
    if (num % u != 0) throw Error("internal: Gaussian period not integral");
    return num / u;
}

long long hamming_weight_class(long long i, const SemiprimitiveData& sp,
                               const CodeParams& params) {
    const long long q = params.F().q();
    const long long eta = gaussian_period_closed(i, sp, params);
    const long long num = (q - 1) * (params.F().group_order() - sp.u * eta);
    const long long den = q * params.N;
    if (num % den != 0)
        throw NonIntegralWeightError("Hamming class weight is not an integer");
    return num / den;
}

PbSet build_P(const CodeParams& params, long long b) {
    const FieldTables& F = params.F();
    if (b < 1 || b > F.r())
        throw BOutOfRangeError("b = " + std::to_string(b) + " outside [1, r]");
    const long long order = F.group_order();

    std::vector<Element> gpow(b);  // gamma^{jN}, j = 0..b-1
    for (long long j = 0; j < b; ++j) gpow[j] = F.from_exponent(j * params.N % order);

    std::set<long long> members;
    members.insert(gpow[b - 1].log());
    // for each j: gamma^{(j-1)N} + sum_{m=1}^{b-j} x_m gamma^{(j-1+m)N}, x_m in F_q
    for (long long j = 1; j <= b - 1; ++j) {
        const long long slots = b - j;
        // depth-first over coefficient tuples, keeping partial sums
        std::vector<Element> partial(slots + 1);
        std::vector<long long> digit(slots, 0);
        partial[0] = gpow[j - 1];
        long long depth = 0;
        while (true) {
            if (depth == slots) {
                if (partial[slots].is_zero())
                    throw CardinalityError("P(b) member collapsed to zero");
                members.insert(partial[slots].log());
                --depth;
                while (depth >= 0 && digit[depth] == F.q() - 1) --depth;
                if (depth < 0) break;
                ++digit[depth];
            }
            for (long long m = depth + 1; m < slots; ++m) digit[m] = 0;
            for (long long m = depth; m < slots; ++m) {
                Element term = F.mul(F.embed_fq(digit[m]), gpow[j + m]);
                partial[m + 1] = F.add(partial[m], term);
            }
            depth = slots;
        }
    }

    long long expected = 0, qb = 1;
    for (long long k = 0; k < b; ++k) {
        expected += qb;
        qb *= F.q();
    }
    if (static_cast<long long>(members.size()) != expected)
        throw CardinalityError("|P(b)| = " + std::to_string(members.size()) +
                               ", expected " + std::to_string(expected));
    PbSet out;
    out.b = b;
    out.exponents.assign(members.begin(), members.end());
    return out;
}

MuProfile mu_profile(const CodeParams& params, long long b) {
    PbSet pb = build_P(params, b);
    MuProfile out;
    out.b = b;
    out.mu.assign(params.u, 0);
    for (long long e : pb.exponents) ++out.mu[e % params.u];
    return out;
}

long long bsymbol_weight_value(long long i, const CodeParams& params,
                               const SemiprimitiveData& sp, const MuProfile& mu,
                               long long b) {
    if (b < 1 || b > params.b_max())
        throw BOutOfRangeError("b = " + std::to_string(b) + " outside [1, min(r, n-1)]");
    if (mu.b != b) throw Error("mu profile computed for a different b");
    const long long u = sp.u;
    const long long idx = (((sp.delta - i) % u) + u) % u;
    const long long wa = hamming_weight_class(sp.delta, sp, params);
    const long long wb = u == 1 ? wa : hamming_weight_class(sp.delta + 1, sp, params);
    const long long pb_size = mu.pb_size();
    const long long num = mu.mu[idx] * wa + (pb_size - mu.mu[idx]) * wb;
    const long long den = ipow(params.F().q(), b - 1);
    if (num % den != 0)
        throw NonIntegralWeightError("b-symbol weight not divisible by q^(b-1)");
    return num / den;
}

WeightEnumerator hamming_enumerator_closed(const CodeParams& params,
                                           const SemiprimitiveData& sp) {
    const long long order = params.F().group_order();
    WeightEnumerator A;
    A.add(0, 1);
    A.add(hamming_weight_class(sp.delta, sp, params), order / sp.u);
    if (sp.u > 1)
        A.add(hamming_weight_class(sp.delta + 1, sp, params), order * (sp.u - 1) / sp.u);
    return A;
}

WeightEnumerator bsymbol_enumerator_closed(const CodeParams& params,
                                           const SemiprimitiveData& sp, long long b) {
    if (b < 1 || b > params.b_max())
        throw BOutOfRangeError("b = " + std::to_string(b) + " outside [1, min(r, n-1)]");
    const MuProfile mu = mu_profile(params, b);
    const long long order = params.F().group_order();
    WeightEnumerator A;
    A.add(0, 1);
    for (long long i = 0; i < sp.u; ++i)
        A.add(bsymbol_weight_value(i, params, sp, mu, b), order / sp.u);
    return A;
}

WeightEnumerator one_weight_enumerator(const CodeParams& params, long long b) {
    if (params.u != 1)
        throw UNotOneError("u = " + std::to_string(params.u) + ", expected 1");
    if (b < 1 || b > params.b_max())
        throw BOutOfRangeError("b = " + std::to_string(b) + " outside [1, min(r, n-1)]");
    const long long q = params.F().q();
    const long long qr = params.F().field_size();
    const long long weight = (qr - qr / ipow(q, b)) / params.N;
    WeightEnumerator A;
    A.add(0, 1);
    A.add(weight, qr - 1);
    return A;
}

MdsReport mds_check(const CodeParams& params, const SemiprimitiveData& sp, long long b) {
    const MuProfile mu = mu_profile(params, b);
    MdsReport rep;
    rep.b = b;
    rep.d_b = -1;
    rep.all_weights_equal_n = true;
    for (long long i = 0; i < sp.u; ++i) {
        const long long w = bsymbol_weight_value(i, params, sp, mu, b);
        if (rep.d_b < 0 || w < rep.d_b) rep.d_b = w;
        if (w != params.n) rep.all_weights_equal_n = false;
    }
    // M = q^r vs q^{n - d_b + b}: compare exponents, q >= 2
    rep.singleton_exponent = params.n - rep.d_b + b;
    rep.singleton_equality = rep.singleton_exponent == params.F().r();
    return rep;
}

}  // namespace bsymbol
