#include "bsymbol/numeric.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "bsymbol/errors.hpp"

namespace bsymbol {

bool is_prime(long long v) {
    if (v < 2) return false;
    if (v < 4) return true;
    if (v % 2 == 0) return false;
    for (long long d = 3; d * d <= v; d += 2)
        if (v % d == 0) return false;
    return true;
}

std::vector<std::pair<long long, int>> factorize(long long v) {
    if (v < 1) throw Error("factorize: argument must be positive");
    std::vector<std::pair<long long, int>> out;
    for (long long d = 2; d * d <= v; d += (d == 2 ? 1 : 2)) {
        if (v % d != 0) continue;
        int e = 0;
        while (v % d == 0) { v /= d; ++e; }
        out.emplace_back(d, e);
    }
    if (v > 1) out.emplace_back(v, 1);
    return out;
}

std::vector<long long> divisors(long long v) {
    std::vector<long long> out{1};
    for (auto [prime, exp] : factorize(v)) {
        const std::size_t base = out.size();
        long long pk = 1;
        for (int k = 1; k <= exp; ++k) {
            pk *= prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long ipow(long long base, long long e) {
    if (e < 0) throw Error("ipow: negative exponent");
    long long acc = 1;
    for (long long i = 0; i < e; ++i) {
        if (base != 0 && acc > std::numeric_limits<long long>::max() / std::abs(base))
            throw Error("ipow: overflow");
        acc *= base;
    }
    return acc;
}

long long pow_mod(long long base, long long e, long long mod) {
    if (mod == 1) return 0;
    unsigned __int128 acc = 1;
    unsigned __int128 b = ((base % mod) + mod) % mod;
    while (e > 0) {
        if (e & 1) acc = acc * b % mod;
        b = b * b % mod;
        e >>= 1;
    }
    return static_cast<long long>(acc);
}

long long mult_order(long long w, long long v) {
    if (v < 1) throw Error("mult_order: modulus must be positive");
    if (v == 1) return 1;
    if (std::gcd(((w % v) + v) % v, v) != 1)
        throw NotCoprimeError("mult_order: gcd(" + std::to_string(v) + ", " +
                              std::to_string(w) + ") != 1");
    // group exponent candidate: phi(v), then strip primes while w^(e/P) stays 1
    long long phi = 1;
    for (auto [prime, exp] : factorize(v)) {
        phi *= prime - 1;
        for (int k = 1; k < exp; ++k) phi *= prime;
    }
    long long e = phi;
    for (auto [prime, exp] : factorize(phi)) {
        (void)exp;
        while (e % prime == 0 && pow_mod(w, e / prime, v) == 1) e /= prime;
    }
    return e;
}

}  // namespace bsymbol
