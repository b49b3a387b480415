#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace bsymbol {

bool is_prime(long long v);

/// Prime factorization by trial division, ascending primes.
std::vector<std::pair<long long, int>> factorize(long long v);

/// All positive divisors of v, ascending.
std::vector<long long> divisors(long long v);

/// base^e with an overflow guard (throws Error on overflow of long long).
long long ipow(long long base, long long e);

long long pow_mod(long long base, long long e, long long mod);

/// Smallest e >= 1 with w^e = 1 (mod v). Throws NotCoprimeError if gcd(v, w) != 1.
long long mult_order(long long w, long long v);

}  // namespace bsymbol
