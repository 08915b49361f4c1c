#pragma once

#include <vector>

#include "bps/exact.hpp"

namespace bps {

struct PrimeFactor {
    long long prime;
    int multiplicity;

    friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// Prime factorization by trial division, primes in increasing order.
/// factorize(1) is the empty product. Throws std::invalid_argument for n <= 0.
std::vector<PrimeFactor> factorize(long long n);

/// Number of distinct primes dividing n (multiplicities not counted).
int omega(long long n);

/// Moebius function: 0 if n has a squared prime factor, else (-1)^omega(n).
int mobius(long long n);

bool is_squarefree(long long n);

/// All divisors of n in strictly increasing order, 1 and n included.
std::vector<long long> divisors(long long n);

/// I(n) = { k : k | n and n/k is square-free }, strictly increasing.
std::vector<long long> iset(long long n);

/// Generalized binomial coefficient binom(a, b) for arbitrary integer upper
/// argument: the falling-factorial product a(a-1)...(a-b+1)/b!. This is the
/// unique polynomial extension in a; in particular binom(a, 0) = 1 for all a
/// and binom(-1, b) = (-1)^b. Throws std::invalid_argument for b < 0.
Integer gen_binomial(const Integer& a, long long b);

}  // namespace bps
