#include "bps/numtheory.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bps {

namespace {

void require_positive(long long n, const char* fn) {
    if (n <= 0) {
        throw std::invalid_argument(std::string(fn) + ": argument must be positive, got " +
                                    std::to_string(n));
    }
}

}  // namespace

std::vector<PrimeFactor> factorize(long long n) {
    require_positive(n, "factorize");
    std::vector<PrimeFactor> out;
    auto strip = [&](long long p) {
        if (n % p != 0) return;
        int mult = 0;
        while (n % p == 0) {
            n /= p;
            ++mult;
        }
        out.push_back({p, mult});
    };
    strip(2);
    for (long long p = 3; p <= n / p; p += 2) strip(p);
    if (n > 1) out.push_back({n, 1});
    return out;
}

int omega(long long n) {
    require_positive(n, "omega");
    return static_cast<int>(factorize(n).size());
}

int mobius(long long n) {
    require_positive(n, "mobius");
    const auto factors = factorize(n);
    for (const auto& f : factors) {
        if (f.multiplicity > 1) return 0;
    }
    return factors.size() % 2 == 0 ? 1 : -1;
}

bool is_squarefree(long long n) {
    return mobius(n) != 0;
}

std::vector<long long> divisors(long long n) {
    require_positive(n, "divisors");
    std::vector<long long> small, large;
    for (long long d = 1; d <= n / d; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<long long> iset(long long n) {
    require_positive(n, "iset");
    std::vector<long long> out;
    for (long long k : divisors(n)) {
        if (is_squarefree(n / k)) out.push_back(k);
    }
    return out;
}

Integer gen_binomial(const Integer& a, long long b) {
    if (b < 0) throw std::invalid_argument("gen_binomial: lower index must be >= 0");
    if (b == 0) return Integer(1);
    if (a.sign() < 0) {
        // binom(a, b) = (-1)^b binom(b - a - 1, b) reduces to a nonnegative
        // upper argument.
        const Integer reflected = gen_binomial(Integer(b) - a - Integer(1), b);
        return b % 2 == 0 ? reflected : -reflected;
    }
    if (a < Integer(b)) return Integer(0);  // falling factorial hits zero
    Integer r(1);
    for (long long i = 1; i <= b; ++i) {
        r *= a - Integer(b) + Integer(i);
        r /= Integer(i);  // exact: r is binom(a-b+i, i) at each step
    }
    return r;
}

}  // namespace bps
