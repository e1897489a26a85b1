#include "cycinv/modarith.hpp"

namespace cycinv {

namespace {

using u128 = unsigned __int128;

unsigned long long mulmod(unsigned long long a, unsigned long long b, unsigned long long m) {
    return (unsigned long long)((u128)a * b % m);
}

unsigned long long powmod(unsigned long long a, unsigned long long e, unsigned long long m) {
    unsigned long long r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long q : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL, 37LL}) {
        if (p == q) return true;
        if (p % q == 0) return false;
    }
    unsigned long long n = (unsigned long long)p, d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // This witness set decides primality for all n < 3.3e24, hence all int64.
    for (unsigned long long a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        unsigned long long x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

long long residue(long long c, long long p) {
    if (p <= 0) throw std::invalid_argument("residue: modulus must be positive");
    long long r = c % p;
    return r < 0 ? r + p : r;
}

long long mod_inverse(long long c, long long p) {
    if (!is_prime(p)) throw std::invalid_argument("mod_inverse: modulus must be prime");
    long long a = residue(c, p);
    if (a == 0) throw std::invalid_argument("mod_inverse: value is divisible by the modulus");
    // Extended Euclid on (a, p); invariant a*x0 + p*(...) = r0.
    long long r0 = a, r1 = p, x0 = 1, x1 = 0;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long x2 = x0 - q * x1;
        r0 = r1; r1 = r2;
        x0 = x1; x1 = x2;
    }
    // r0 = gcd(a, p) = 1 since p is prime and a != 0 mod p.
    return residue(x0, p);
}

Action::Action(long long p_, long long a_, long long b_) : p(p_), a(a_), b(b_) {
    if (!is_prime(p)) throw std::invalid_argument("Action: p must be prime");
    a = residue(a, p);
    b = residue(b, p);
    if (a == 0 || b == 0)
        throw std::invalid_argument("Action: weights must be nonzero mod p");
}

} // namespace cycinv
