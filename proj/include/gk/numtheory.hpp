#ifndef GK_NUMTHEORY_HPP
#define GK_NUMTHEORY_HPP

// Exact integer arithmetic: factorization, deterministic primality,
// multiplicative orders, primitive prime divisors, p-adic valuations, and the
// handful of special-purpose arithmetic checks the group-theoretic layers
// depend on (Suzuki/Ree prime-power patterns, the 2-adic lifting identity for
// 5^l - 1, and the Gerono-style equation 2^(2m+1) + 1 = 3^k).
//
// All values are unsigned 128-bit; factorization accepts inputs below 2^96.
// Primality is certified deterministically below 3.317e24 (the 13-base strong
// pseudoprime bound); anything larger that survives the test raises Overflow
// rather than returning an uncertified verdict.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gk/errors.hpp"

namespace gk {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline std::string to_string_u128(u128 n) {
    if (n == 0) return "0";
    std::string s;
    while (n > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(n % 10)));
        n /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

inline u128 parse_u128(const std::string& s) {
    if (s.empty()) throw ParseError("parse_u128: empty string");
    u128 n = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw ParseError("parse_u128: bad digit in '" + s + "'");
        u128 next = n * 10 + static_cast<unsigned>(c - '0');
        if (next < n) throw Overflow("parse_u128: value exceeds 128 bits");
        n = next;
    }
    return n;
}

namespace detail {

// 2^96, the documented factorization input bound.
inline u128 factorize_bound() { return u128(1) << 96; }

// Largest n for which the 13-base strong-pseudoprime test is a proof:
// 3,317,044,064,679,887,385,961,981.
inline u128 miller_rabin_bound() {
    static const u128 b = parse_u128("3317044064679887385961981");
    return b;
}

// a*b mod m for m up to 2^127.  Modulus values here are at most ~2^96, so the
// shift-and-add loop is plenty fast for the workloads in this library.
inline u128 mulmod(u128 a, u128 b, u128 m) {
    if (m <= (u128(1) << 63)) return (a % m) * (b % m) % m;
    a %= m;
    b %= m;
    u128 r = 0;
    while (b > 0) {
        if (b & 1) {
            r += a;
            if (r >= m) r -= m;
        }
        a += a;
        if (a >= m) a -= m;
        b >>= 1;
    }
    return r;
}

inline u128 powmod(u128 a, u128 e, u128 m) {
    u128 r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

inline u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Primes below 10^6, for the trial-division stage.
inline const std::vector<u64>& small_primes() {
    static const std::vector<u64> primes = [] {
        const u64 limit = 1'000'000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<u64> out;
        for (u64 i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

// Strong-pseudoprime check to one base.
inline bool strong_probable_prime(u128 n, u128 base) {
    if (base % n == 0) return true;
    u128 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u128 x = powmod(base, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace detail

// Deterministic primality for n below the 13-base bound.  Composites above the
// bound are still correctly rejected; a value above the bound that passes all
// bases cannot be certified and raises Overflow.
inline bool is_prime(u128 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (u64 base : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (!detail::strong_probable_prime(n, base)) return false;
    }
    if (n >= detail::miller_rabin_bound())
        throw Overflow("is_prime: " + to_string_u128(n) +
                       " passes all bases but exceeds the deterministic bound");
    return true;
}

struct PrimePower {
    u128 prime = 0;
    unsigned exponent = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
    // Primes strictly increasing; product of prime^exponent is the value.
    std::vector<PrimePower> factors;

    u128 value() const {
        u128 v = 1;
        for (const auto& pp : factors) {
            for (unsigned i = 0; i < pp.exponent; ++i) {
                u128 next = v * pp.prime;
                if (pp.prime != 0 && next / pp.prime != v)
                    throw Overflow("Factorization::value exceeds 128 bits");
                v = next;
            }
        }
        return v;
    }

    std::set<u128> prime_set() const {
        std::set<u128> s;
        for (const auto& pp : factors) s.insert(pp.prime);
        return s;
    }

    unsigned exponent_of(u128 p) const {
        for (const auto& pp : factors)
            if (pp.prime == p) return pp.exponent;
        return 0;
    }

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

namespace detail {

inline void add_factor(std::vector<PrimePower>& fs, u128 p, unsigned e) {
    for (auto& pp : fs) {
        if (pp.prime == p) {
            pp.exponent += e;
            return;
        }
    }
    fs.push_back({p, e});
}

} // namespace detail

// Product of two factored values (no overflow possible: exponents add).
inline Factorization multiply(const Factorization& a, const Factorization& b) {
    std::vector<PrimePower> fs = a.factors;
    for (const auto& pp : b.factors) detail::add_factor(fs, pp.prime, pp.exponent);
    std::sort(fs.begin(), fs.end(),
              [](const PrimePower& x, const PrimePower& y) { return x.prime < y.prime; });
    return Factorization{fs};
}

// Exact quotient; throws DomainError if b does not divide a.
inline Factorization divide_exact(const Factorization& a, const Factorization& b) {
    std::vector<PrimePower> fs;
    for (const auto& pp : a.factors) fs.push_back(pp);
    for (const auto& pp : b.factors) {
        bool found = false;
        for (auto& q : fs) {
            if (q.prime == pp.prime) {
                if (q.exponent < pp.exponent)
                    throw DomainError("divide_exact: quotient is not integral");
                q.exponent -= pp.exponent;
                found = true;
                break;
            }
        }
        if (!found) throw DomainError("divide_exact: quotient is not integral");
    }
    std::erase_if(fs, [](const PrimePower& pp) { return pp.exponent == 0; });
    return Factorization{fs};
}

inline Factorization factorize(u128 n) {
    if (n == 0) throw DomainError("factorize: n must be positive");
    if (n >= detail::factorize_bound())
        throw Overflow("factorize: input at or above 2^96");
    std::vector<PrimePower> fs;
    for (u64 p : detail::small_primes()) {
        if (u128(p) * p > n) break;
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            detail::add_factor(fs, p, e);
        }
    }
    // Remaining cofactor has no prime factor below 10^6; split with Brent's
    // cycle-finding rho (deterministic parameter sequence).
    std::vector<u128> stack;
    if (n > 1) stack.push_back(n);
    while (!stack.empty()) {
        u128 m = stack.back();
        stack.pop_back();
        if (is_prime(m)) {
            detail::add_factor(fs, m, 1);
            continue;
        }
        u128 d = 0;
        for (u128 c = 1; d == 0 || d == m; ++c) {
            // Brent's variant of the rho iteration x -> x^2 + c.
            u128 x = 2, y = 2, q = 1;
            u128 ys = y;
            const unsigned step = 128;
            d = 1;
            for (u128 r = 1; d == 1; r <<= 1) {
                x = y;
                for (u128 i = 0; i < r; ++i) y = (detail::mulmod(y, y, m) + c) % m;
                for (u128 k = 0; k < r && d == 1; k += step) {
                    ys = y;
                    for (u128 i = 0; i < std::min<u128>(step, r - k); ++i) {
                        y = (detail::mulmod(y, y, m) + c) % m;
                        u128 diff = x > y ? x - y : y - x;
                        q = detail::mulmod(q, diff, m);
                    }
                    d = detail::gcd_u128(q, m);
                }
            }
            if (d == m) {
                // Backtrack to recover the factor that was folded into q.
                d = 1;
                while (d == 1) {
                    ys = (detail::mulmod(ys, ys, m) + c) % m;
                    u128 diff = x > ys ? x - ys : ys - x;
                    d = detail::gcd_u128(diff, m);
                }
            }
            if (d == m) d = 0; // retry with the next constant c
        }
        stack.push_back(d);
        stack.push_back(m / d);
    }
    std::sort(fs.begin(), fs.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return Factorization{fs};
}

struct PrimePowerWitness {
    u128 base = 0;
    unsigned exponent = 0;
    friend bool operator==(const PrimePowerWitness&, const PrimePowerWitness&) = default;
};

inline std::optional<PrimePowerWitness> is_prime_power(u128 n) {
    if (n < 2) throw DomainError("is_prime_power: n must be at least 2");
    Factorization f = factorize(n);
    if (f.factors.size() != 1) return std::nullopt;
    return PrimePowerWitness{f.factors[0].prime, f.factors[0].exponent};
}

// Multiplicative order of q modulo r for odd r; for r = 2 the prime-graph
// convention is used instead of the literal order: e(2,q) = 1 when q = 1 mod 4
// and e(2,q) = 2 when q = -1 mod 4.
inline u128 e_order(u128 r, u128 q) {
    if (!is_prime(r)) throw DomainError("e_order: r must be prime");
    if (q < 2) throw DomainError("e_order: q must be at least 2");
    if (detail::gcd_u128(r, q) != 1)
        throw NotCoprime("e_order: r divides q");
    if (r == 2) return (q % 4 == 1) ? 1 : 2;
    Factorization phi = factorize(r - 1);
    u128 order = r - 1;
    for (const auto& pp : phi.factors) {
        for (unsigned i = 0; i < pp.exponent; ++i) {
            u128 reduced = order / pp.prime;
            if (detail::powmod(q, reduced, r) == 1)
                order = reduced;
            else
                break;
        }
    }
    return order;
}

// All primes r dividing q^n - 1 whose order e(r,q) equals n.  Empty exactly
// for (q,n) in {(2,1),(3,1),(2,6)} on the tested range.
inline std::set<u128> primitive_prime_divisors(u128 q, unsigned n) {
    if (q < 2 || n < 1) throw DomainError("primitive_prime_divisors: q >= 2, n >= 1");
    u128 v = 1;
    for (unsigned i = 0; i < n; ++i) {
        u128 next = v * q;
        if (next / q != v || next >= detail::factorize_bound())
            throw Overflow("primitive_prime_divisors: q^n out of range");
        v = next;
    }
    Factorization f = factorize(v - 1);
    std::set<u128> out;
    for (const auto& pp : f.factors) {
        if (e_order(pp.prime, q) == n) out.insert(pp.prime);
    }
    return out;
}

inline unsigned p_adic_valuation(u128 p, u128 n) {
    if (n == 0) throw DomainError("p_adic_valuation: n must be positive");
    if (p < 2) throw DomainError("p_adic_valuation: p must be at least 2");
    unsigned k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

// v2(5^l - 1) = 2 + v2(l), by the lifting-the-exponent identity.  The formula
// value is always returned; the direct valuation is cross-checked whenever
// 5^l - 1 is within factorization range.
inline unsigned lte_two_adic_five(unsigned l) {
    if (l < 1) throw DomainError("lte_two_adic_five: l must be positive");
    unsigned formula = 2 + p_adic_valuation(2, l);
    u128 v = 1;
    bool in_range = true;
    for (unsigned i = 0; i < l; ++i) {
        if (v > detail::factorize_bound() / 5) {
            in_range = false;
            break;
        }
        v *= 5;
    }
    if (in_range && formula != p_adic_valuation(2, v - 1))
        throw DomainError("lte_two_adic_five: identity violated (internal error)");
    return formula;
}

// q = 2^(2m+1): are both q +- sqrt(2q) + 1 prime powers?  (True exactly for
// m in {1,2} on the tested range.)
inline bool suzuki_both_prime_powers(unsigned m) {
    if (m < 1) throw DomainError("suzuki_both_prime_powers: m must be positive");
    if (2 * m + 2 >= 96) throw Overflow("suzuki_both_prime_powers: q out of range");
    u128 q = u128(1) << (2 * m + 1);
    u128 root = u128(1) << (m + 1); // sqrt(2q)
    return is_prime_power(q - root + 1).has_value() &&
           is_prime_power(q + root + 1).has_value();
}

struct ReeCheck {
    bool minus_is_prime_power = false;
    bool plus_is_prime_power = false;
    bool both_prime = false;
    bool congruence_ok = false; // m = 1 (mod 3) whenever both are prime
};

// q = 3^(2m+1): each prime-power value among q +- sqrt(3q) + 1 must in fact be
// prime (exponent 1), and if both are prime then m = 1 (mod 3).
inline ReeCheck ree_prime_power_check(unsigned m) {
    if (m < 1) throw DomainError("ree_prime_power_check: m must be positive");
    u128 q = 1, root = 1;
    for (unsigned i = 0; i < 2 * m + 1; ++i) {
        if (q > detail::factorize_bound() / 3)
            throw Overflow("ree_prime_power_check: q out of range");
        q *= 3;
    }
    for (unsigned i = 0; i < m + 1; ++i) root *= 3; // sqrt(3q) = 3^(m+1)
    ReeCheck r;
    auto minus = is_prime_power(q - root + 1);
    auto plus = is_prime_power(q + root + 1);
    r.minus_is_prime_power = minus.has_value();
    r.plus_is_prime_power = plus.has_value();
    if (minus && minus->exponent != 1)
        throw DomainError("ree_prime_power_check: Q- is a proper prime power");
    if (plus && plus->exponent != 1)
        throw DomainError("ree_prime_power_check: Q+ is a proper prime power");
    r.both_prime = minus.has_value() && plus.has_value();
    r.congruence_ok = !r.both_prime || (m % 3 == 1);
    if (!r.congruence_ok)
        throw DomainError("ree_prime_power_check: congruence m = 1 (mod 3) violated");
    return r;
}

// All (m,k) with m <= max_m and 2^(2m+1) + 1 = 3^k.  The unique solution is
// (1,2): 9 = 3^2.
inline std::set<std::pair<unsigned, unsigned>> gerono_solutions(unsigned max_m) {
    if (max_m < 1) throw DomainError("gerono_solutions: max_m must be positive");
    if (2 * max_m + 1 >= 127) throw Overflow("gerono_solutions: range too large");
    std::set<std::pair<unsigned, unsigned>> out;
    for (unsigned m = 1; m <= max_m; ++m) {
        u128 v = (u128(1) << (2 * m + 1)) + 1;
        unsigned k = 0;
        while (v % 3 == 0) {
            v /= 3;
            ++k;
        }
        if (v == 1) out.insert({m, k});
    }
    return out;
}

// Arbitrary-precision decimal rendering of a factored value (used to validate
// embedded group orders far beyond 128 bits, e.g. ~8.1e53).
inline std::string factored_decimal(const Factorization& f) {
    std::vector<u64> limbs{1}; // base 10^18, little-endian
    const u64 base = 1'000'000'000'000'000'000ULL;
    auto mul_small = [&](u64 x) {
        u128 carry = 0;
        for (auto& limb : limbs) {
            u128 cur = u128(limb) * x + carry;
            limb = static_cast<u64>(cur % base);
            carry = cur / base;
        }
        while (carry > 0) {
            limbs.push_back(static_cast<u64>(carry % base));
            carry /= base;
        }
    };
    for (const auto& pp : f.factors) {
        if (pp.prime > ~u64(0))
            throw Overflow("factored_decimal: prime exceeds 64 bits");
        for (unsigned i = 0; i < pp.exponent; ++i) mul_small(static_cast<u64>(pp.prime));
    }
    std::string s = std::to_string(limbs.back());
    for (auto it = limbs.rbegin() + 1; it != limbs.rend(); ++it) {
        std::string part = std::to_string(*it);
        s += std::string(18 - part.size(), '0') + part;
    }
    return s;
}

} // namespace gk

#endif // GK_NUMTHEORY_HPP
