#include "elq/modular.hpp"

#include <array>

#include "elq/error.hpp"

namespace elq::modp {

namespace {

__extension__ using wide_uint = unsigned __int128;

std::uint64_t mul_wide(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<wide_uint>(a) * b % m);
}

std::uint64_t pow_wide(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_wide(result, base, m);
        base = mul_wide(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

std::uint64_t pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) { return pow_wide(base, exp, p); }

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw InternalError("inverting zero modulo p");
    return pow_wide(a, p - 2, p);
}

std::uint64_t reduce(std::int64_t v, std::uint64_t p) {
    const auto sp = static_cast<std::int64_t>(p);
    auto r = v % sp;
    if (r < 0) r += sp;
    return static_cast<std::uint64_t>(r);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses are deterministic for all n < 2^64.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        auto x = pow_wide(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_wide(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::optional<std::uint64_t> sqrt(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (pow_wide(a, (p - 1) / 2, p) != 1) return std::nullopt;
    if (p % 4 == 3) return pow_wide(a, (p + 1) / 4, p);

    std::uint64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    std::uint64_t z = 2;
    while (pow_wide(z, (p - 1) / 2, p) != p - 1) ++z;

    int m = s;
    auto c = pow_wide(z, q, p);
    auto t = pow_wide(a, q, p);
    auto r = pow_wide(a, (q + 1) / 2, p);
    while (t != 1) {
        int i = 0;
        auto t2 = t;
        while (t2 != 1) {
            t2 = mul_wide(t2, t2, p);
            ++i;
        }
        auto b = c;
        for (int j = 0; j < m - i - 1; ++j) b = mul_wide(b, b, p);
        m = i;
        c = mul_wide(b, b, p);
        t = mul_wide(t, c, p);
        r = mul_wide(r, b, p);
    }
    return r;
}

}  // namespace elq::modp
