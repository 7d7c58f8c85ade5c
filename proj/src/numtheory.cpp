#include "snakealg/numtheory.hpp"

#include "snakealg/errors.hpp"

#include <algorithm>
#include <string>

namespace snakealg::numtheory {

namespace {

void require_odd_prime(std::uint64_t p) {
    if (p > kMaxModulus)
        raise(Errc::ModulusTooLarge,
              "modulus " + std::to_string(p) + " exceeds the supported bound 2^31-1");
    if (p % 2 == 0 || !is_prime(p))
        raise(Errc::EvenOrCompositeModulus,
              "modulus " + std::to_string(p) + " is not an odd prime");
}

std::uint64_t reduce(std::int64_t a, std::uint64_t p) {
    std::int64_t r = a % static_cast<std::int64_t>(p);
    if (r < 0)
        r += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r);
}

} // namespace

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1)
            r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0)
        raise(Errc::DivisionByZero, "inverse of 0 mod " + std::to_string(p));
    return pow_mod(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    if (n % 3 == 0)
        return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0)
            return false;
    }
    return true;
}

int legendre_symbol(std::int64_t a, std::uint64_t p) {
    require_odd_prime(p);
    std::uint64_t r = reduce(a, p);
    if (r == 0)
        return 0;
    return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::optional<std::uint64_t> sqrt_mod(std::int64_t a, std::uint64_t p) {
    require_odd_prime(p);
    std::uint64_t r = reduce(a, p);
    if (r == 0)
        return 0;
    if (pow_mod(r, (p - 1) / 2, p) != 1)
        return std::nullopt;

    // p - 1 = q * 2^s with q odd.
    std::uint64_t q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }

    std::uint64_t z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1)
        ++z;

    std::uint64_t m = s;
    std::uint64_t c = pow_mod(z, q, p);
    std::uint64_t t = pow_mod(r, q, p);
    std::uint64_t x = pow_mod(r, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0;
        std::uint64_t t2 = t;
        while (t2 != 1) {
            t2 = mul_mod(t2, t2, p);
            ++i;
        }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j)
            b = mul_mod(b, b, p);
        x = mul_mod(x, b, p);
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        m = i;
    }
    return std::min(x, p - x);
}

std::vector<std::uint64_t> phi3_roots_mod_p(std::uint64_t p) {
    if (p > kMaxModulus)
        raise(Errc::ModulusTooLarge,
              "modulus " + std::to_string(p) + " exceeds the supported bound 2^31-1");
    if (!is_prime(p))
        raise(Errc::CompositeModulus, "modulus " + std::to_string(p) + " is not prime");
    if (p == 2) {
        std::vector<std::uint64_t> roots;
        for (std::uint64_t b = 0; b < 2; ++b)
            if ((b * b + b + 1) % 2 == 0)
                roots.push_back(b);
        return roots;
    }
    if (p == 3)
        return {1}; // (T-1)^2 = T^2+T+1 in characteristic 3

    auto s = sqrt_mod(-3, p);
    if (!s)
        return {};
    std::uint64_t inv2 = (p + 1) / 2;
    std::uint64_t r1 = mul_mod((p - 1 + *s) % p, inv2, p);
    std::uint64_t r2 = mul_mod((2 * p - 1 - *s) % p, inv2, p);
    std::vector<std::uint64_t> roots{r1, r2};
    std::sort(roots.begin(), roots.end());
    return roots;
}

const char* split_class_name(SplitClass c) noexcept {
    switch (c) {
    case SplitClass::Ramified: return "Ramified";
    case SplitClass::Splits: return "Splits";
    case SplitClass::Inert: return "Inert";
    }
    return "Unknown";
}

SplitClass classify_prime(std::uint64_t p) {
    if (p > kMaxModulus)
        raise(Errc::ModulusTooLarge,
              "modulus " + std::to_string(p) + " exceeds the supported bound 2^31-1");
    if (!is_prime(p))
        raise(Errc::CompositeModulus, "modulus " + std::to_string(p) + " is not prime");
    if (p == 3)
        return SplitClass::Ramified;
    return p % 3 == 1 ? SplitClass::Splits : SplitClass::Inert;
}

FactorReport factor_lemma_check(std::uint64_t b) {
    if (b == 0)
        throw std::invalid_argument("factor_lemma_check requires b >= 1");
    if (b > kMaxFactorLemmaB)
        raise(Errc::BudgetExceeded,
              "b = " + std::to_string(b) + " exceeds the trial-division budget " +
                  std::to_string(kMaxFactorLemmaB));

    FactorReport report;
    report.b = b;
    report.value = b * b + b + 1;

    std::uint64_t v = report.value;
    auto take = [&](std::uint64_t q) {
        int mult = 0;
        while (v % q == 0) {
            v /= q;
            ++mult;
        }
        if (mult > 0)
            report.factors.emplace_back(q, mult);
    };
    take(2);
    take(3);
    for (std::uint64_t q = 5; q * q <= v; q += 6) {
        take(q);
        take(q + 2);
    }
    if (v > 1)
        report.factors.emplace_back(v, 1);

    report.all_congruent = true;
    for (const auto& [q, mult] : report.factors) {
        (void)mult;
        if (q % 3 == 2)
            report.all_congruent = false;
    }
    return report;
}

} // namespace snakealg::numtheory
