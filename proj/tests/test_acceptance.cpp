#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "snakealg/element_io.hpp"
#include "snakealg/numtheory.hpp"
#include "snakealg/oracle.hpp"
#include "snakealg/singular.hpp"

#include <chrono>
#include <cstdio>
#include <random>

// End-to-end acceptance checks. Each case prints one PASS/FAIL line; run
// this binary directly to see them (ctest hides passing output).

using namespace snakealg;

namespace {

struct Criterion {
    const char* name;
    double budget_seconds;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    bool ok = true;

    void note(bool pass) { ok = ok && pass; }

    ~Criterion() {
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("acceptance %-38s %s (%.2fs, budget %.0fs)\n", name,
                    ok && elapsed < budget_seconds ? "PASS" : "FAIL", elapsed, budget_seconds);
    }
};

FieldElement random_scalar(const Field& f, std::mt19937_64& rng) {
    if (f.finite()) {
        auto els = f.elements();
        return els[rng() % els.size()];
    }
    FieldElement x = f.from_ratio(static_cast<long long>(rng() % 21) - 10,
                                  static_cast<long long>(rng() % 9) + 1);
    if (f.spec().kind == FieldKind::RationalsExtOmega)
        x = x + f.from_ratio(static_cast<long long>(rng() % 21) - 10,
                             static_cast<long long>(rng() % 9) + 1) *
                    f.omega();
    return x;
}

std::vector<Term> random_terms(const Field& f, int n, std::mt19937_64& rng, int max_depth) {
    std::vector<Term> terms;
    int count = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < count; ++t) {
        std::string w;
        int len = static_cast<int>(rng() % static_cast<std::uint64_t>(max_depth + 1));
        for (int i = 0; i < len; ++i)
            w.push_back(rng() % 2 == 0 ? 'l' : 'u');
        Word word(w);
        std::optional<int> tag;
        if (word.all_l() && rng() % 2 == 0)
            tag = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        terms.push_back(Term{random_scalar(f, rng), word, tag});
    }
    return terms;
}

SnakeElement random_element(const Field& f, int n, std::mt19937_64& rng, int max_depth = 4) {
    return SnakeElement::from_terms(f, n, random_terms(f, n, rng, max_depth));
}

SnakeElement full_gen3(const Field& f) {
    return SnakeElement::bracket(f, {f.zero(), f.one(), -f.one()});
}

SnakeElement gen_for_root(const Field& f, const FieldElement& b) {
    return SnakeElement::bracket(f, {f.one(), b, -(b + f.one())});
}

bool timed_check(Criterion& c, bool pass) {
    c.note(pass);
    return pass;
}

} // namespace

TEST_CASE("criterion 1: splitting classification of primes below 1000") {
    Criterion c{"1 splitting classification", 1.0};
    for (std::uint64_t p = 2; p < 1000; ++p) {
        if (!numtheory::is_prime(p))
            continue;
        auto roots = numtheory::phi3_roots_mod_p(p);
        bool expected_split = p == 3 || p % 3 == 1;
        CHECK(timed_check(c, !roots.empty() == expected_split));

        std::vector<std::uint64_t> exhaustive;
        for (std::uint64_t b = 0; b < p; ++b)
            if ((b * b + b + 1) % p == 0)
                exhaustive.push_back(b);
        CHECK(timed_check(c, roots == exhaustive));
    }
}

TEST_CASE("criterion 2: factor congruences of b^2+b+1 for b up to 500") {
    Criterion c{"2 factor congruence", 1.0};
    for (std::uint64_t b = 1; b <= 500; ++b)
        CHECK(timed_check(c, numtheory::factor_lemma_check(b).all_congruent));
}

TEST_CASE("criterion 3: singular ideal counts per field") {
    Criterion c{"3 singular ideal counts", 1.0};
    const std::pair<const char*, std::size_t> expected[] = {
        {"F2", 0}, {"F3", 1}, {"F5", 0},    {"F7", 2},   {"F13", 2},
        {"F2(w)", 2}, {"F5(w)", 2}, {"Q", 0}, {"Q(w)", 2},
    };
    for (const auto& [spec, count] : expected) {
        auto ideals = enumerate_singular_ideals(Field::make(spec), 3);
        CHECK(timed_check(c, ideals.size() == count));
    }

    Field f3 = Field::make("F3");
    auto i3 = enumerate_singular_ideals(f3, 3);
    CHECK(timed_check(c, i3.size() == 1 &&
                             i3[0].generator == HeadVector{f3.one(), f3.one(), f3.one()}));

    Field f7 = Field::make("F7");
    auto i7 = enumerate_singular_ideals(f7, 3);
    CHECK(timed_check(
        c, i7.size() == 2 &&
               i7[0].generator == HeadVector{f7.one(), f7.from_integer(2), f7.from_integer(4)} &&
               i7[1].generator == HeadVector{f7.one(), f7.from_integer(4), f7.from_integer(2)}));
}

TEST_CASE("criterion 4: oracle equivalence with the analytic enumeration") {
    Criterion c{"4 oracle equivalence", 30.0};
    for (const char* spec : {"F2", "F3", "F5", "F7", "F11", "F13", "F2(w)", "F5(w)"}) {
        oracle::CrossCheckReport r = oracle::cross_check(Field::make(spec), 3);
        CHECK(timed_check(c, r.pass));
    }
    for (const char* spec : {"F2", "F3", "F5", "F7"}) {
        oracle::CrossCheckReport r = oracle::cross_check(Field::make(spec), 2);
        CHECK(timed_check(c, r.pass && r.proper_ideal_count == 0));
    }
}

TEST_CASE("criterion 5: convolution identities") {
    Criterion c{"5 convolution identities", 5.0};

    // (a) [1,-b,1-b] * [0,1,-1] = [1,b,-(b+1)]
    Field f7 = Field::make("F7");
    for (const FieldElement& b : f7.elements()) {
        SnakeElement lhs =
            SnakeElement::bracket(f7, {f7.one(), -b, f7.one() - b}).convolve(full_gen3(f7));
        CHECK(timed_check(c, lhs == gen_for_root(f7, b)));
    }
    Field q = Field::make("Q");
    std::mt19937_64 rng(0xacce55);
    for (int trial = 0; trial < 20; ++trial) {
        FieldElement b = random_scalar(q, rng);
        SnakeElement lhs =
            SnakeElement::bracket(q, {q.one(), -b, q.one() - b}).convolve(full_gen3(q));
        CHECK(timed_check(c, lhs == gen_for_root(q, b)));
    }

    // (b) (1/Delta_b) [0,-b,-(b+1)] * [1,b,-(b+1)] = [0,1,-1] when Delta_b != 0
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        Field f = Field(FieldSpec{FieldKind::PrimeField, p});
        for (const FieldElement& b : f.elements()) {
            FieldElement d = delta(b);
            if (d.is_zero())
                continue;
            SnakeElement lhs = SnakeElement::bracket(f, {f.zero(), -b, -(b + f.one())})
                                   .scaled(d.inverse())
                                   .convolve(gen_for_root(f, b));
            CHECK(timed_check(c, lhs == full_gen3(f)));
        }
    }

    // (c) f * [1,b,-(b+1)] = k_f [1,b,-(b+1)] for every head vector f when
    // Delta_b = 0, with k_f = a0 - (b+1) a1 + b a2.
    auto scalar_action = [&](const Field& f, const FieldElement& b) {
        SnakeElement gen = gen_for_root(f, b);
        oracle::for_each_vector(f, 3, [&](const HeadVector& h) {
            SnakeElement el = SnakeElement::bracket(f, h);
            FieldElement k_f = h[0] - (b + f.one()) * h[1] + b * h[2];
            CHECK(timed_check(c, el.convolve(gen) == gen.scaled(k_f)));
        });
    };
    scalar_action(f7, f7.from_integer(2));
    scalar_action(f7, f7.from_integer(4));
    Field f3 = Field::make("F3");
    scalar_action(f3, f3.one());
}

TEST_CASE("criterion 6: algebra axioms on random elements") {
    Criterion c{"6 algebra axioms", 10.0};
    std::mt19937_64 rng(0xa1a5);
    for (const char* spec : {"F7", "Q"}) {
        Field field = Field::make(spec);
        for (int trial = 0; trial < 500; ++trial) {
            SnakeElement f = random_element(field, 3, rng);
            SnakeElement g = random_element(field, 3, rng);
            SnakeElement h = random_element(field, 3, rng);

            CHECK(timed_check(c, f.convolve(g).convolve(h) == f.convolve(g.convolve(h))));
            CHECK(timed_check(c, f.convolve(g) == g.convolve(f)));
            SnakeElement sum = SnakeElement::linear_combine(field.one(), g, field.one(), h);
            CHECK(timed_check(
                c, f.convolve(sum) == SnakeElement::linear_combine(
                                          field.one(), f.convolve(g), field.one(), f.convolve(h))));
            SnakeElement e = SnakeElement::unit(field, 3);
            CHECK(timed_check(c, e.convolve(f) == f && f.convolve(e) == f));

            SnakeElement prod = f.convolve(g);
            CHECK(timed_check(c, prod.body().germ_at_zero() == prod.augmentation()));
            CHECK(timed_check(c,
                              prod.augmentation() == f.augmentation() * g.augmentation()));

            FieldElement a0 = random_scalar(field, rng), a1 = random_scalar(field, rng);
            SnakeElement s = SnakeElement::bracket(field, {a0, a1, -(a0 + a1)});
            CHECK(timed_check(c, f.convolve(s).body().is_zero()));
        }
    }
}

TEST_CASE("criterion 7: normal form and parser soundness") {
    Criterion c{"7 normal form and parser", 5.0};
    std::mt19937_64 rng(0x70a5);
    for (const char* spec : {"F7", "Q"}) {
        Field field = Field::make(spec);
        for (int trial = 0; trial < 100; ++trial) {
            auto terms = random_terms(field, 3, rng, 4);
            SnakeElement el = SnakeElement::from_terms(field, 3, terms);

            for (int k = 0; k < 50; ++k) {
                std::string w;
                int len = static_cast<int>(rng() % 6);
                for (int i = 0; i < len; ++i)
                    w.push_back(rng() % 2 == 0 ? 'l' : 'u');
                PointDescriptor pt{Word(w), rng() % 2 == 0 ? Tail::AllL : Tail::AllU};
                char tail_char = pt.tail == Tail::AllL ? 'l' : 'u';
                FieldElement direct = field.zero();
                for (const auto& term : terms) {
                    bool inside = true;
                    for (std::size_t i = 0; i < term.word.size(); ++i) {
                        char ch = i < pt.word.size() ? pt.word.at(i) : tail_char;
                        if (term.word.at(i) != ch) {
                            inside = false;
                            break;
                        }
                    }
                    if (inside)
                        direct += term.coeff;
                }
                CHECK(timed_check(c, el.body_value(pt) == direct));
            }

            SnakeElement back = parse_to_element(field, 3, print_element(el));
            CHECK(timed_check(c, back == el));
        }
    }
}

TEST_CASE("criterion 8: two-headed singular classification") {
    Criterion c{"8 two-headed classification", 1.0};
    std::mt19937_64 rng(0x8ead);
    for (const char* spec :
         {"F2", "F3", "F5", "F7", "F11", "F13", "F2(w)", "F5(w)", "Q", "Q(w)"}) {
        Field field = Field::make(spec);
        SnakeElement h = SnakeElement::bracket(field, {field.one(), -field.one()});
        for (int trial = 0; trial < 25; ++trial) {
            FieldElement a = random_scalar(field, rng);
            SnakeElement s = SnakeElement::bracket(field, {a, -a});
            CHECK(timed_check(c, is_singular(s)));
            CHECK(timed_check(c, s == h.scaled(s.head_value(0))));
        }
    }
}
