#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "snakealg/errors.hpp"
#include "snakealg/snake_element.hpp"

#include <random>

using namespace snakealg;

namespace {

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    throw std::logic_error("expected an Error");
}

FieldElement random_scalar(const Field& f, std::mt19937_64& rng) {
    if (f.finite()) {
        auto els = f.elements();
        return els[rng() % els.size()];
    }
    return f.from_ratio(static_cast<long long>(rng() % 21) - 10,
                        static_cast<long long>(rng() % 9) + 1);
}

// Random element via a random term list; the construction path guarantees
// the germ invariant, like any user-built element.
SnakeElement random_element(const Field& f, int n, std::mt19937_64& rng, int max_depth = 4) {
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
    return SnakeElement::from_terms(f, n, terms);
}

// Independent n=2 head convolution straight from the composition table
// 0+0=0, 0+1=1, 1+0=1, 1+1=0.
HeadVector conv2_table(const HeadVector& x, const HeadVector& y) {
    return {x[0] * y[0] + x[1] * y[1], x[0] * y[1] + x[1] * y[0]};
}

} // namespace

TEST_CASE("from_terms normal-form examples") {
    Field f7 = Field::make("F7");

    // Z(l) + Z(u) covers X and Z(l) contains 0: this is the unit.
    SnakeElement covered = SnakeElement::from_terms(
        f7, 3, {Term{f7.one(), Word("l"), std::nullopt}, Term{f7.one(), Word("u"), std::nullopt}});
    CHECK(covered == SnakeElement::unit(f7, 3));
    CHECK(covered.heads() == HeadVector{f7.one(), f7.zero(), f7.zero()});
    CHECK(covered.body() == BodyMap::constant(f7.one()));

    // 1_{X_0} - 1_{X_1} over two heads: pure head difference, zero body.
    Field q = Field::make("Q");
    SnakeElement h = SnakeElement::from_terms(
        q, 2, {Term{q.one(), Word(), 0}, Term{-q.one(), Word(), 1}});
    CHECK(h.heads() == HeadVector{q.one(), -q.one()});
    CHECK(h.body().is_zero());

    // Z(ll) - Z(l) cancels on the heads and leaves -1_{Z(lu)} on the body.
    SnakeElement d = SnakeElement::from_terms(
        q, 3, {Term{q.one(), Word("ll"), std::nullopt}, Term{-q.one(), Word("l"), std::nullopt}});
    CHECK(d.heads() == HeadVector{q.zero(), q.zero(), q.zero()});
    CHECK(d.body() == BodyMap::indicator(q, Word("lu"), -q.one()));
    CHECK(d.body_value({Word("lu"), Tail::AllU}) == -q.one());
}

TEST_CASE("from_terms validates tags and head counts") {
    Field q = Field::make("Q");
    CHECK(code_of([&] {
              SnakeElement::from_terms(q, 3, {Term{q.one(), Word("lu"), 1}});
          }) == Errc::InvalidHeadTag);
    CHECK(code_of([&] {
              SnakeElement::from_terms(q, 3, {Term{q.one(), Word("lu"), 0}});
          }) == Errc::InvalidHeadTag);
    CHECK(code_of([&] {
              SnakeElement::from_terms(q, 2, {Term{q.one(), Word(), 2}});
          }) == Errc::InvalidHeadTag);
    CHECK(code_of([&] { SnakeElement::unit(q, 4); }) == Errc::UnsupportedHeadCount);
    Field f7 = Field::make("F7");
    CHECK(code_of([&] {
              SnakeElement::from_terms(q, 3, {Term{f7.one(), Word(), std::nullopt}});
          }) == Errc::MixedFields);

    // Head-tagged terms on longer all-l cylinders are fine.
    SnakeElement e = SnakeElement::from_terms(q, 3, {Term{q.one(), Word("ll"), 2}});
    CHECK(e.head_value(2) == q.one());
    CHECK(e.body_value({Word("ll"), Tail::AllU}) == q.one());
    CHECK(e.body_value({Word("lu"), Tail::AllL}) == q.zero());
}

TEST_CASE("linear combinations") {
    Field f7 = Field::make("F7");
    std::mt19937_64 rng(0xc0ffee);
    SnakeElement f = random_element(f7, 3, rng);
    SnakeElement g = random_element(f7, 3, rng);

    CHECK(SnakeElement::linear_combine(f7.one(), f, f7.zero(), g) == f);
    CHECK(SnakeElement::linear_combine(f7.one(), f, -f7.one(), f).is_zero());

    // (1/(m-n)) ([1,m,-(m+1)] - [1,n,-(n+1)]) = [0,1,-1] with m=2, n=1.
    auto bracket_b = [&](long long b) {
        return SnakeElement::bracket(
            f7, {f7.one(), f7.from_integer(b), -(f7.from_integer(b) + f7.one())});
    };
    SnakeElement lhs = SnakeElement::linear_combine(
        (f7.from_integer(2) - f7.from_integer(1)).inverse(), bracket_b(2),
        -(f7.from_integer(2) - f7.from_integer(1)).inverse(), bracket_b(1));
    CHECK(lhs == SnakeElement::bracket(f7, {f7.zero(), f7.one(), f7.from_integer(6)}));
}

TEST_CASE("convolution follows the head formula with pointwise bodies") {
    Field f7 = Field::make("F7");

    // [1,-b,1-b] * [0,1,-1] = [1,b,-(b+1)] at b = 2: [1,5,6]*[0,1,6] = [1,2,4].
    SnakeElement a = SnakeElement::bracket(
        f7, {f7.one(), f7.from_integer(5), f7.from_integer(6)});
    SnakeElement b = SnakeElement::bracket(
        f7, {f7.zero(), f7.one(), f7.from_integer(6)});
    CHECK(a.convolve(b) ==
          SnakeElement::bracket(f7, {f7.one(), f7.from_integer(2), f7.from_integer(4)}));

    // Two heads over Q: h * h = 2h for h = [1,-1], against the composition
    // table oracle.
    Field q = Field::make("Q");
    SnakeElement h = SnakeElement::bracket(q, {q.one(), -q.one()});
    SnakeElement hh = h.convolve(h);
    CHECK(hh == SnakeElement::bracket(q, {q.from_integer(2), q.from_integer(-2)}));
    CHECK(conv2_table(h.heads(), h.heads()) == hh.heads());

    // Inverse identity at nonvanishing Delta: over F5 with b = 1,
    // (1/3) [0,-1,-2] * [1,1,-2] = [0,1,-1].
    Field f5 = Field::make("F5");
    SnakeElement u = SnakeElement::bracket(
        f5, {f5.zero(), f5.from_integer(-1), f5.from_integer(-2)});
    SnakeElement v = SnakeElement::bracket(
        f5, {f5.one(), f5.one(), f5.from_integer(-2)});
    SnakeElement scaled = u.scaled(f5.from_integer(3).inverse());
    CHECK(scaled.convolve(v) ==
          SnakeElement::bracket(f5, {f5.zero(), f5.one(), f5.from_integer(4)}));
}

TEST_CASE("unit laws and evaluation") {
    std::mt19937_64 rng(0xfeed);
    for (const char* spec : {"F7", "Q"}) {
        Field f = Field::make(spec);
        for (int n : {2, 3}) {
            SnakeElement e = SnakeElement::unit(f, n);
            CHECK(e.head_value(0) == f.one());
            CHECK(e.head_value(1) == f.zero());
            for (int trial = 0; trial < 100; ++trial) {
                SnakeElement x = random_element(f, n, rng);
                CHECK(e.convolve(x) == x);
                CHECK(x.convolve(e) == x);
            }
        }
    }

    Field f7 = Field::make("F7");
    SnakeElement unit = SnakeElement::unit(f7, 3);
    CHECK(unit.body_value({Word("u"), Tail::AllU}) == f7.one());
    CHECK(code_of([&] { unit.head_value(3); }) == Errc::HeadIndexOutOfRange);

    // Singular elements vanish on the body.
    SnakeElement s = SnakeElement::bracket(f7, {f7.zero(), f7.one(), f7.from_integer(-1)});
    CHECK(s.body_value({Word("lu"), Tail::AllL}) == f7.zero());

    // The (epsilon, all-l) descriptor reads the body germ, i.e. the head sum.
    CHECK(unit.body_value({Word(), Tail::AllL}) == unit.augmentation());
}

TEST_CASE("equality is structural on normal forms") {
    Field f7 = Field::make("F7");
    CHECK(SnakeElement::from_terms(f7, 3,
                                   {Term{f7.one(), Word("l"), std::nullopt},
                                    Term{f7.one(), Word("u"), std::nullopt}}) ==
          SnakeElement::unit(f7, 3));

    Field f3 = Field::make("F3");
    CHECK(SnakeElement::bracket(f3, {f3.zero(), f3.one(), f3.from_integer(-1)}) ==
          SnakeElement::bracket(f3, {f3.zero(), f3.one(), f3.from_integer(2)}));

    CHECK_FALSE(SnakeElement::bracket(f3, {f3.one(), f3.zero(), f3.zero()}) ==
                SnakeElement::bracket(f3, {f3.zero(), f3.one(), f3.zero()}));

    // Mixed fields or head counts compare unequal without throwing.
    Field f5 = Field::make("F5");
    CHECK_FALSE(SnakeElement::unit(f3, 3) == SnakeElement::unit(f5, 3));
    CHECK_FALSE(SnakeElement::unit(f3, 3) == SnakeElement::unit(f3, 2));
}

TEST_CASE("ring axioms, germ invariant, and augmentation multiplicativity") {
    std::mt19937_64 rng(0x5eed);
    for (const char* spec : {"F7", "Q"}) {
        Field field = Field::make(spec);
        for (int n : {2, 3}) {
            for (int trial = 0; trial < 60; ++trial) {
                SnakeElement f = random_element(field, n, rng);
                SnakeElement g = random_element(field, n, rng);
                SnakeElement h = random_element(field, n, rng);

                CHECK(f.convolve(g).convolve(h) == f.convolve(g.convolve(h)));
                CHECK(f.convolve(g) == g.convolve(f));
                SnakeElement sum =
                    SnakeElement::linear_combine(field.one(), g, field.one(), h);
                CHECK(f.convolve(sum) ==
                      SnakeElement::linear_combine(field.one(), f.convolve(g), field.one(),
                                                   f.convolve(h)));

                SnakeElement prod = f.convolve(g);
                CHECK(prod.body().germ_at_zero() == prod.augmentation());
                CHECK(prod.augmentation() == f.augmentation() * g.augmentation());
            }
        }
    }
}

TEST_CASE("normal-form soundness: term-list semantics survive normalization") {
    std::mt19937_64 rng(0x7e57);
    Field f7 = Field::make("F7");
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3;
        std::vector<Term> terms;
        int count = 1 + static_cast<int>(rng() % 5);
        for (int t = 0; t < count; ++t) {
            std::string w;
            int len = static_cast<int>(rng() % 4);
            for (int i = 0; i < len; ++i)
                w.push_back(rng() % 2 == 0 ? 'l' : 'u');
            Word word(w);
            std::optional<int> tag;
            if (word.all_l() && rng() % 2 == 0)
                tag = static_cast<int>(rng() % 3);
            terms.push_back(Term{random_scalar(f7, rng), word, tag});
        }
        SnakeElement el = SnakeElement::from_terms(f7, n, terms);

        // Heads: head i collects coeffs of all-l terms tagged i (untagged
        // counting toward head 0).
        HeadVector expected_heads(3, f7.zero());
        for (const auto& term : terms)
            if (term.word.all_l())
                expected_heads[static_cast<std::size_t>(term.head_tag.value_or(0))] += term.coeff;
        CHECK(el.heads() == expected_heads);

        // Body points: direct sum of indicator evaluations.
        for (int k = 0; k < 50; ++k) {
            std::string w;
            int len = static_cast<int>(rng() % 6);
            for (int i = 0; i < len; ++i)
                w.push_back(rng() % 2 == 0 ? 'l' : 'u');
            PointDescriptor pt{Word(w), rng() % 2 == 0 ? Tail::AllL : Tail::AllU};
            char tail_char = pt.tail == Tail::AllL ? 'l' : 'u';
            FieldElement direct = f7.zero();
            for (const auto& term : terms) {
                bool inside = true;
                for (std::size_t i = 0; i < term.word.size(); ++i) {
                    char c = i < pt.word.size() ? pt.word.at(i) : tail_char;
                    if (term.word.at(i) != c) {
                        inside = false;
                        break;
                    }
                }
                if (inside)
                    direct += term.coeff;
            }
            CHECK(el.body_value(pt) == direct);
        }
    }
}

TEST_CASE("singular closure: products with singular elements are singular") {
    std::mt19937_64 rng(0x51f7);
    for (const char* spec : {"F7", "Q", "F2(w)"}) {
        Field field = Field::make(spec);
        for (int trial = 0; trial < 40; ++trial) {
            SnakeElement f = random_element(field, 3, rng);
            FieldElement a0 = random_scalar(field, rng);
            FieldElement a1 = random_scalar(field, rng);
            SnakeElement s = SnakeElement::bracket(field, {a0, a1, -(a0 + a1)});
            REQUIRE(s.body().is_zero());
            CHECK(f.convolve(s).body().is_zero());
            CHECK(s.convolve(f).body().is_zero());
        }
    }
}

TEST_CASE("mixed operands are rejected") {
    Field f3 = Field::make("F3");
    Field f5 = Field::make("F5");
    SnakeElement a = SnakeElement::unit(f3, 3);
    SnakeElement b = SnakeElement::unit(f5, 3);
    SnakeElement c = SnakeElement::unit(f3, 2);
    CHECK(code_of([&] { a.convolve(b); }) == Errc::MixedFields);
    CHECK(code_of([&] { a.convolve(c); }) == Errc::MixedHeadCounts);
    CHECK(code_of([&] {
              SnakeElement::linear_combine(f3.one(), a, f3.one(), c);
          }) == Errc::MixedHeadCounts);
}
