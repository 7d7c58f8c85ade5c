#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

// Exact coefficient fields: the rationals Q, prime fields F_p (p < 2^31),
// and the quadratic extensions Q(w) and F_p(w) obtained by adjoining a root
// w of T^2 + T + 1 (so w^2 = -1 - w). Every element is stored as a pair
// a + b*w over the base field; for the non-extension kinds b stays zero and
// the arithmetic degenerates to base-field arithmetic.
//
// Over Q the pair coefficients are GMP rationals (always reduced, positive
// denominator); over F_p they are least nonnegative residues. F_p(w) is only
// a field when T^2+T+1 has no root mod p, i.e. when p = 2 (mod 3); other
// moduli are rejected at construction.
//
// In characteristic 0, w corresponds to the primitive cube root of unity
// (-1 + i*sqrt(3))/2; working in Q[T]/(T^2+T+1) keeps everything rational
// with no radicals.

namespace snakealg {

enum class FieldKind {
    Rationals,
    PrimeField,
    PrimeFieldExtOmega,
    RationalsExtOmega,
};

const char* field_kind_name(FieldKind k) noexcept;

struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    std::uint64_t p = 0; // modulus; prime kinds only

    // Spec strings: "Q", "Q(w)", "F<p>" (e.g. "F7"), "F<p>(w)" (e.g. "F5(w)").
    static FieldSpec parse(std::string_view text);
    std::string str() const;

    bool operator==(const FieldSpec&) const = default;
};

class Field;

class FieldElement {
public:
    FieldElement(); // zero of Q

    FieldKind kind() const noexcept { return kind_; }
    std::uint64_t modulus() const noexcept { return p_; }
    FieldSpec field_spec() const { return FieldSpec{kind_, p_}; }
    std::uint64_t characteristic() const noexcept { return p_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator-() const;
    FieldElement inverse() const; // throws DivisionByZero on 0

    friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
    friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
    friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
    FieldElement& operator+=(const FieldElement& y) { return *this = *this + y; }
    FieldElement& operator-=(const FieldElement& y) { return *this = *this - y; }
    FieldElement& operator*=(const FieldElement& y) { return *this = *this * y; }

    friend bool operator==(const FieldElement& x, const FieldElement& y);
    friend bool operator!=(const FieldElement& x, const FieldElement& y) { return !(x == y); }

    // Total order; inside one field this is the canonical element order used
    // for all deterministic output (residues ascending, extension pairs
    // lexicographic on (a, b), rationals by value).
    static int cmp(const FieldElement& x, const FieldElement& y);
    friend bool operator<(const FieldElement& x, const FieldElement& y) { return cmp(x, y) < 0; }

    static FieldElement zero_like(const FieldElement& x);
    static FieldElement one_like(const FieldElement& x);

    // Canonical literal: "n", "n/d", and for extensions "a+b*w" with a zero
    // coefficient omitted ("0" when both vanish).
    std::string str() const;

private:
    friend class Field;

    struct ModPair {
        std::uint64_t a = 0, b = 0;
        bool operator==(const ModPair&) const = default;
    };
    struct RatPair {
        mpq_class a, b;
    };

    FieldElement(FieldKind kind, std::uint64_t p, ModPair v);
    FieldElement(FieldKind kind, std::uint64_t p, RatPair v);

    static void require_same(const FieldElement& x, const FieldElement& y);

    FieldKind kind_;
    std::uint64_t p_;
    std::variant<ModPair, RatPair> v_;
};

struct RootReport {
    std::vector<FieldElement> roots; // ascending in the canonical element order
    bool double_root = false;        // single root of multiplicity 2 (characteristic 3)
};

class Field {
public:
    // Validates the given FieldSpec: primality of p (trial division, bound
    // 2^31-1) and, for F_p(w), that T^2+T+1 is irreducible mod p.
    explicit Field(const FieldSpec& spec);
    static Field make(std::string_view spec_text) { return Field(FieldSpec::parse(spec_text)); }

    const FieldSpec& spec() const noexcept { return spec_; }
    std::string name() const { return spec_.str(); }
    std::uint64_t characteristic() const noexcept;
    bool finite() const noexcept;
    std::optional<std::uint64_t> size() const; // element count when finite

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_integer(long long v) const;
    FieldElement from_ratio(long long num, long long den) const;
    FieldElement omega() const; // extension kinds only

    bool contains(const FieldElement& x) const { return x.field_spec() == spec_; }
    void require(const FieldElement& x) const;

    // Parses a complete scalar literal (throws ScalarParseError on leftovers).
    FieldElement parse_scalar(std::string_view text) const;

    // Greedy scalar scan starting at pos; returns the value and the position
    // one past the munched literal, or nullopt when text[pos] does not start
    // a scalar. A '+'/'-' continuation is folded in only when it completes an
    // "a+b*w" form of this field.
    std::optional<std::pair<FieldElement, std::size_t>>
    scan_scalar(std::string_view text, std::size_t pos) const;

    // All elements in canonical ascending order; finite kinds only.
    std::vector<FieldElement> elements() const;

    RootReport roots_of_phi3() const;

    bool operator==(const Field& o) const { return spec_ == o.spec_; }

private:
    FieldSpec spec_;
};

} // namespace snakealg
