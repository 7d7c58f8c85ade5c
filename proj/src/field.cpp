#include "snakealg/field.hpp"

#include "snakealg/errors.hpp"
#include "snakealg/numtheory.hpp"

#include <algorithm>
#include <cctype>

namespace snakealg {

namespace {

bool ext_kind(FieldKind k) {
    return k == FieldKind::PrimeFieldExtOmega || k == FieldKind::RationalsExtOmega;
}

bool prime_kind(FieldKind k) {
    return k == FieldKind::PrimeField || k == FieldKind::PrimeFieldExtOmega;
}

std::uint64_t add_m(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
    std::uint64_t s = x + y;
    return s >= p ? s - p : s;
}

std::uint64_t sub_m(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
    return x >= y ? x - y : x + p - y;
}

std::uint64_t neg_m(std::uint64_t x, std::uint64_t p) { return x == 0 ? 0 : p - x; }

std::string rat_str(const mpq_class& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool digit(char c) { return c >= '0' && c <= '9'; }

} // namespace

const char* field_kind_name(FieldKind k) noexcept {
    switch (k) {
    case FieldKind::Rationals: return "Rationals";
    case FieldKind::PrimeField: return "PrimeField";
    case FieldKind::PrimeFieldExtOmega: return "PrimeFieldExtOmega";
    case FieldKind::RationalsExtOmega: return "RationalsExtOmega";
    }
    return "Unknown";
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "Q")
        return {FieldKind::Rationals, 0};
    if (text == "Q(w)")
        return {FieldKind::RationalsExtOmega, 0};
    if (!text.empty() && text[0] == 'F') {
        std::size_t i = 1;
        unsigned __int128 p = 0;
        std::size_t start = i;
        while (i < text.size() && digit(text[i])) {
            p = p * 10 + static_cast<unsigned>(text[i] - '0');
            if (p > numtheory::kMaxModulus)
                raise(Errc::ModulusTooLarge,
                      "modulus in field spec '" + std::string(text) +
                          "' exceeds the supported bound 2^31-1");
            ++i;
        }
        if (i > start) {
            auto modulus = static_cast<std::uint64_t>(p);
            if (i == text.size())
                return {FieldKind::PrimeField, modulus};
            if (text.substr(i) == "(w)")
                return {FieldKind::PrimeFieldExtOmega, modulus};
        }
    }
    raise(Errc::BadFieldSpec, "unrecognized field spec '" + std::string(text) +
                                  "'; expected Q, Q(w), F<p>, or F<p>(w)");
}

std::string FieldSpec::str() const {
    switch (kind) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::RationalsExtOmega: return "Q(w)";
    case FieldKind::PrimeField: return "F" + std::to_string(p);
    case FieldKind::PrimeFieldExtOmega: return "F" + std::to_string(p) + "(w)";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement() : kind_(FieldKind::Rationals), p_(0), v_(RatPair{0, 0}) {}

FieldElement::FieldElement(FieldKind kind, std::uint64_t p, ModPair v)
    : kind_(kind), p_(p), v_(std::move(v)) {}

FieldElement::FieldElement(FieldKind kind, std::uint64_t p, RatPair v)
    : kind_(kind), p_(p), v_(std::move(v)) {}

void FieldElement::require_same(const FieldElement& x, const FieldElement& y) {
    if (x.kind_ != y.kind_ || x.p_ != y.p_)
        raise(Errc::MixedFields, "elements of " + x.field_spec().str() + " and " +
                                     y.field_spec().str() + " cannot be combined");
}

bool FieldElement::is_zero() const {
    if (const auto* m = std::get_if<ModPair>(&v_))
        return m->a == 0 && m->b == 0;
    const auto& r = std::get<RatPair>(v_);
    return sgn(r.a) == 0 && sgn(r.b) == 0;
}

bool FieldElement::is_one() const {
    if (const auto* m = std::get_if<ModPair>(&v_))
        return m->a == 1 && m->b == 0;
    const auto& r = std::get<RatPair>(v_);
    return r.a == 1 && sgn(r.b) == 0;
}

FieldElement FieldElement::operator-() const {
    if (const auto* m = std::get_if<ModPair>(&v_))
        return {kind_, p_, ModPair{neg_m(m->a, p_), neg_m(m->b, p_)}};
    const auto& r = std::get<RatPair>(v_);
    return {kind_, p_, RatPair{mpq_class(-r.a), mpq_class(-r.b)}};
}

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
    FieldElement::require_same(x, y);
    if (const auto* m = std::get_if<FieldElement::ModPair>(&x.v_)) {
        const auto& n = std::get<FieldElement::ModPair>(y.v_);
        return {x.kind_, x.p_,
                FieldElement::ModPair{add_m(m->a, n.a, x.p_), add_m(m->b, n.b, x.p_)}};
    }
    const auto& r = std::get<FieldElement::RatPair>(x.v_);
    const auto& s = std::get<FieldElement::RatPair>(y.v_);
    return {x.kind_, x.p_, FieldElement::RatPair{mpq_class(r.a + s.a), mpq_class(r.b + s.b)}};
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) { return x + (-y); }

// (a1 + b1 w)(a2 + b2 w) with w^2 = -1 - w:
//   a = a1 a2 - b1 b2,   b = a1 b2 + b1 a2 - b1 b2
FieldElement operator*(const FieldElement& x, const FieldElement& y) {
    FieldElement::require_same(x, y);
    if (const auto* m = std::get_if<FieldElement::ModPair>(&x.v_)) {
        const auto& n = std::get<FieldElement::ModPair>(y.v_);
        std::uint64_t p = x.p_;
        std::uint64_t aa = numtheory::mul_mod(m->a, n.a, p);
        std::uint64_t bb = numtheory::mul_mod(m->b, n.b, p);
        std::uint64_t ab = numtheory::mul_mod(m->a, n.b, p);
        std::uint64_t ba = numtheory::mul_mod(m->b, n.a, p);
        return {x.kind_, p,
                FieldElement::ModPair{sub_m(aa, bb, p), sub_m(add_m(ab, ba, p), bb, p)}};
    }
    const auto& r = std::get<FieldElement::RatPair>(x.v_);
    const auto& s = std::get<FieldElement::RatPair>(y.v_);
    return {x.kind_, x.p_,
            FieldElement::RatPair{mpq_class(r.a * s.a - r.b * s.b),
                                  mpq_class(r.a * s.b + r.b * s.a - r.b * s.b)}};
}

// Norm (a + b w)(a - b - b w) = a^2 - a b + b^2; the inverse is
// ((a - b) - b w) / norm. With b = 0 this is the plain base-field inverse.
FieldElement FieldElement::inverse() const {
    if (const auto* m = std::get_if<ModPair>(&v_)) {
        std::uint64_t p = p_;
        std::uint64_t norm = sub_m(add_m(numtheory::mul_mod(m->a, m->a, p),
                                         numtheory::mul_mod(m->b, m->b, p), p),
                                   numtheory::mul_mod(m->a, m->b, p), p);
        if (norm == 0)
            raise(Errc::DivisionByZero, "inverse of 0 in " + field_spec().str());
        std::uint64_t ninv = numtheory::inv_mod(norm, p);
        return {kind_, p,
                ModPair{numtheory::mul_mod(sub_m(m->a, m->b, p), ninv, p),
                        numtheory::mul_mod(neg_m(m->b, p), ninv, p)}};
    }
    const auto& r = std::get<RatPair>(v_);
    mpq_class norm(r.a * r.a - r.a * r.b + r.b * r.b);
    if (sgn(norm) == 0)
        raise(Errc::DivisionByZero, "inverse of 0 in " + field_spec().str());
    return {kind_, p_, RatPair{mpq_class((r.a - r.b) / norm), mpq_class(-r.b / norm)}};
}

bool operator==(const FieldElement& x, const FieldElement& y) {
    if (x.kind_ != y.kind_ || x.p_ != y.p_)
        return false;
    if (const auto* m = std::get_if<FieldElement::ModPair>(&x.v_))
        return *m == std::get<FieldElement::ModPair>(y.v_);
    const auto& r = std::get<FieldElement::RatPair>(x.v_);
    const auto& s = std::get<FieldElement::RatPair>(y.v_);
    return r.a == s.a && r.b == s.b;
}

int FieldElement::cmp(const FieldElement& x, const FieldElement& y) {
    if (x.kind_ != y.kind_)
        return static_cast<int>(x.kind_) < static_cast<int>(y.kind_) ? -1 : 1;
    if (x.p_ != y.p_)
        return x.p_ < y.p_ ? -1 : 1;
    if (const auto* m = std::get_if<ModPair>(&x.v_)) {
        const auto& n = std::get<ModPair>(y.v_);
        if (m->a != n.a)
            return m->a < n.a ? -1 : 1;
        if (m->b != n.b)
            return m->b < n.b ? -1 : 1;
        return 0;
    }
    const auto& r = std::get<RatPair>(x.v_);
    const auto& s = std::get<RatPair>(y.v_);
    if (int c = ::cmp(r.a, s.a); c != 0)
        return c < 0 ? -1 : 1;
    if (int c = ::cmp(r.b, s.b); c != 0)
        return c < 0 ? -1 : 1;
    return 0;
}

FieldElement FieldElement::zero_like(const FieldElement& x) {
    if (std::holds_alternative<ModPair>(x.v_))
        return {x.kind_, x.p_, ModPair{0, 0}};
    return {x.kind_, x.p_, RatPair{0, 0}};
}

FieldElement FieldElement::one_like(const FieldElement& x) {
    if (std::holds_alternative<ModPair>(x.v_))
        return {x.kind_, x.p_, ModPair{1, 0}};
    return {x.kind_, x.p_, RatPair{1, 0}};
}

std::string FieldElement::str() const {
    if (const auto* m = std::get_if<ModPair>(&v_)) {
        if (!ext_kind(kind_) || m->b == 0)
            return std::to_string(m->a);
        std::string w = std::to_string(m->b) + "*w";
        return m->a == 0 ? w : std::to_string(m->a) + "+" + w;
    }
    const auto& r = std::get<RatPair>(v_);
    if (!ext_kind(kind_) || sgn(r.b) == 0)
        return rat_str(r.a);
    if (sgn(r.a) == 0)
        return rat_str(r.b) + "*w";
    if (sgn(r.b) < 0)
        return rat_str(r.a) + "-" + rat_str(mpq_class(-r.b)) + "*w";
    return rat_str(r.a) + "+" + rat_str(r.b) + "*w";
}

// ---------------------------------------------------------------------------
// Field

Field::Field(const FieldSpec& spec) : spec_(spec) {
    if (prime_kind(spec_.kind)) {
        if (spec_.p > numtheory::kMaxModulus)
            raise(Errc::ModulusTooLarge, "modulus " + std::to_string(spec_.p) +
                                             " exceeds the supported bound 2^31-1");
        if (!numtheory::is_prime(spec_.p))
            raise(Errc::CompositeModulus,
                  "modulus " + std::to_string(spec_.p) + " is not prime");
        if (spec_.kind == FieldKind::PrimeFieldExtOmega &&
            (spec_.p == 3 || spec_.p % 3 == 1))
            raise(Errc::InvalidExtension,
                  "T^2+T+1 has a root mod " + std::to_string(spec_.p) +
                      ", so F" + std::to_string(spec_.p) + "[T]/(T^2+T+1) is not a field");
    } else {
        spec_.p = 0;
    }
}

std::uint64_t Field::characteristic() const noexcept {
    return prime_kind(spec_.kind) ? spec_.p : 0;
}

bool Field::finite() const noexcept { return prime_kind(spec_.kind); }

std::optional<std::uint64_t> Field::size() const {
    if (spec_.kind == FieldKind::PrimeField)
        return spec_.p;
    if (spec_.kind == FieldKind::PrimeFieldExtOmega)
        return spec_.p * spec_.p;
    return std::nullopt;
}

FieldElement Field::zero() const {
    if (prime_kind(spec_.kind))
        return {spec_.kind, spec_.p, FieldElement::ModPair{0, 0}};
    return {spec_.kind, 0, FieldElement::RatPair{0, 0}};
}

FieldElement Field::one() const { return from_integer(1); }

FieldElement Field::from_integer(long long v) const {
    if (prime_kind(spec_.kind)) {
        auto r = static_cast<__int128>(v) % static_cast<__int128>(spec_.p);
        if (r < 0)
            r += spec_.p;
        return {spec_.kind, spec_.p, FieldElement::ModPair{static_cast<std::uint64_t>(r), 0}};
    }
    return {spec_.kind, 0, FieldElement::RatPair{mpq_class(static_cast<long>(v)), 0}};
}

FieldElement Field::from_ratio(long long num, long long den) const {
    if (den == 0)
        raise(Errc::DivisionByZero, "zero denominator");
    return from_integer(num) * from_integer(den).inverse();
}

FieldElement Field::omega() const {
    if (!ext_kind(spec_.kind))
        throw std::logic_error("omega() requested of non-extension field " + name());
    if (prime_kind(spec_.kind))
        return {spec_.kind, spec_.p, FieldElement::ModPair{0, 1}};
    return {spec_.kind, 0, FieldElement::RatPair{0, 1}};
}

void Field::require(const FieldElement& x) const {
    if (!contains(x))
        raise(Errc::MixedFields, "element of " + x.field_spec().str() +
                                     " used with field " + name());
}

std::vector<FieldElement> Field::elements() const {
    if (!finite())
        raise(Errc::InfiniteField, name() + " cannot be enumerated");
    std::vector<FieldElement> out;
    if (spec_.kind == FieldKind::PrimeField) {
        out.reserve(spec_.p);
        for (std::uint64_t a = 0; a < spec_.p; ++a)
            out.push_back(FieldElement{spec_.kind, spec_.p, FieldElement::ModPair{a, 0}});
    } else {
        out.reserve(spec_.p * spec_.p);
        for (std::uint64_t a = 0; a < spec_.p; ++a)
            for (std::uint64_t b = 0; b < spec_.p; ++b)
                out.push_back(FieldElement{spec_.kind, spec_.p, FieldElement::ModPair{a, b}});
    }
    return out;
}

RootReport Field::roots_of_phi3() const {
    RootReport report;
    switch (spec_.kind) {
    case FieldKind::Rationals:
        break;
    case FieldKind::PrimeField: {
        for (std::uint64_t r : numtheory::phi3_roots_mod_p(spec_.p))
            report.roots.push_back(FieldElement{spec_.kind, spec_.p, FieldElement::ModPair{r, 0}});
        report.double_root = spec_.p == 3;
        break;
    }
    case FieldKind::PrimeFieldExtOmega:
    case FieldKind::RationalsExtOmega: {
        FieldElement w = omega();
        report.roots = {w, -(w + one())};
        std::sort(report.roots.begin(), report.roots.end());
        break;
    }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Scalar literals

namespace {

std::size_t scan_digits(std::string_view text, std::size_t pos, std::string& out) {
    std::size_t i = pos;
    while (i < text.size() && digit(text[i]))
        ++i;
    out.assign(text.substr(pos, i - pos));
    return i;
}

} // namespace

std::optional<std::pair<FieldElement, std::size_t>>
Field::scan_scalar(std::string_view text, std::size_t pos) const {
    const bool ext = ext_kind(spec_.kind);

    // Builds a base-field value from sign + digit strings.
    auto make_base = [&](bool neg, const std::string& num,
                         const std::optional<std::string>& den) -> FieldElement {
        FieldElement v = zero();
        if (prime_kind(spec_.kind)) {
            std::uint64_t a = 0;
            for (char c : num)
                a = (a * 10 + static_cast<std::uint64_t>(c - '0')) % spec_.p;
            v = FieldElement{spec_.kind, spec_.p, FieldElement::ModPair{a, 0}};
            if (den) {
                std::uint64_t d = 0;
                for (char c : *den)
                    d = (d * 10 + static_cast<std::uint64_t>(c - '0')) % spec_.p;
                if (d == 0)
                    raise(Errc::DivisionByZero,
                          "denominator " + *den + " is 0 in " + name());
                v = v * FieldElement{spec_.kind, spec_.p, FieldElement::ModPair{d, 0}}.inverse();
            }
        } else {
            mpq_class q;
            if (den) {
                mpz_class d(*den);
                if (sgn(d) == 0)
                    raise(Errc::DivisionByZero, "zero denominator in scalar literal");
                q = mpq_class(mpz_class(num), d);
                q.canonicalize();
            } else {
                q = mpq_class(mpz_class(num));
            }
            v = FieldElement{spec_.kind, 0, FieldElement::RatPair{q, 0}};
        }
        return neg ? -v : v;
    };

    // Scans "digits(/digits)?" starting at q; nullopt when no digits there.
    auto scan_number = [&](std::size_t q)
        -> std::optional<std::tuple<std::string, std::optional<std::string>, std::size_t>> {
        std::string num;
        std::size_t r = scan_digits(text, q, num);
        if (num.empty())
            return std::nullopt;
        std::optional<std::string> den;
        if (r < text.size() && text[r] == '/') {
            std::string d;
            std::size_t r2 = scan_digits(text, r + 1, d);
            if (d.empty())
                raise(Errc::ScalarParseError,
                      "expected digits after '/' at position " + std::to_string(r + 1));
            den = d;
            r = r2;
        }
        return {{num, den, r}};
    };

    std::size_t q = pos;
    bool neg = false;
    if (q < text.size() && (text[q] == '+' || text[q] == '-')) {
        neg = text[q] == '-';
        ++q;
    }

    if (ext && q < text.size() && text[q] == 'w') {
        FieldElement w = omega();
        return {{neg ? -w : w, q + 1}};
    }

    auto base_num = scan_number(q);
    if (!base_num)
        return std::nullopt; // not a scalar here (a lone sign is left unconsumed)
    auto [num, den, after] = *base_num;
    FieldElement base = make_base(neg, num, den);
    q = after;

    if (!ext)
        return {{base, q}};

    // "<coef>*w": the number was the omega coefficient.
    if (q + 1 < text.size() && text[q] == '*' && text[q + 1] == 'w')
        return {{base * omega(), q + 2}};

    // "a+b*w" continuation; folded in only when the tail really ends in w.
    if (q < text.size() && (text[q] == '+' || text[q] == '-')) {
        bool wneg = text[q] == '-';
        std::size_t r = q + 1;
        if (r < text.size() && text[r] == 'w') {
            FieldElement w = omega();
            return {{base + (wneg ? -w : w), r + 1}};
        }
        if (auto wnum = scan_number(r)) {
            auto [num2, den2, after2] = *wnum;
            if (after2 + 1 < text.size() && text[after2] == '*' && text[after2 + 1] == 'w')
                return {{base + make_base(wneg, num2, den2) * omega(), after2 + 2}};
        }
    }
    return {{base, q}};
}

FieldElement Field::parse_scalar(std::string_view text) const {
    std::size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin])))
        ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1])))
        --end;
    std::string_view body = text.substr(begin, end - begin);
    auto scanned = scan_scalar(body, 0);
    if (!scanned)
        raise(Errc::ScalarParseError,
              "'" + std::string(text) + "' is not a scalar literal of " + name());
    if (scanned->second != body.size())
        raise(Errc::ScalarParseError, "trailing characters in scalar literal '" +
                                          std::string(text) + "' of " + name());
    return scanned->first;
}

} // namespace snakealg
