#include "snakealg/singular.hpp"

#include "snakealg/errors.hpp"

namespace snakealg {

namespace {

void require_head_count(int n) {
    if (n != 2 && n != 3)
        raise(Errc::UnsupportedHeadCount,
              "singular-ideal analysis supports 2 or 3 heads, got " + std::to_string(n));
}

std::string join_roots(const std::vector<FieldElement>& roots) {
    std::string s;
    for (const auto& r : roots) {
        if (!s.empty())
            s += ", ";
        s += r.str();
    }
    return s;
}

// Generator head vector [1, b, -(b+1)] for a root b.
HeadVector root_generator(const Field& field, const FieldElement& b) {
    return HeadVector{field.one(), b, -(b + field.one())};
}

} // namespace

const char* singular_family_name(SingularFamily f) noexcept {
    switch (f) {
    case SingularFamily::Zero: return "Zero";
    case SingularFamily::ZeroLeading: return "ZeroLeading";
    case SingularFamily::UnitLeading: return "UnitLeading";
    }
    return "Unknown";
}

const char* ideal_kind_name(IdealKind k) noexcept {
    return k == IdealKind::FullSingular ? "FullSingular" : "ProperSingular";
}

const char* provenance_name(Provenance p) noexcept {
    return p == Provenance::Analytic ? "Analytic" : "Oracle";
}

HeadVector SingularClass::reconstruct() const {
    FieldElement zero = FieldElement::zero_like(k);
    FieldElement one = FieldElement::one_like(k);
    switch (family) {
    case SingularFamily::Zero:
        return {zero, zero, zero};
    case SingularFamily::ZeroLeading:
        return {zero, k, -k};
    case SingularFamily::UnitLeading:
        return {k, k * *b, -(k * (*b + one))};
    }
    return {};
}

bool is_singular(const SnakeElement& f) {
    bool body_zero = f.body().is_zero();
    // The germ invariant makes the head sum vanish whenever the body does.
    if (body_zero && !f.augmentation().is_zero())
        throw std::logic_error("zero body with nonzero head sum: germ invariant broken");
    return body_zero;
}

SingularClass classify_singular(const SnakeElement& f) {
    if (f.head_count() != 3)
        raise(Errc::UnsupportedHeadCount,
              "classification of singular functions requires 3 heads");
    if (!is_singular(f))
        raise(Errc::NotSingular, "element has support on the body of the snake");
    const FieldElement& a0 = f.heads()[0];
    const FieldElement& a1 = f.heads()[1];
    if (f.is_zero())
        return SingularClass{SingularFamily::Zero, f.field().zero(), std::nullopt};
    if (a0.is_zero())
        return SingularClass{SingularFamily::ZeroLeading, a1, std::nullopt};
    return SingularClass{SingularFamily::UnitLeading, a0, a1 * a0.inverse()};
}

FieldElement delta(const FieldElement& b) {
    return b * b + b + FieldElement::one_like(b);
}

std::optional<HeadVector> ideal_membership(const SnakeElement& candidate,
                                           const SnakeElement& generator) {
    if (candidate.head_count() != generator.head_count())
        raise(Errc::MixedHeadCounts,
              "candidate has " + std::to_string(candidate.head_count()) +
                  " heads, generator has " + std::to_string(generator.head_count()));
    require_head_count(candidate.head_count());
    if (!(candidate.field() == generator.field()))
        raise(Errc::MixedFields, "candidate over " + candidate.field().name() +
                                     ", generator over " + generator.field().name());
    if (!is_singular(candidate) || !is_singular(generator))
        raise(Errc::NotSingular, "ideal membership is decided for singular elements only");

    // Membership in <gen> means candidate = x * gen for some head vector x,
    // since products with a singular element are supported on the heads and
    // the algebra is commutative and unital. In coordinates that is the
    // circulant system M x = cand with M[k][i] = gen[(k - i) mod n].
    const int n = candidate.head_count();
    const HeadVector& g = generator.heads();
    const HeadVector& c = candidate.heads();
    const FieldElement zero = FieldElement::zero_like(g[0]);

    std::vector<std::vector<FieldElement>> m(
        static_cast<std::size_t>(n), std::vector<FieldElement>(static_cast<std::size_t>(n) + 1, zero));
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i)
            m[k][i] = g[static_cast<std::size_t>(((k - i) % n + n) % n)];
        m[k][static_cast<std::size_t>(n)] = c[static_cast<std::size_t>(k)];
    }

    // Gauss-Jordan, columns left to right; free variables stay zero.
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pr = -1;
        for (int r = row; r < n; ++r) {
            if (!m[r][col].is_zero()) {
                pr = r;
                break;
            }
        }
        if (pr < 0)
            continue;
        std::swap(m[row], m[pr]);
        FieldElement inv = m[row][col].inverse();
        for (int j = col; j <= n; ++j)
            m[row][j] = m[row][j] * inv;
        for (int r = 0; r < n; ++r) {
            if (r == row || m[r][col].is_zero())
                continue;
            FieldElement factor = m[r][col];
            for (int j = col; j <= n; ++j)
                m[r][j] = m[r][j] - factor * m[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int r = row; r < n; ++r)
        if (!m[r][static_cast<std::size_t>(n)].is_zero())
            return std::nullopt;

    HeadVector x(static_cast<std::size_t>(n), zero);
    for (int r = 0; r < row; ++r)
        x[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] =
            m[r][static_cast<std::size_t>(n)];
    if (!(convolve_heads(x, g) == c))
        throw std::logic_error("circulant solve produced an invalid witness");
    return x;
}

IdealDescriptor full_singular_descriptor(const Field& field, int heads) {
    require_head_count(heads);
    IdealDescriptor d;
    d.kind = IdealKind::FullSingular;
    d.provenance = Provenance::Analytic;
    if (heads == 2)
        d.generator = {field.one(), -field.one()};
    else
        d.generator = {field.zero(), field.one(), -field.one()};
    return d;
}

std::vector<IdealDescriptor> enumerate_singular_ideals(const Field& field, int heads) {
    require_head_count(heads);
    std::vector<IdealDescriptor> out;
    if (heads == 2)
        return out; // the two-headed snake has no proper singular ideals
    for (const FieldElement& b : field.roots_of_phi3().roots) {
        IdealDescriptor d;
        d.generator = root_generator(field, b);
        d.root = b;
        d.kind = IdealKind::ProperSingular;
        d.provenance = Provenance::Analytic;
        out.push_back(std::move(d));
    }
    return out;
}

SimplicityVerdict is_s_simple(const Field& field, int heads) {
    require_head_count(heads);
    SimplicityVerdict v;
    if (heads == 2) {
        v.s_simple = true;
        v.reason = "the singular part of the two-headed snake algebra contains no proper "
                   "nonzero ideal over any coefficient field";
        return v;
    }
    RootReport report = field.roots_of_phi3();
    v.roots = report.roots;
    if (report.roots.empty()) {
        v.s_simple = true;
        v.reason = "T^2+T+1 has no root in " + field.name();
    } else {
        v.s_simple = false;
        v.reason = "T^2+T+1 has root(s) " + join_roots(report.roots) + " in " + field.name() +
                   "; each root b generates the proper singular ideal <[1,b,-(b+1)]>";
    }
    return v;
}

} // namespace snakealg
