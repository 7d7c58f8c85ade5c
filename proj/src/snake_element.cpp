#include "snakealg/snake_element.hpp"

#include "snakealg/errors.hpp"

namespace snakealg {

namespace {

void require_supported_head_count(int n) {
    if (n != 2 && n != 3)
        raise(Errc::UnsupportedHeadCount,
              "snake elements support 2 or 3 heads, got " + std::to_string(n));
}

} // namespace

HeadVector convolve_heads(const HeadVector& x, const HeadVector& y) {
    if (x.size() != y.size() || x.empty())
        raise(Errc::MixedHeadCounts, "head vectors of lengths " + std::to_string(x.size()) +
                                         " and " + std::to_string(y.size()));
    const std::size_t n = x.size();
    HeadVector out(n, FieldElement::zero_like(x[0]));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[(i + j) % n] += x[i] * y[j];
    return out;
}

FieldElement head_sum(const HeadVector& h) {
    FieldElement s = FieldElement::zero_like(h.at(0));
    for (const auto& a : h)
        s += a;
    return s;
}

HeadVector cyclic_shift(const HeadVector& h, int by) {
    const int n = static_cast<int>(h.size());
    HeadVector out(h.size(), FieldElement::zero_like(h.at(0)));
    for (int k = 0; k < n; ++k)
        out[(k + by % n + n) % n] = h[k];
    return out;
}

SnakeElement::SnakeElement(Field field, HeadVector heads, BodyMap body)
    : field_(std::move(field)), heads_(std::move(heads)), body_(std::move(body)) {
    if (!(body_.germ_at_zero() == head_sum(heads_)))
        throw std::logic_error("germ invariant violated: body germ at 0 differs from the head sum");
}

SnakeElement SnakeElement::from_terms(const Field& field, int heads,
                                      const std::vector<Term>& terms) {
    require_supported_head_count(heads);
    HeadVector hv(static_cast<std::size_t>(heads), field.zero());
    BodyMap body = BodyMap::constant(field.zero());
    for (const auto& term : terms) {
        field.require(term.coeff);
        if (term.head_tag) {
            if (*term.head_tag < 0 || *term.head_tag >= heads)
                raise(Errc::InvalidHeadTag, "head tag @" + std::to_string(*term.head_tag) +
                                                " is out of range for " +
                                                std::to_string(heads) + " heads");
            if (!term.word.all_l())
                raise(Errc::InvalidHeadTag,
                      "cylinder Z(" + term.word.str() +
                          ") does not contain the point 0, so it has no head-replaced copy");
        }
        if (term.word.all_l())
            hv[static_cast<std::size_t>(term.head_tag.value_or(0))] += term.coeff;
        body = body.add(BodyMap::indicator(field, term.word, term.coeff));
    }
    return SnakeElement(field, std::move(hv), std::move(body));
}

SnakeElement SnakeElement::unit(const Field& field, int heads) {
    HeadVector coeffs(static_cast<std::size_t>(heads), field.zero());
    coeffs.at(0) = field.one();
    return bracket(field, coeffs);
}

SnakeElement SnakeElement::bracket(const Field& field, const HeadVector& coeffs) {
    std::vector<Term> terms;
    terms.reserve(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        terms.push_back(Term{coeffs[i], Word(), static_cast<int>(i)});
    return from_terms(field, static_cast<int>(coeffs.size()), terms);
}

SnakeElement SnakeElement::linear_combine(const FieldElement& c1, const SnakeElement& f1,
                                          const FieldElement& c2, const SnakeElement& f2) {
    if (f1.head_count() != f2.head_count())
        raise(Errc::MixedHeadCounts, "elements with " + std::to_string(f1.head_count()) +
                                         " and " + std::to_string(f2.head_count()) + " heads");
    f1.field_.require(c1);
    f1.field_.require(c2);
    HeadVector hv;
    hv.reserve(f1.heads_.size());
    for (std::size_t i = 0; i < f1.heads_.size(); ++i)
        hv.push_back(c1 * f1.heads_[i] + c2 * f2.heads_[i]);
    BodyMap body = f1.body_.scale(c1).add(f2.body_.scale(c2));
    return SnakeElement(f1.field_, std::move(hv), std::move(body));
}

SnakeElement SnakeElement::scaled(const FieldElement& c) const {
    return linear_combine(c, *this, field_.zero(), *this);
}

SnakeElement SnakeElement::convolve(const SnakeElement& other) const {
    if (head_count() != other.head_count())
        raise(Errc::MixedHeadCounts, "elements with " + std::to_string(head_count()) + " and " +
                                         std::to_string(other.head_count()) + " heads");
    if (!(field_ == other.field_))
        raise(Errc::MixedFields,
              "elements of " + field_.name() + " and " + other.field_.name());
    return SnakeElement(field_, convolve_heads(heads_, other.heads_),
                        body_.mul(other.body_));
}

FieldElement SnakeElement::head_value(int i) const {
    if (i < 0 || i >= head_count())
        raise(Errc::HeadIndexOutOfRange, "head index " + std::to_string(i) + " out of range [0, " +
                                             std::to_string(head_count()) + ")");
    return heads_[static_cast<std::size_t>(i)];
}

bool SnakeElement::is_zero() const {
    if (!body_.is_zero())
        return false;
    for (const auto& a : heads_)
        if (!a.is_zero())
            return false;
    return true;
}

bool operator==(const SnakeElement& x, const SnakeElement& y) {
    if (!(x.field_ == y.field_) || x.heads_.size() != y.heads_.size())
        return false;
    for (std::size_t i = 0; i < x.heads_.size(); ++i)
        if (!(x.heads_[i] == y.heads_[i]))
            return false;
    return x.body_ == y.body_;
}

} // namespace snakealg
