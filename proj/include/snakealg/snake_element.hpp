#pragma once

#include "snakealg/body_map.hpp"

#include <optional>
#include <vector>

// Elements of the Steinberg algebra of the n-headed snake (n = 2 or 3) in
// normal form: the vector of head values (f(0), ..., f(n-1)) plus the body
// function on X \ {0}, stored as a canonical trie whose leftmost leaf is the
// germ of the body at 0. The class invariant links the two parts:
//
//     germ_at_zero(body) == heads[0] + ... + heads[n-1]
//
// which is exactly membership in the algebra (the cylinder part of an
// element vanishes near 0) and is re-checked after every operation.

namespace snakealg {

using HeadVector = std::vector<FieldElement>;

// One user-level summand: coeff times the cylinder Z(word); a head tag k
// replaces head 0 of that cylinder by head k, which only makes sense when
// the cylinder contains 0, i.e. when the word is all-l.
struct Term {
    FieldElement coeff;
    Word word;
    std::optional<int> head_tag;
};

// Cyclic convolution of head vectors: out[k] = sum over i+j = k (mod n) of
// x[i] * y[j]. This is the head part of the algebra product for every n.
HeadVector convolve_heads(const HeadVector& x, const HeadVector& y);

// The augmentation: sum of the coordinates.
FieldElement head_sum(const HeadVector& h);

HeadVector cyclic_shift(const HeadVector& h, int by);

class SnakeElement {
public:
    static SnakeElement from_terms(const Field& field, int heads, const std::vector<Term>& terms);
    static SnakeElement unit(const Field& field, int heads);

    // sum of coeffs[i] * 1_{X_i}; heads count = coeffs.size().
    static SnakeElement bracket(const Field& field, const HeadVector& coeffs);

    static SnakeElement linear_combine(const FieldElement& c1, const SnakeElement& f1,
                                       const FieldElement& c2, const SnakeElement& f2);
    SnakeElement scaled(const FieldElement& c) const;
    SnakeElement convolve(const SnakeElement& other) const;

    int head_count() const noexcept { return static_cast<int>(heads_.size()); }
    const Field& field() const noexcept { return field_; }
    const HeadVector& heads() const noexcept { return heads_; }
    const BodyMap& body() const noexcept { return body_; }

    FieldElement head_value(int i) const; // throws HeadIndexOutOfRange
    FieldElement body_value(const PointDescriptor& pt) const { return body_.evaluate(pt); }
    FieldElement augmentation() const { return head_sum(heads_); }

    bool is_zero() const;

    // Mixed fields or head counts compare unequal rather than throwing.
    friend bool operator==(const SnakeElement& x, const SnakeElement& y);
    friend bool operator!=(const SnakeElement& x, const SnakeElement& y) { return !(x == y); }

private:
    SnakeElement(Field field, HeadVector heads, BodyMap body);

    Field field_;
    HeadVector heads_;
    BodyMap body_;
};

} // namespace snakealg
