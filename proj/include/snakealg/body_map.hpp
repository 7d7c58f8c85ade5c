#pragma once

#include "snakealg/field.hpp"

#include <functional>
#include <memory>

// Locally constant K-valued functions on the Cantor body X = {l,u}^N,
// stored as canonical finite binary tries. A leaf at path w gives the value
// on the cylinder Z(w); canonical form merges sibling leaves with equal
// values, so equal functions have structurally equal tries. The leftmost
// leaf (the all-l path) carries the germ of the function at the point
// 0 = lll... .

namespace snakealg {

class Word {
public:
    static constexpr std::size_t kMaxLength = 64;

    Word() = default; // the empty word: Z() = X
    explicit Word(std::string_view text);

    const std::string& str() const noexcept { return s_; }
    std::size_t size() const noexcept { return s_.size(); }
    char at(std::size_t i) const { return s_[i]; }

    // True iff the word is l^k, i.e. iff the cylinder Z(w) contains 0.
    bool all_l() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend bool operator<(const Word& x, const Word& y) { return x.s_ < y.s_; }

private:
    std::string s_;
};

enum class Tail { AllL, AllU };

// The eventually constant point word . tail^infinity. (epsilon, AllL) is the
// point 0; any (l^k, AllL) denotes the same point.
struct PointDescriptor {
    Word word;
    Tail tail = Tail::AllL;
};

class BodyMap {
public:
    static BodyMap constant(const FieldElement& value);

    // coeff on Z(w), zero elsewhere.
    static BodyMap indicator(const Field& field, const Word& w, const FieldElement& coeff);

    BodyMap add(const BodyMap& other) const;
    BodyMap mul(const BodyMap& other) const;
    BodyMap scale(const FieldElement& c) const;

    FieldElement evaluate(const PointDescriptor& pt) const;

    // The leftmost leaf: the limit of the function toward 0.
    FieldElement germ_at_zero() const;

    bool is_zero() const;
    std::size_t depth() const;

    // Visits every leaf of the canonical trie as (path, value), l-first.
    void for_each_leaf(const std::function<void(const Word&, const FieldElement&)>& fn) const;

    // Structural equality; complete for represented functions by canonicality.
    friend bool operator==(const BodyMap& x, const BodyMap& y);
    friend bool operator!=(const BodyMap& x, const BodyMap& y) { return !(x == y); }

private:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    struct Node {
        FieldElement value; // leaf payload; ignored on internal nodes
        NodePtr l, u;       // both set on internal nodes, both null on leaves
        bool leaf() const noexcept { return l == nullptr; }
    };

    explicit BodyMap(NodePtr root) : root_(std::move(root)) {}

    static NodePtr make_leaf(FieldElement value);
    static NodePtr make_node(NodePtr l, NodePtr u); // merges equal-value leaf pairs
    static NodePtr combine(const NodePtr& x, const NodePtr& y, bool multiply);
    static NodePtr scale_node(const NodePtr& n, const FieldElement& c);
    static bool node_equal(const NodePtr& x, const NodePtr& y);
    static std::size_t node_depth(const NodePtr& n);

    NodePtr root_;
};

} // namespace snakealg
