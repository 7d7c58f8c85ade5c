#include "snakealg/body_map.hpp"

#include "snakealg/errors.hpp"

namespace snakealg {

Word::Word(std::string_view text) : s_(text) {
    if (s_.size() > kMaxLength)
        raise(Errc::WordTooLong, "word of length " + std::to_string(s_.size()) +
                                     " exceeds the depth limit " + std::to_string(kMaxLength));
    for (char c : s_)
        if (c != 'l' && c != 'u')
            raise(Errc::SyntaxError, std::string("invalid word character '") + c +
                                         "'; words are over {l,u}");
}

bool Word::all_l() const {
    for (char c : s_)
        if (c != 'l')
            return false;
    return true;
}

BodyMap::NodePtr BodyMap::make_leaf(FieldElement value) {
    auto n = std::make_shared<Node>();
    n->value = std::move(value);
    return n;
}

BodyMap::NodePtr BodyMap::make_node(NodePtr l, NodePtr u) {
    if (l->leaf() && u->leaf() && l->value == u->value)
        return l;
    auto n = std::make_shared<Node>();
    n->l = std::move(l);
    n->u = std::move(u);
    return n;
}

BodyMap BodyMap::constant(const FieldElement& value) { return BodyMap(make_leaf(value)); }

BodyMap BodyMap::indicator(const Field& field, const Word& w, const FieldElement& coeff) {
    field.require(coeff);
    NodePtr zero = make_leaf(field.zero());
    NodePtr node = make_leaf(coeff);
    for (std::size_t i = w.size(); i-- > 0;) {
        if (w.at(i) == 'l')
            node = make_node(std::move(node), zero);
        else
            node = make_node(zero, std::move(node));
    }
    return BodyMap(std::move(node));
}

BodyMap::NodePtr BodyMap::combine(const NodePtr& x, const NodePtr& y, bool multiply) {
    if (x->leaf() && y->leaf())
        return make_leaf(multiply ? x->value * y->value : x->value + y->value);
    const NodePtr& xl = x->leaf() ? x : x->l;
    const NodePtr& xu = x->leaf() ? x : x->u;
    const NodePtr& yl = y->leaf() ? y : y->l;
    const NodePtr& yu = y->leaf() ? y : y->u;
    return make_node(combine(xl, yl, multiply), combine(xu, yu, multiply));
}

BodyMap BodyMap::add(const BodyMap& other) const {
    return BodyMap(combine(root_, other.root_, false));
}

BodyMap BodyMap::mul(const BodyMap& other) const {
    return BodyMap(combine(root_, other.root_, true));
}

BodyMap::NodePtr BodyMap::scale_node(const NodePtr& n, const FieldElement& c) {
    if (n->leaf())
        return make_leaf(c * n->value);
    return make_node(scale_node(n->l, c), scale_node(n->u, c));
}

BodyMap BodyMap::scale(const FieldElement& c) const { return BodyMap(scale_node(root_, c)); }

FieldElement BodyMap::evaluate(const PointDescriptor& pt) const {
    const Node* n = root_.get();
    std::size_t i = 0;
    while (!n->leaf() && i < pt.word.size()) {
        n = (pt.word.at(i) == 'l' ? n->l : n->u).get();
        ++i;
    }
    while (!n->leaf())
        n = (pt.tail == Tail::AllL ? n->l : n->u).get();
    return n->value;
}

FieldElement BodyMap::germ_at_zero() const {
    const Node* n = root_.get();
    while (!n->leaf())
        n = n->l.get();
    return n->value;
}

bool BodyMap::is_zero() const { return root_->leaf() && root_->value.is_zero(); }

std::size_t BodyMap::node_depth(const NodePtr& n) {
    if (n->leaf())
        return 0;
    return 1 + std::max(node_depth(n->l), node_depth(n->u));
}

std::size_t BodyMap::depth() const { return node_depth(root_); }

void BodyMap::for_each_leaf(
    const std::function<void(const Word&, const FieldElement&)>& fn) const {
    std::string path;
    auto walk = [&](auto&& self, const NodePtr& n) -> void {
        if (n->leaf()) {
            fn(Word(path), n->value);
            return;
        }
        path.push_back('l');
        self(self, n->l);
        path.back() = 'u';
        self(self, n->u);
        path.pop_back();
    };
    walk(walk, root_);
}

bool BodyMap::node_equal(const NodePtr& x, const NodePtr& y) {
    if (x == y)
        return true;
    if (x->leaf() != y->leaf())
        return false;
    if (x->leaf())
        return x->value == y->value;
    return node_equal(x->l, y->l) && node_equal(x->u, y->u);
}

bool operator==(const BodyMap& x, const BodyMap& y) {
    return BodyMap::node_equal(x.root_, y.root_);
}

} // namespace snakealg
