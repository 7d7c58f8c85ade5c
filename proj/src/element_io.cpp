#include "snakealg/element_io.hpp"

#include "snakealg/errors.hpp"

#include <cctype>

namespace snakealg {

namespace {

class ElementParser {
public:
    ElementParser(const Field& field, int heads, std::string_view text)
        : field_(field), n_(heads), text_(text) {}

    std::vector<Term> run() {
        std::vector<Term> terms;
        skip_ws();
        if (pos_ == text_.size())
            fail("empty element expression");
        bool negate = false;
        if (eat('-'))
            negate = true;
        else
            eat('+');
        parse_term(terms, negate);
        skip_ws();
        while (pos_ < text_.size()) {
            bool neg;
            if (eat('+'))
                neg = false;
            else if (eat('-'))
                neg = true;
            else
                fail("expected '+' or '-'");
            parse_term(terms, neg);
            skip_ws();
        }
        return terms;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        raise(Errc::SyntaxError,
              what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void parse_term(std::vector<Term>& terms, bool negate) {
        skip_ws();
        if (auto scanned = field_.scan_scalar(text_, pos_)) {
            FieldElement coeff = negate ? -scanned->first : scanned->first;
            pos_ = scanned->second;
            skip_ws();
            if (eat('*')) {
                skip_ws();
                parse_atom(terms, coeff, "expected X, Z( or [ after '*'");
            } else {
                terms.push_back(Term{coeff, Word(), std::nullopt});
            }
            return;
        }
        parse_atom(terms, negate ? -field_.one() : field_.one(),
                   "expected a scalar, X, Z( or [");
    }

    void parse_atom(std::vector<Term>& terms, const FieldElement& coeff, const char* expected) {
        skip_ws();
        if (pos_ >= text_.size())
            fail(expected);
        char c = text_[pos_];
        if (c == 'X') {
            ++pos_;
            terms.push_back(Term{coeff, Word(), parse_tag(Word())});
            return;
        }
        if (c == 'Z') {
            ++pos_;
            if (!eat('('))
                fail("expected '(' after Z");
            std::size_t start = pos_;
            while (pos_ < text_.size() && (text_[pos_] == 'l' || text_[pos_] == 'u'))
                ++pos_;
            Word w(text_.substr(start, pos_ - start));
            if (!eat(')'))
                fail("expected ')' closing the word");
            terms.push_back(Term{coeff, w, parse_tag(w)});
            return;
        }
        if (c == '[') {
            ++pos_;
            HeadVector entries;
            for (;;) {
                skip_ws();
                auto scanned = field_.scan_scalar(text_, pos_);
                if (!scanned)
                    fail("expected a scalar inside [...]");
                entries.push_back(scanned->first);
                pos_ = scanned->second;
                skip_ws();
                if (eat(','))
                    continue;
                if (eat(']'))
                    break;
                fail("expected ',' or ']'");
            }
            if (static_cast<int>(entries.size()) != n_)
                fail("bracket lists " + std::to_string(entries.size()) + " heads, expected " +
                     std::to_string(n_));
            for (std::size_t i = 0; i < entries.size(); ++i)
                terms.push_back(Term{coeff * entries[i], Word(), static_cast<int>(i)});
            return;
        }
        fail(expected);
    }

    std::optional<int> parse_tag(const Word& w) {
        if (pos_ >= text_.size() || text_[pos_] != '@')
            return std::nullopt;
        ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a digit after '@'");
        int tag = text_[pos_] - '0';
        ++pos_;
        if (tag >= n_)
            raise(Errc::InvalidHeadTag, "head tag @" + std::to_string(tag) +
                                            " is out of range for " + std::to_string(n_) +
                                            " heads");
        if (!w.all_l())
            raise(Errc::InvalidHeadTag,
                  "cylinder Z(" + w.str() +
                      ") does not contain the point 0, so it has no head-replaced copy");
        return tag;
    }

    const Field& field_;
    int n_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

std::vector<Term> parse_element(const Field& field, int heads, std::string_view text) {
    if (heads != 2 && heads != 3)
        raise(Errc::UnsupportedHeadCount,
              "element expressions support 2 or 3 heads, got " + std::to_string(heads));
    return ElementParser(field, heads, text).run();
}

SnakeElement parse_to_element(const Field& field, int heads, std::string_view text) {
    return SnakeElement::from_terms(field, heads, parse_element(field, heads, text));
}

std::string print_head_vector(const HeadVector& h) {
    std::string s = "[";
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (i > 0)
            s += ",";
        s += h[i].str();
    }
    return s + "]";
}

std::string print_element(const SnakeElement& f) {
    std::string out = print_head_vector(f.heads());

    // Body remainder: subtracting the germ leaves a function vanishing near
    // 0, whose canonical trie leaves are exactly the maximal disjoint
    // cylinders avoiding 0. DFS (l before u) yields lexicographic order.
    BodyMap remainder = f.body().add(BodyMap::constant(-f.augmentation()));
    const FieldElement zero = f.field().zero();
    remainder.for_each_leaf([&](const Word& w, const FieldElement& v) {
        if (v.is_zero())
            return;
        // cmp against zero reads the sign of the leading coefficient; prime
        // field representatives are never negative.
        if (FieldElement::cmp(v, zero) < 0)
            out += " - " + (-v).str() + "*Z(" + w.str() + ")";
        else
            out += " + " + v.str() + "*Z(" + w.str() + ")";
    });
    return out;
}

} // namespace snakealg
