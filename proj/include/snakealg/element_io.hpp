#pragma once

#include "snakealg/snake_element.hpp"

// Text form of snake-algebra elements.
//
//   element := ('+'|'-')? term (('+'|'-') term)*
//   term    := scalar '*' atom | scalar | atom
//   atom    := 'X' tag? | 'Z(' word ')' tag? | '[' scalar (',' scalar)* ']'
//   tag     := '@' digit          word := [lu]*
//
// '[a0,...,a_{n-1}]' is sugar for sum a_i * X@i; a bare scalar means
// scalar * X@0. Scalars are the field's literals (integers, "a/b", and
// "a+b*w" forms over the omega extensions) and are munched greedily: a
// '+'/'-' immediately followed by a "b*w" tail belongs to the scalar, so
// "1+2*w*Z(u)" is (1+2w)*Z(u); write the sign after whitespace ("1 + ...")
// to separate terms instead.

namespace snakealg {

std::vector<Term> parse_element(const Field& field, int heads, std::string_view text);

SnakeElement parse_to_element(const Field& field, int heads, std::string_view text);

// Normal form: the head bracket, then the body remainder (body minus its
// germ) decomposed into the maximal disjoint cylinders avoiding 0, in
// lexicographic word order. parse(print(f)) reproduces f exactly.
std::string print_element(const SnakeElement& f);

std::string print_head_vector(const HeadVector& h);

} // namespace snakealg
