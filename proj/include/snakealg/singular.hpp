#pragma once

#include "snakealg/snake_element.hpp"

// Singularity detection and the classification of singular ideals. A snake
// element is singular exactly when its body vanishes; the head vectors of
// singular elements then carry all of the ideal structure, since convolving
// anything with a singular element kills the body. Ideal membership is a
// circulant linear system over the coefficient field, solved exactly.

namespace snakealg {

enum class SingularFamily {
    Zero,        // the zero element
    ZeroLeading, // k * [0, 1, -1]
    UnitLeading, // k * [1, b, -(b+1)]
};

const char* singular_family_name(SingularFamily f) noexcept;

struct SingularClass {
    SingularFamily family = SingularFamily::Zero;
    FieldElement k;
    std::optional<FieldElement> b; // UnitLeading only

    // The head vector this classification describes (n = 3).
    HeadVector reconstruct() const;
};

enum class IdealKind { FullSingular, ProperSingular };
enum class Provenance { Analytic, Oracle };

const char* ideal_kind_name(IdealKind k) noexcept;
const char* provenance_name(Provenance p) noexcept;

struct IdealDescriptor {
    HeadVector generator;
    std::optional<FieldElement> root; // b with b^2+b+1 = 0; ProperSingular only
    IdealKind kind = IdealKind::ProperSingular;
    Provenance provenance = Provenance::Analytic;
};

// True iff the body vanishes identically; the germ invariant then forces the
// head sum to zero as well.
bool is_singular(const SnakeElement& f);

// n = 3 only; requires is_singular(f).
SingularClass classify_singular(const SnakeElement& f);

// b^2 + b + 1 in b's field; zero exactly on the generators of proper
// singular ideals.
FieldElement delta(const FieldElement& b);

// Decides candidate in <generator> for singular elements by solving the
// circulant system circ(gen) * x = cand exactly; returns a witness x with
// x * generator = candidate, or nullopt. Free variables are set to zero.
std::optional<HeadVector> ideal_membership(const SnakeElement& candidate,
                                           const SnakeElement& generator);

// The generator of the full singular part: [1,-1] (n=2) or [0,1,-1] (n=3).
IdealDescriptor full_singular_descriptor(const Field& field, int heads);

// The proper singular ideals, one per root of T^2+T+1, roots ascending.
std::vector<IdealDescriptor> enumerate_singular_ideals(const Field& field, int heads);

struct SimplicityVerdict {
    bool s_simple = false;
    std::vector<FieldElement> roots;
    std::string reason;
};

SimplicityVerdict is_s_simple(const Field& field, int heads);

} // namespace snakealg
