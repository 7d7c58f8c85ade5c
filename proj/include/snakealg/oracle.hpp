#pragma once

#include "snakealg/singular.hpp"

#include <functional>

// Brute-force verification over small finite fields, independent of the
// analytic path: enumerate the head group algebra K[Z/nZ], build every ideal
// inside the augmentation-zero subspace extensionally, and cross-check
// counts, generators and principality against the analytic answers.

namespace snakealg::oracle {

inline constexpr std::uint64_t kVectorBudget = 1'000'000; // cap on |K|^n
inline constexpr std::size_t kIdealBudget = 10'000;       // cap on distinct ideals

// Applies fn to all |K|^n head vectors in canonical lexicographic order.
void for_each_vector(const Field& field, int heads,
                     const std::function<void(const HeadVector&)>& fn);

// Materialized variant of the above.
std::vector<HeadVector> enumerate_vectors(const Field& field, int heads);

// A finite set of head vectors closed under addition, scalar multiplication
// and convolution by arbitrary vectors; members sorted in canonical order.
// Closure is spot-checked with sampled convolutions on construction.
class IdealSet {
public:
    // Verifies the closure invariants (sampled) before accepting the set.
    static IdealSet from_members(const Field& field, std::vector<HeadVector> sorted_members,
                                 int heads);

    const std::vector<HeadVector>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool contains(const HeadVector& v) const;

    friend bool operator==(const IdealSet& x, const IdealSet& y);
    friend bool operator<(const IdealSet& x, const IdealSet& y); // by (size, members)

private:
    IdealSet() = default;
    std::vector<HeadVector> members_;
};

// {x * h : x in K^n}, built as the additive and scalar span of the cyclic
// shifts of h (the shifts are the convolutions e_i * h, and every x * h is
// a K-combination of them). Requires head_sum(h) = 0 and a finite field.
IdealSet principal_ideal_set(const Field& field, const HeadVector& h);

// The full augmentation-zero subspace as an IdealSet.
IdealSet augmentation_zero_set(const Field& field, int heads);

// Every ideal of K[Z/nZ] contained in the augmentation-zero subspace:
// all distinct principal ideals of augmentation-zero vectors, closed under
// pairwise ideal sum to a fixpoint. Deterministically ordered by
// (size, members).
std::vector<IdealSet> all_ideals_in_augmentation(const Field& field, int heads);

// The least member that generates the whole set, found by exhaustion;
// nullopt would mean a non-principal ideal.
std::optional<HeadVector> find_generator(const Field& field, const IdealSet& ideal);

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CrossCheckReport {
    bool pass = false;
    int proper_ideal_count = 0;
    std::vector<CheckLine> checks;
    std::vector<IdealDescriptor> ideals; // oracle-provenance proper ideals
};

// Compares the exhaustively discovered proper ideals with the analytic
// enumeration; n = 2 or 3.
CrossCheckReport cross_check(const Field& field, int heads);

// Count-only report for any supported n (2..6); asserts nothing beyond the
// internal closure checks.
struct ExploreReport {
    int proper_ideal_count = 0;
    std::vector<std::size_t> ideal_sizes;  // all discovered ideals, ascending
    bool all_principal = false;
    std::vector<HeadVector> generators;    // least generator per proper ideal
};

ExploreReport explore(const Field& field, int heads);

} // namespace snakealg::oracle
