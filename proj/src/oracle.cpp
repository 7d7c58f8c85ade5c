#include "snakealg/oracle.hpp"

#include "snakealg/errors.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace snakealg::oracle {

namespace {

struct HeadVectorLess {
    bool operator()(const HeadVector& x, const HeadVector& y) const {
        const std::size_t n = std::min(x.size(), y.size());
        for (std::size_t i = 0; i < n; ++i) {
            int c = FieldElement::cmp(x[i], y[i]);
            if (c != 0)
                return c < 0;
        }
        return x.size() < y.size();
    }
};

bool vec_is_zero(const HeadVector& v) {
    for (const auto& a : v)
        if (!a.is_zero())
            return false;
    return true;
}

std::uint64_t checked_budget(const Field& field, int heads) {
    if (!field.finite())
        raise(Errc::InfiniteField,
              "exhaustive enumeration needs a finite field, got " + field.name());
    if (heads < 2 || heads > 6)
        raise(Errc::UnsupportedHeadCount,
              "the oracle supports 2 to 6 heads, got " + std::to_string(heads));
    unsigned __int128 total = 1;
    for (int i = 0; i < heads; ++i) {
        total *= *field.size();
        if (total > kVectorBudget)
            raise(Errc::BudgetExceeded, "|K|^n exceeds the enumeration budget " +
                                            std::to_string(kVectorBudget) + " for " +
                                            field.name() + " with " + std::to_string(heads) +
                                            " heads");
    }
    return static_cast<std::uint64_t>(total);
}

HeadVector vec_add(const HeadVector& x, const HeadVector& y) {
    HeadVector out(x);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += y[i];
    return out;
}

HeadVector vec_scale(const FieldElement& c, const HeadVector& x) {
    HeadVector out(x);
    for (auto& a : out)
        a = c * a;
    return out;
}

// Sampled closure checks; the extensional representation is only trusted
// after these pass.
void verify_ideal_set(const Field& field, const std::vector<HeadVector>& members, int heads) {
    if (members.empty())
        throw std::logic_error("ideal set without members");
    auto member = [&](const HeadVector& v) {
        auto it = std::lower_bound(members.begin(), members.end(), v, HeadVectorLess{});
        return it != members.end() && *it == v;
    };
    for (const auto& m : members)
        if (!head_sum(m).is_zero())
            throw std::logic_error("ideal set member with nonzero augmentation");
    HeadVector zero(static_cast<std::size_t>(heads), field.zero());
    if (!member(zero))
        throw std::logic_error("ideal set does not contain the zero vector");

    std::vector<FieldElement> scalars = field.elements();
    std::mt19937_64 rng(0x1dea15e7u);
    auto pick = [&](std::size_t bound) {
        return static_cast<std::size_t>(rng() % bound);
    };
    for (int trial = 0; trial < 20; ++trial) {
        const HeadVector& m1 = members[pick(members.size())];
        const HeadVector& m2 = members[pick(members.size())];
        HeadVector x(static_cast<std::size_t>(heads), field.zero());
        for (auto& a : x)
            a = scalars[pick(scalars.size())];
        if (!member(convolve_heads(x, m1)))
            throw std::logic_error("ideal set not closed under convolution");
        if (!member(vec_add(m1, m2)))
            throw std::logic_error("ideal set not closed under addition");
        if (!member(vec_scale(scalars[pick(scalars.size())], m1)))
            throw std::logic_error("ideal set not closed under scalars");
    }
}

// Scalar normalization: scale so the first nonzero coordinate is 1.
HeadVector scalar_normalize(const HeadVector& h) {
    for (const auto& a : h)
        if (!a.is_zero())
            return vec_scale(a.inverse(), h);
    return h;
}

// Canonical representative of h under scalar multiples and cyclic shifts;
// vectors in one class generate the same principal ideal.
HeadVector class_normalize(const HeadVector& h) {
    const int n = static_cast<int>(h.size());
    HeadVector best = scalar_normalize(h);
    for (int i = 1; i < n; ++i) {
        HeadVector cand = scalar_normalize(cyclic_shift(h, i));
        if (HeadVectorLess{}(cand, best))
            best = cand;
    }
    return best;
}

// I + J = union of the cosets I + b over b in J.
IdealSet sum_sets(const Field& field, const IdealSet& x, const IdealSet& y, int heads) {
    std::set<HeadVector, HeadVectorLess> acc(x.members().begin(), x.members().end());
    for (const auto& b : y.members()) {
        if (acc.count(b))
            continue;
        for (const auto& a : x.members())
            acc.insert(vec_add(a, b));
    }
    return IdealSet::from_members(field, std::vector<HeadVector>(acc.begin(), acc.end()), heads);
}

} // namespace

IdealSet IdealSet::from_members(const Field& field, std::vector<HeadVector> sorted_members,
                                int heads) {
    verify_ideal_set(field, sorted_members, heads);
    IdealSet s;
    s.members_ = std::move(sorted_members);
    return s;
}

void for_each_vector(const Field& field, int heads,
                     const std::function<void(const HeadVector&)>& fn) {
    checked_budget(field, heads);
    std::vector<FieldElement> scalars = field.elements();
    std::vector<std::size_t> idx(static_cast<std::size_t>(heads), 0);
    HeadVector v(static_cast<std::size_t>(heads), field.zero());
    for (;;) {
        for (std::size_t i = 0; i < idx.size(); ++i)
            v[i] = scalars[idx[i]];
        fn(v);
        std::size_t i = idx.size();
        while (i-- > 0) {
            if (++idx[i] < scalars.size())
                break;
            idx[i] = 0;
            if (i == 0)
                return;
        }
    }
}

std::vector<HeadVector> enumerate_vectors(const Field& field, int heads) {
    std::vector<HeadVector> out;
    out.reserve(checked_budget(field, heads));
    for_each_vector(field, heads, [&](const HeadVector& v) { out.push_back(v); });
    return out;
}

bool IdealSet::contains(const HeadVector& v) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), v, HeadVectorLess{});
    return it != members_.end() && *it == v;
}

bool operator==(const IdealSet& x, const IdealSet& y) { return x.members_ == y.members_; }

bool operator<(const IdealSet& x, const IdealSet& y) {
    if (x.size() != y.size())
        return x.size() < y.size();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x.members_[i] == y.members_[i])
            continue;
        return HeadVectorLess{}(x.members_[i], y.members_[i]);
    }
    return false;
}

IdealSet principal_ideal_set(const Field& field, const HeadVector& h) {
    const int n = static_cast<int>(h.size());
    checked_budget(field, n);
    for (const auto& a : h)
        field.require(a);
    if (!head_sum(h).is_zero())
        raise(Errc::NotAugmentationZero,
              "principal ideal sets are built from augmentation-zero vectors only");

    std::vector<FieldElement> scalars = field.elements();
    std::vector<HeadVector> span{HeadVector(static_cast<std::size_t>(n), field.zero())};
    for (int i = 0; i < n; ++i) {
        HeadVector s = cyclic_shift(h, i);
        bool inside = std::any_of(span.begin(), span.end(),
                                  [&](const HeadVector& v) { return v == s; });
        if (inside)
            continue;
        // s outside the current subspace: the extension is collision-free.
        std::vector<HeadVector> grown;
        grown.reserve(span.size() * scalars.size());
        for (const auto& c : scalars) {
            HeadVector cs = vec_scale(c, s);
            for (const auto& v : span)
                grown.push_back(vec_add(v, cs));
        }
        span = std::move(grown);
    }
    std::sort(span.begin(), span.end(), HeadVectorLess{});
    return IdealSet::from_members(field, std::move(span), n);
}

IdealSet augmentation_zero_set(const Field& field, int heads) {
    checked_budget(field, heads);
    std::vector<HeadVector> members;
    // Free coordinates 0..n-2; the last one balances the sum to zero.
    std::vector<FieldElement> scalars = field.elements();
    std::vector<std::size_t> idx(static_cast<std::size_t>(heads - 1), 0);
    for (;;) {
        HeadVector v(static_cast<std::size_t>(heads), field.zero());
        FieldElement sum = field.zero();
        for (std::size_t i = 0; i < idx.size(); ++i) {
            v[i] = scalars[idx[i]];
            sum += v[i];
        }
        v.back() = -sum;
        members.push_back(std::move(v));
        std::size_t i = idx.size();
        bool done = true;
        while (i-- > 0) {
            if (++idx[i] < scalars.size()) {
                done = false;
                break;
            }
            idx[i] = 0;
        }
        if (done)
            break;
    }
    std::sort(members.begin(), members.end(), HeadVectorLess{});
    return IdealSet::from_members(field, std::move(members), heads);
}

std::vector<IdealSet> all_ideals_in_augmentation(const Field& field, int heads) {
    checked_budget(field, heads);
    std::set<HeadVector, HeadVectorLess> seen;
    std::vector<IdealSet> ideals;

    auto add_ideal = [&](IdealSet s) {
        if (std::find(ideals.begin(), ideals.end(), s) != ideals.end())
            return false;
        if (ideals.size() >= kIdealBudget)
            raise(Errc::BudgetExceeded, "more than " + std::to_string(kIdealBudget) +
                                            " distinct ideals in the closure");
        ideals.push_back(std::move(s));
        return true;
    };

    IdealSet aug = augmentation_zero_set(field, heads);
    for (const auto& h : aug.members()) {
        HeadVector norm = class_normalize(h);
        if (!seen.insert(norm).second)
            continue;
        add_ideal(principal_ideal_set(field, norm));
    }

    // Close under pairwise ideal sum; the sum of two ideals is an ideal.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < ideals.size(); ++i) {
            for (std::size_t j = i + 1; j < ideals.size(); ++j) {
                const IdealSet& a = ideals[i];
                const IdealSet& b = ideals[j];
                const IdealSet& small = a.size() <= b.size() ? a : b;
                const IdealSet& large = a.size() <= b.size() ? b : a;
                bool nested = std::all_of(small.members().begin(), small.members().end(),
                                          [&](const HeadVector& v) { return large.contains(v); });
                if (nested)
                    continue;
                if (add_ideal(sum_sets(field, large, small, heads)))
                    changed = true;
            }
        }
    }

    std::sort(ideals.begin(), ideals.end());
    return ideals;
}

std::optional<HeadVector> find_generator(const Field& field, const IdealSet& ideal) {
    for (const auto& g : ideal.members()) {
        if (vec_is_zero(g)) {
            if (ideal.size() == 1)
                return g; // the zero ideal
            continue;
        }
        if (principal_ideal_set(field, g) == ideal)
            return g;
    }
    return std::nullopt;
}

namespace {

// The least generator of a proper n=3 ideal has the unit-leading form
// [1, b, -(b+1)] with b a root of T^2+T+1; recover b for the descriptor.
std::optional<FieldElement> root_of_generator(const HeadVector& g) {
    if (g.size() != 3 || g[0].is_zero())
        return std::nullopt;
    FieldElement b = g[1] * g[0].inverse();
    if (!delta(b).is_zero())
        return std::nullopt;
    return b;
}

std::string vec_str(const HeadVector& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0)
            s += ",";
        s += v[i].str();
    }
    return s + "]";
}

} // namespace

CrossCheckReport cross_check(const Field& field, int heads) {
    if (heads != 2 && heads != 3)
        raise(Errc::UnsupportedHeadCount,
              "cross-checking against the analytic answers requires 2 or 3 heads");

    CrossCheckReport report;
    std::vector<IdealSet> all = all_ideals_in_augmentation(field, heads);
    IdealSet aug = augmentation_zero_set(field, heads);

    auto check = [&](const std::string& name, bool pass, std::string detail) {
        report.checks.push_back(CheckLine{name, pass, std::move(detail)});
    };

    bool zero_found = std::any_of(all.begin(), all.end(),
                                  [](const IdealSet& s) { return s.size() == 1; });
    check("zero ideal discovered", zero_found, "");
    bool full_found = std::find(all.begin(), all.end(), aug) != all.end();
    check("full singular part discovered", full_found,
          "all " + std::to_string(aug.size()) + " augmentation-zero vectors form an ideal");

    std::vector<IdealSet> proper;
    for (const auto& s : all)
        if (s.size() > 1 && !(s == aug))
            proper.push_back(s);
    report.proper_ideal_count = static_cast<int>(proper.size());

    std::vector<IdealDescriptor> analytic = enumerate_singular_ideals(field, heads);
    check("proper ideal count matches the analytic enumeration",
          proper.size() == analytic.size(),
          "exhaustive " + std::to_string(proper.size()) + ", analytic " +
              std::to_string(analytic.size()));

    std::vector<IdealSet> analytic_sets;
    for (const auto& d : analytic) {
        IdealSet s = principal_ideal_set(field, d.generator);
        bool found = std::find(proper.begin(), proper.end(), s) != proper.end();
        check("analytic ideal <" + vec_str(d.generator) + "> discovered by exhaustion", found,
              std::to_string(s.size()) + " members");
        analytic_sets.push_back(std::move(s));
    }

    bool no_extras = std::all_of(proper.begin(), proper.end(), [&](const IdealSet& s) {
        return std::find(analytic_sets.begin(), analytic_sets.end(), s) != analytic_sets.end();
    });
    check("no ideals beyond the analytic enumeration", no_extras, "");

    bool all_principal = true;
    for (const auto& s : all) {
        auto g = find_generator(field, s);
        if (!g) {
            all_principal = false;
            break;
        }
        if (s.size() > 1 && !(s == aug)) {
            IdealDescriptor d;
            d.generator = *g;
            d.root = root_of_generator(*g);
            d.kind = IdealKind::ProperSingular;
            d.provenance = Provenance::Oracle;
            report.ideals.push_back(std::move(d));
        }
    }
    check("every discovered ideal is principal", all_principal, "");

    report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const CheckLine& c) { return c.pass; });
    return report;
}

ExploreReport explore(const Field& field, int heads) {
    ExploreReport report;
    std::vector<IdealSet> all = all_ideals_in_augmentation(field, heads);
    IdealSet aug = augmentation_zero_set(field, heads);

    report.all_principal = true;
    for (const auto& s : all) {
        report.ideal_sizes.push_back(s.size());
        auto g = find_generator(field, s);
        if (!g)
            report.all_principal = false;
        if (s.size() > 1 && !(s == aug)) {
            ++report.proper_ideal_count;
            if (g)
                report.generators.push_back(*g);
        }
    }
    return report;
}

} // namespace snakealg::oracle
