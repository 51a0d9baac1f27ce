#include "vaeq/tree_arboricity.hpp"

#include <algorithm>
#include <utility>

#include "vaeq/equitable_coloring.hpp"
#include "vaeq/verifier.hpp"

namespace vaeq {

using detail::ceil_div;

const char* to_string(Va1Method method) noexcept {
    switch (method) {
    case Va1Method::CLOSED_FORM_TABLE1:
        return "CLOSED_FORM_TABLE1";
    case Va1Method::CLOSED_FORM_TABLE2:
        return "CLOSED_FORM_TABLE2";
    case Va1Method::GENERAL_ENGINE:
        return "GENERAL_ENGINE";
    }
    return "?";
}

Mod3Case Mod3Case::of(int m, int n) {
    if (m < 0 || n < 0)
        throw PreconditionViolated("Mod3Case requires nonnegative sizes");
    return Mod3Case{m / 3, m % 3, n / 3, n % 3};
}

FeasibilityVerdict tree_feasible_q1(const PartiteSpec& spec, int q) {
    if (q < 1)
        throw PreconditionViolated("tree_feasible_q1 requires q >= 1");
    const ClassSizeProfile profile = class_size_profile(spec, q);
    if (profile.smallSize <= 1)
        return FeasibilityVerdict{true, "pair-split", 0, 0,
                                  "classes of size <= 2 induce maximum degree <= 1"};
    if (profile.smallSize == 2) {
        long long tripleCapacity = 0;
        for (int n : spec.sizes())
            tripleCapacity += n / 3;
        if (profile.bigClasses > tripleCapacity)
            return FeasibilityVerdict{false, "triple-capacity", profile.bigClasses, tripleCapacity,
                                      "every class of size 3 must lie inside a single part"};
        return FeasibilityVerdict{true, "triple-capacity", profile.bigClasses, tripleCapacity,
                                  "the size-3 classes fit inside parts; pairs go anywhere"};
    }
    // All classes have size >= 3, so each must be independent: this is exactly
    // proper equitable feasibility.
    return coloring_feasible(spec, q);
}

namespace {

// nb within-part 3-sets carved largest-remaining-part first (capped at
// floor(n_i/3) per part), then every leftover vertex paired: inside parts
// first, odd remainders chained across parts in index order.
Partition build_triples_and_pairs(const PartiteSpec& spec, int q, const ClassSizeProfile& profile) {
    const int k = spec.partCount();
    Partition partition{spec, {}};
    partition.classes.reserve(static_cast<std::size_t>(q));

    std::vector<int> remaining = spec.sizes();
    std::vector<int> triples(static_cast<std::size_t>(k), 0);
    for (int t = 0; t < profile.bigClasses; ++t) {
        int best = -1;
        for (int i = 0; i < k; ++i) {
            if (triples[static_cast<std::size_t>(i)] >= spec.partSize(i) / 3)
                continue;
            if (best < 0 || remaining[static_cast<std::size_t>(i)] > remaining[static_cast<std::size_t>(best)])
                best = i;
        }
        if (best < 0 || remaining[static_cast<std::size_t>(best)] < 3)
            throw Error("triple carving ran out of room despite a feasible verdict");
        partition.classes.push_back(single_part_class(k, best, 3));
        remaining[static_cast<std::size_t>(best)] -= 3;
        ++triples[static_cast<std::size_t>(best)];
    }

    int pendingPart = -1;
    for (int i = 0; i < k; ++i) {
        while (remaining[static_cast<std::size_t>(i)] >= 2) {
            partition.classes.push_back(single_part_class(k, i, 2));
            remaining[static_cast<std::size_t>(i)] -= 2;
        }
        if (remaining[static_cast<std::size_t>(i)] == 1) {
            if (pendingPart < 0) {
                pendingPart = i;
            } else {
                ColorClass pair;
                pair.counts.assign(static_cast<std::size_t>(k), 0);
                pair.counts[static_cast<std::size_t>(pendingPart)] = 1;
                pair.counts[static_cast<std::size_t>(i)] = 1;
                partition.classes.push_back(std::move(pair));
                pendingPart = -1;
            }
            remaining[static_cast<std::size_t>(i)] = 0;
        }
    }
    if (pendingPart >= 0)
        throw Error("leftover vertex count was odd");
    return partition;
}

// nb 2-sets and ns singletons; pairs carved inside parts first, then across.
Partition build_pairs_and_singles(const PartiteSpec& spec, int q, const ClassSizeProfile& profile) {
    const int k = spec.partCount();
    Partition partition{spec, {}};
    partition.classes.reserve(static_cast<std::size_t>(q));

    std::vector<int> remaining = spec.sizes();
    int pairsLeft = profile.bigClasses;
    for (int i = 0; i < k && pairsLeft > 0; ++i) {
        while (remaining[static_cast<std::size_t>(i)] >= 2 && pairsLeft > 0) {
            partition.classes.push_back(single_part_class(k, i, 2));
            remaining[static_cast<std::size_t>(i)] -= 2;
            --pairsLeft;
        }
    }
    int pendingPart = -1;
    for (int i = 0; i < k && pairsLeft > 0; ++i) {
        if (remaining[static_cast<std::size_t>(i)] != 1)
            continue;
        if (pendingPart < 0) {
            pendingPart = i;
        } else {
            ColorClass pair;
            pair.counts.assign(static_cast<std::size_t>(k), 0);
            pair.counts[static_cast<std::size_t>(pendingPart)] = 1;
            pair.counts[static_cast<std::size_t>(i)] = 1;
            partition.classes.push_back(std::move(pair));
            remaining[static_cast<std::size_t>(pendingPart)] = 0;
            remaining[static_cast<std::size_t>(i)] = 0;
            pendingPart = -1;
            --pairsLeft;
        }
    }
    if (pairsLeft > 0)
        throw Error("pair carving ran out of vertices despite a feasible verdict");
    for (int i = 0; i < k; ++i)
        for (int t = 0; t < remaining[static_cast<std::size_t>(i)]; ++t)
            partition.classes.push_back(single_part_class(k, i, 1));
    return partition;
}

} // namespace

Partition construct_tree_coloring_q1(const PartiteSpec& spec, int q) {
    const FeasibilityVerdict verdict = tree_feasible_q1(spec, q);
    if (!verdict.feasible)
        throw Infeasible("no equitable (" + std::to_string(q) + ",1)-tree-coloring exists: " + verdict.detail);

    const int n = spec.totalVertices();
    const ClassSizeProfile profile = class_size_profile(spec, q);
    if (profile.smallSize >= 3)
        return construct_equitable_coloring(spec, q);
    if (profile.smallSize == 2)
        return build_triples_and_pairs(spec, q, profile);
    if (q > n)
        return construct_equitable_coloring(spec, q); // singletons plus empty classes
    return build_pairs_and_singles(spec, q, profile);
}

Va1Result va1_general(const PartiteSpec& spec) {
    const int n = spec.totalVertices();
    // Every q >= ceil(N/2) is feasible: classes there have size <= 2, except
    // q = N/2 exactly where all classes are pairs; no monotonicity below that
    // point is assumed.
    for (int q = ceil_div(n, 2); q >= 1; --q)
        if (!tree_feasible_q1(spec, q).feasible)
            return Va1Result{q + 1, Va1Method::GENERAL_ENGINE, q};
    return Va1Result{1, Va1Method::GENERAL_ENGINE, std::nullopt};
}

Va1Result va1_bipartite_closed(int m, int n) {
    if (m < 1 || n < 1)
        throw PreconditionViolated("va1_bipartite_closed requires positive part sizes");
    if (m > n)
        std::swap(m, n);
    Va1Result result;
    result.method = Va1Method::CLOSED_FORM_TABLE1;

    if (m == 1) {
        result.value = ceil_div(n + 2, 3);
        return result;
    }
    if (m == 2) {
        result.value = ceil_div(n + 3, 3);
        return result;
    }

    // Both quotients are >= 1 from here on. The rows depend only on the
    // remainder pair, so match it unordered; the formulas are symmetric.
    const Mod3Case c = Mod3Case::of(m, n);
    const int b = c.quotientM;
    const int cc = c.quotientN;
    const int lowRem = std::min(c.remainderM, c.remainderN);
    const int highRem = std::max(c.remainderM, c.remainderN);
    const PartiteSpec spec({m, n});

    if (lowRem == 0 && highRem == 2)
        result.value = compute_p(spec, b + cc + 1);
    else if (lowRem >= 1 && highRem == 2)
        result.value = b + cc + 2;
    else
        result.value = compute_p(spec, b + cc); // remainders (0,0), (0,1), (1,1)
    return result;
}

Va1Result va1_balanced_closed(int k, int n) {
    if (k < 2)
        throw PreconditionViolated("va1_balanced_closed requires k >= 2");
    if (n < 1)
        throw PreconditionViolated("va1_balanced_closed requires n >= 1");
    if (k == 2) {
        Va1Result result = va1_bipartite_closed(n, n);
        result.method = Va1Method::CLOSED_FORM_TABLE2;
        return result;
    }

    Va1Result result;
    result.method = Va1Method::CLOSED_FORM_TABLE2;
    if (n <= 2) {
        result.value = ceil_div(k * n, 2);
        return result;
    }
    const PartiteSpec spec(std::vector<int>(static_cast<std::size_t>(k), n));
    const int b = n / 3;
    switch (n % 3) {
    case 0:
        result.value = compute_p(spec, k * b);
        break;
    case 1:
        result.value = k * b + ceil_div(k, 2);
        break;
    default:
        result.value = k * b + k;
        break;
    }
    return result;
}

} // namespace vaeq
