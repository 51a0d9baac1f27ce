#include "vaeq/oracle.hpp"

#include <algorithm>
#include <functional>

#include "vaeq/verifier.hpp"

namespace vaeq {

using detail::ceil_div;

namespace {

// All count vectors with the given total, bounded by the part sizes, whose
// induced subgraph is a forest of maximum degree <= r. Sorted descending so
// that scanning with a non-decreasing index enumerates canonical multisets.
std::vector<std::vector<int>> admissible_signatures(const PartiteSpec& spec, int total, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> current(static_cast<std::size_t>(spec.partCount()), 0);
    const std::function<void(int, int)> extend = [&](int part, int remaining) {
        if (part == spec.partCount()) {
            if (remaining == 0) {
                const ClassShape shape = class_shape(current);
                if (shape.isForest && shape.maxDegree <= r)
                    out.push_back(current);
            }
            return;
        }
        const int maxTake = std::min(spec.partSize(part), remaining);
        for (int c = 0; c <= maxTake; ++c) {
            current[static_cast<std::size_t>(part)] = c;
            extend(part + 1, remaining - c);
        }
        current[static_cast<std::size_t>(part)] = 0;
    };
    extend(0, total);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

struct SignatureSearch {
    const PartiteSpec& spec;
    const std::vector<std::vector<int>>& bigs;
    const std::vector<std::vector<int>>& smalls;
    std::vector<int> capacity;
    std::vector<const std::vector<int>*> chosen;

    bool fits(const std::vector<int>& sig) const {
        for (std::size_t i = 0; i < sig.size(); ++i)
            if (sig[i] > capacity[i])
                return false;
        return true;
    }

    void take(const std::vector<int>& sig, int sign) {
        for (std::size_t i = 0; i < sig.size(); ++i)
            capacity[i] -= sign * sig[i];
    }

    // Canonical multiset order: class t+1 picks a signature at an index no
    // earlier than class t within its block, big classes first.
    bool place(int bigLeft, int smallLeft, std::size_t bigFrom, std::size_t smallFrom) {
        if (bigLeft == 0 && smallLeft == 0)
            return true;
        if (bigLeft > 0) {
            for (std::size_t i = bigFrom; i < bigs.size(); ++i) {
                if (!fits(bigs[i]))
                    continue;
                take(bigs[i], +1);
                chosen.push_back(&bigs[i]);
                if (place(bigLeft - 1, smallLeft, i, 0))
                    return true;
                chosen.pop_back();
                take(bigs[i], -1);
            }
            return false;
        }
        for (std::size_t i = smallFrom; i < smalls.size(); ++i) {
            if (!fits(smalls[i]))
                continue;
            take(smalls[i], +1);
            chosen.push_back(&smalls[i]);
            if (place(0, smallLeft - 1, bigFrom, i))
                return true;
            chosen.pop_back();
            take(smalls[i], -1);
        }
        return false;
    }
};

} // namespace

bool brute_force_feasible(const PartiteSpec& spec, int q, int r, const OracleCaps& caps) {
    if (q < 1)
        throw PreconditionViolated("brute_force_feasible requires q >= 1");
    if (r < 0)
        throw PreconditionViolated("brute_force_feasible requires r >= 0");
    const int n = spec.totalVertices();
    const int cap = r == 0 ? caps.independentCap : caps.treeCap;
    if (n > cap)
        throw CapExceeded("instance has " + std::to_string(n) + " vertices, oracle cap is " +
                          std::to_string(cap));

    // Singletons (padded with empty classes when q > N) always work.
    if (q >= n)
        return true;

    const ClassSizeProfile profile = class_size_profile(spec, q);
    const std::vector<std::vector<int>> bigs =
        profile.bigClasses > 0 ? admissible_signatures(spec, profile.smallSize + 1, r)
                               : std::vector<std::vector<int>>{};
    const std::vector<std::vector<int>> smalls =
        profile.smallClasses > 0 ? admissible_signatures(spec, profile.smallSize, r)
                                 : std::vector<std::vector<int>>{};
    if (profile.bigClasses > 0 && bigs.empty())
        return false;
    if (profile.smallClasses > 0 && smalls.empty())
        return false;

    SignatureSearch search{spec, bigs, smalls, spec.sizes(), {}};
    if (!search.place(profile.bigClasses, profile.smallClasses, 0, 0))
        return false;

    // Defense in depth: materialize the witness and re-verify it.
    Partition witness{spec, {}};
    witness.classes.reserve(search.chosen.size());
    for (const std::vector<int>* sig : search.chosen)
        witness.classes.push_back(ColorClass{*sig, std::nullopt});
    if (!verify_tree_coloring(spec, witness, r).isTreeColoring)
        throw Error("oracle witness failed verification");
    return true;
}

bool brute_force_equitable_colorable(const PartiteSpec& spec, int q, const OracleCaps& caps) {
    return brute_force_feasible(spec, q, 0, caps);
}

int brute_force_va1(const PartiteSpec& spec, const OracleCaps& caps) {
    const int n = spec.totalVertices();
    for (int q = ceil_div(n, 2); q >= 1; --q)
        if (!brute_force_feasible(spec, q, 1, caps))
            return q + 1;
    return 1;
}

std::vector<PartiteSpec> all_multipartite_specs(int totalVertices) {
    std::vector<PartiteSpec> specs;
    std::vector<int> parts;
    const std::function<void(int)> extend = [&](int remaining) {
        if (remaining == 0) {
            if (parts.size() >= 2)
                specs.emplace_back(parts);
            return;
        }
        for (int first = 1; first <= remaining; ++first) {
            parts.push_back(first);
            extend(remaining - first);
            parts.pop_back();
        }
    };
    if (totalVertices >= 2)
        extend(totalVertices);
    return specs;
}

} // namespace vaeq
