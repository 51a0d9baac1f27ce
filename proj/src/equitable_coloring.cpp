#include "vaeq/equitable_coloring.hpp"

#include <algorithm>
#include <numeric>

#include "vaeq/verifier.hpp"

namespace vaeq {

using detail::ceil_div;

const char* to_string(DTrigger trigger) noexcept {
    switch (trigger) {
    case DTrigger::CONDITION_I:
        return "CONDITION_I";
    case DTrigger::CONDITION_II:
        return "CONDITION_II";
    case DTrigger::CONDITION_II_VACUOUS:
        return "CONDITION_II_VACUOUS";
    }
    return "?";
}

DSearchResult smallest_valid_d(const PartiteSpec& spec, int q) {
    if (q < 1)
        throw PreconditionViolated("smallest_valid_d requires q >= 1");
    const int start = ceil_div(spec.totalVertices(), q);
    const int limit = std::max(start, spec.maxPartSize() + 1);
    for (int d = start; d <= limit; ++d) {
        int nondivisible = 0;
        bool properII = false;
        bool vacuousII = false;
        for (int n : spec.sizes()) {
            if (n % d != 0)
                ++nondivisible;
            const int quot = n / d;
            if (quot == 0)
                vacuousII = true;
            else if (n > (d + 1) * quot)
                properII = true;
        }
        if (nondivisible >= 2)
            return DSearchResult{d, DTrigger::CONDITION_I, start};
        if (properII)
            return DSearchResult{d, DTrigger::CONDITION_II, start};
        if (vacuousII)
            return DSearchResult{d, DTrigger::CONDITION_II_VACUOUS, start};
    }
    // Unreachable: at d = max n_i + 1 every part satisfies n_i mod d != 0 and
    // there are at least two parts.
    throw Error("d-search failed to terminate");
}

int compute_p(const PartiteSpec& spec, int q) {
    const FeasibilityVerdict verdict = coloring_feasible(spec, q);
    if (!verdict.feasible)
        throw PreconditionViolated("p(q: ...) is undefined: no equitable " + std::to_string(q) +
                                   "-coloring exists (" + verdict.rule + ")");
    const DSearchResult ds = smallest_valid_d(spec, q);
    int p = 0;
    for (int n : spec.sizes())
        p += ceil_div(n, ds.d);
    return p;
}

FeasibilityVerdict coloring_feasible(const PartiteSpec& spec, int q) {
    if (q < 1)
        throw PreconditionViolated("coloring_feasible requires q >= 1");
    const int n = spec.totalVertices();
    if (q >= n)
        return FeasibilityVerdict{true, "small-classes", q, q,
                                  "q >= N: singleton classes, padded with empty ones"};

    const int s = class_size_profile(spec, q).smallSize; // >= 1 here
    long long lowerSum = 0;
    long long upperSum = 0;
    for (int i = 0; i < spec.partCount(); ++i) {
        const int size = spec.partSize(i);
        const int lo = ceil_div(size, s + 1);
        const int hi = size / s;
        if (lo > hi)
            return FeasibilityVerdict{false, "part-split", lo, hi,
                                      "part " + std::to_string(i) + " of size " + std::to_string(size) +
                                          " cannot be cut into classes of size " + std::to_string(s) + " or " +
                                          std::to_string(s + 1)};
        lowerSum += lo;
        upperSum += hi;
    }
    if (q < lowerSum)
        return FeasibilityVerdict{false, "min-classes", lowerSum, q,
                                  "the parts force at least " + std::to_string(lowerSum) + " classes"};
    if (q > upperSum)
        return FeasibilityVerdict{false, "max-classes", q, upperSum,
                                  "the parts admit at most " + std::to_string(upperSum) + " classes"};
    return FeasibilityVerdict{true, "class-count-interval", lowerSum, upperSum,
                              "q lies in the feasible class-count interval"};
}

PartAllocation allocate_classes(const PartiteSpec& spec, int q) {
    const FeasibilityVerdict verdict = coloring_feasible(spec, q);
    if (!verdict.feasible)
        throw Infeasible("no equitable " + std::to_string(q) + "-coloring exists: " + verdict.detail);
    const int n = spec.totalVertices();
    if (q > n)
        throw PreconditionViolated("allocate_classes requires q <= N");

    const int k = spec.partCount();
    const int s = class_size_profile(spec, q).smallSize;
    PartAllocation alloc;
    alloc.smallSize = s;
    alloc.classCount.resize(static_cast<std::size_t>(k));
    alloc.bigCount.resize(static_cast<std::size_t>(k));
    alloc.lowerBound.resize(static_cast<std::size_t>(k));
    alloc.upperBound.resize(static_cast<std::size_t>(k));

    int assigned = 0;
    for (int i = 0; i < k; ++i) {
        alloc.lowerBound[static_cast<std::size_t>(i)] = ceil_div(spec.partSize(i), s + 1);
        alloc.upperBound[static_cast<std::size_t>(i)] = spec.partSize(i) / s;
        alloc.classCount[static_cast<std::size_t>(i)] = alloc.lowerBound[static_cast<std::size_t>(i)];
        assigned += alloc.lowerBound[static_cast<std::size_t>(i)];
    }
    int surplus = q - assigned;
    for (int i : spec.partsBySizeDesc()) {
        if (surplus == 0)
            break;
        const int room = alloc.upperBound[static_cast<std::size_t>(i)] - alloc.classCount[static_cast<std::size_t>(i)];
        const int take = std::min(surplus, room);
        alloc.classCount[static_cast<std::size_t>(i)] += take;
        surplus -= take;
    }
    if (surplus != 0)
        throw Error("water-filling failed to place all classes");
    for (int i = 0; i < k; ++i)
        alloc.bigCount[static_cast<std::size_t>(i)] =
            spec.partSize(i) - alloc.classCount[static_cast<std::size_t>(i)] * s;
    return alloc;
}

Partition construct_equitable_coloring(const PartiteSpec& spec, int q) {
    const FeasibilityVerdict verdict = coloring_feasible(spec, q);
    if (!verdict.feasible)
        throw Infeasible("no equitable " + std::to_string(q) + "-coloring exists: " + verdict.detail);

    const int k = spec.partCount();
    const int n = spec.totalVertices();
    Partition partition{spec, {}};
    partition.classes.reserve(static_cast<std::size_t>(q));

    if (q > n) {
        for (int i = 0; i < k; ++i)
            for (int t = 0; t < spec.partSize(i); ++t)
                partition.classes.push_back(single_part_class(k, i, 1));
        for (int e = 0; e < q - n; ++e)
            partition.classes.push_back(ColorClass{std::vector<int>(static_cast<std::size_t>(k), 0), std::nullopt});
        return partition;
    }

    const PartAllocation alloc = allocate_classes(spec, q);
    for (int i = 0; i < k; ++i) {
        const int big = alloc.bigCount[static_cast<std::size_t>(i)];
        const int total = alloc.classCount[static_cast<std::size_t>(i)];
        for (int t = 0; t < big; ++t)
            partition.classes.push_back(single_part_class(k, i, alloc.smallSize + 1));
        for (int t = big; t < total; ++t)
            partition.classes.push_back(single_part_class(k, i, alloc.smallSize));
    }
    return partition;
}

namespace {

// Replace the classes of part j by newCount classes of sizes smallSize and
// smallSize+1. Untouched classes keep their order; new classes go last.
Partition resplit_part(const PartiteSpec& spec, const Partition& partition, int j, int newCount, int smallSize) {
    const int n = spec.partSize(j);
    const int bigCount = n - newCount * smallSize;
    if (newCount < 1 || smallSize < 1 || bigCount < 0 || bigCount > newCount)
        throw Error("re-split does not fit part " + std::to_string(j));
    Partition out{spec, {}};
    for (const ColorClass& cls : partition.classes)
        if (cls.counts[static_cast<std::size_t>(j)] == 0)
            out.classes.push_back(cls);
    for (int t = 0; t < newCount; ++t)
        out.classes.push_back(single_part_class(spec.partCount(), j, smallSize + (t < bigCount ? 1 : 0)));
    return out;
}

Partition checked_reduction(const PartiteSpec& spec, Partition candidate, int expectedClasses) {
    const VerificationReport report = verify_tree_coloring(spec, candidate, 0);
    if (!report.isTreeColoring || candidate.classCount() != expectedClasses)
        throw Error("reduction produced an invalid coloring: " + report.firstViolation);
    return candidate;
}

} // namespace

Partition reduce_coloring(const PartiteSpec& spec, const Partition& partition) {
    const VerificationReport report = verify_tree_coloring(spec, partition, 0);
    const int r = partition.classCount();
    if (r < 2)
        throw PreconditionViolated("cannot reduce a coloring with fewer than two classes");
    if (!report.isTreeColoring)
        throw PreconditionViolated("input is not a proper equitable coloring: " + report.firstViolation);

    const int n = spec.totalVertices();
    const int k = spec.partCount();

    // Empty classes exist only when r > N; dropping one is the whole step.
    for (std::size_t ci = 0; ci < partition.classes.size(); ++ci) {
        if (partition.classes[ci].size() == 0) {
            Partition out{spec, {}};
            for (std::size_t cj = 0; cj < partition.classes.size(); ++cj)
                if (cj != ci)
                    out.classes.push_back(partition.classes[cj]);
            return checked_reduction(spec, std::move(out), r - 1);
        }
    }

    const int b = ceil_div(n, r); // larger of the two class sizes
    std::vector<int> perPart(static_cast<std::size_t>(k), 0);
    for (const ColorClass& cls : partition.classes)
        ++perPart[static_cast<std::size_t>(cls.singlePart())];

    // A part with slack: more classes than ceil(n_j/b) re-split into sizes b-1/b.
    for (int j = 0; j < k; ++j)
        if (perPart[static_cast<std::size_t>(j)] > ceil_div(spec.partSize(j), b))
            return checked_reduction(
                spec, resplit_part(spec, partition, j, perPart[static_cast<std::size_t>(j)] - 1, b - 1), r - 1);

    // Otherwise sizes b/b+1 work for part j provided every other class has
    // size exactly b, so the one-larger classes cannot clash with a b-1 class.
    for (int j = 0; j < k; ++j) {
        const int rj = perPart[static_cast<std::size_t>(j)];
        if (rj < 2)
            continue;
        const long long lowest = static_cast<long long>(rj - 1) * b;
        const long long highest = static_cast<long long>(rj - 1) * (b + 1);
        if (spec.partSize(j) < lowest || spec.partSize(j) > highest)
            continue;
        bool othersAllSizeB = true;
        for (int i = 0; i < k && othersAllSizeB; ++i)
            if (i != j && spec.partSize(i) != perPart[static_cast<std::size_t>(i)] * b)
                othersAllSizeB = false;
        if (othersAllSizeB)
            return checked_reduction(spec, resplit_part(spec, partition, j, rj - 1, b), r - 1);
    }

    throw ReductionImpossible("no single-part re-split yields an equitable " + std::to_string(r - 1) +
                              "-coloring");
}

int equitable_threshold(const PartiteSpec& spec) {
    return compute_p(spec, spec.totalVertices());
}

} // namespace vaeq
