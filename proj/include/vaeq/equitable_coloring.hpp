#pragma once

#include <string>
#include <vector>

#include "vaeq/graph_model.hpp"

namespace vaeq {

/// Which condition ended the d-search. CONDITION_II_VACUOUS marks the
/// floor(n_i/d) = 0 case, which is treated as condition II holding with an
/// infinite ratio: a part smaller than d cannot be cut into classes of size
/// at least d at all.
enum class DTrigger {
    CONDITION_I,
    CONDITION_II,
    CONDITION_II_VACUOUS,
};

const char* to_string(DTrigger trigger) noexcept;

struct DSearchResult {
    int d = 0;
    DTrigger trigger = DTrigger::CONDITION_I;
    int start = 0; // the lower bound ceil(N/q) the scan began at
};

/// Smallest d >= ceil(N/q) such that either (I) at least two parts are not
/// divisible by d, or (II) some part has floor(n_i/d) >= 1 and
/// n_i / floor(n_i/d) > d + 1 (vacuously satisfied when floor(n_i/d) = 0).
/// Always terminates: d = max_i n_i + 1 makes every part non-divisible.
DSearchResult smallest_valid_d(const PartiteSpec& spec, int q);

/// p(q: n_1,...,n_k) = sum_i ceil(n_i/d) with d from smallest_valid_d.
/// Defined only when an equitable q-coloring exists; throws
/// PreconditionViolated otherwise.
int compute_p(const PartiteSpec& spec, int q);

/// Exact test for equitable q-colorability. Every class of a proper coloring
/// lies inside one part, so with s = floor(N/q) part i must be cut into r_i
/// classes of sizes s/s+1 with ceil(n_i/(s+1)) <= r_i <= floor(n_i/s); the
/// coloring exists iff every such interval is nonempty and q lies between the
/// interval sums. q >= N is always feasible (singletons, then empty classes).
FeasibilityVerdict coloring_feasible(const PartiteSpec& spec, int q);

/// Per-part class allocation backing construct_equitable_coloring:
/// classCount[i] classes from part i, bigCount[i] of them of size
/// smallSize+1, with lowerBound/upperBound the feasible interval.
struct PartAllocation {
    std::vector<int> classCount;  // r_i, sums to q
    std::vector<int> bigCount;    // a_i = n_i - r_i * smallSize
    std::vector<int> lowerBound;  // ceil(n_i/(smallSize+1))
    std::vector<int> upperBound;  // floor(n_i/smallSize)
    int smallSize = 0;
};

/// Water-filling choice of r_i: start every part at its lower bound and hand
/// the surplus to parts in descending size order. Requires feasibility.
PartAllocation allocate_classes(const PartiteSpec& spec, int q);

/// Witness equitable q-coloring: q classes, each inside one part, sizes
/// floor(N/q)/ceil(N/q) (or 1/0 when q > N). Throws Infeasible when no
/// equitable q-coloring exists.
Partition construct_equitable_coloring(const PartiteSpec& spec, int q);

/// Turns a proper equitable r-coloring into a proper equitable
/// (r-1)-coloring by re-splitting the classes of a single part, when some
/// part admits that. With b = ceil(N/r): either some part uses more than
/// ceil(n_j/b) classes and can be re-cut into sizes b-1/b, or every class
/// outside one part has size exactly b and that part can be re-cut into
/// sizes b/b+1. Throws ReductionImpossible when no part qualifies.
Partition reduce_coloring(const PartiteSpec& spec, const Partition& partition);

/// The least p such that an equitable q-coloring exists for every q >= p;
/// equals p(N: n_1,...,n_k).
int equitable_threshold(const PartiteSpec& spec);

} // namespace vaeq
