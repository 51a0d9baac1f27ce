#pragma once

#include <vector>

#include "vaeq/graph_model.hpp"

namespace vaeq {

/// Size caps for the exhaustive searches. Independence prunes much harder,
/// so the r = 0 cap is higher.
struct OracleCaps {
    int treeCap = 14;        // r >= 1
    int independentCap = 16; // r == 0
};

/// Ground truth by exhaustion: does an equitable partition into q classes
/// exist in which every class induces a forest of maximum degree <= r?
/// Vertices inside a part are interchangeable, so the search runs over
/// multisets of class signatures (per-part count vectors) in non-increasing
/// lexicographic order, which visits every signature multiset exactly once.
/// The first witness found is re-verified before true is returned.
/// Throws CapExceeded when N is over the cap for this r.
bool brute_force_feasible(const PartiteSpec& spec, int q, int r, const OracleCaps& caps = {});

/// brute_force_feasible with r = 0 (independent classes).
bool brute_force_equitable_colorable(const PartiteSpec& spec, int q, const OracleCaps& caps = {});

/// Exact strong equitable vertex 1-arboricity by exhaustion: one past the
/// largest q with no equitable (q,1)-tree-coloring (every q >= ceil(N/2) is
/// feasible, so the scan starts there).
int brute_force_va1(const PartiteSpec& spec, const OracleCaps& caps = {});

/// Every ordered composition of totalVertices into at least two positive
/// parts, as specs; certification sweeps run over these.
std::vector<PartiteSpec> all_multipartite_specs(int totalVertices);

} // namespace vaeq
