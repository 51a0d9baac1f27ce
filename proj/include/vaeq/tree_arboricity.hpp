#pragma once

#include <optional>

#include "vaeq/graph_model.hpp"

namespace vaeq {

enum class Va1Method {
    CLOSED_FORM_TABLE1,
    CLOSED_FORM_TABLE2,
    GENERAL_ENGINE,
};

const char* to_string(Va1Method method) noexcept;

struct Va1Result {
    int value = 0;
    Va1Method method = Va1Method::GENERAL_ENGINE;
    /// Largest q with no equitable (q,1)-tree-coloring; value = certificateQ + 1.
    /// Absent for closed forms and when every q >= 1 is feasible.
    std::optional<int> certificateQ;
};

/// Division-by-three view of a pair of part sizes: m = 3b + g, n = 3c + h.
struct Mod3Case {
    int quotientM = 0;
    int remainderM = 0;
    int quotientN = 0;
    int remainderN = 0;

    static Mod3Case of(int m, int n);
};

/// Exact test for an equitable (q,1)-tree-coloring. With s = floor(N/q):
/// classes of size <= 2 induce maximum degree <= 1 wherever they sit, a class
/// of size >= 3 must lie inside one part. Hence s <= 1 is always feasible;
/// s = 2 is feasible iff the N mod q triples fit inside parts
/// (nb <= sum floor(n_i/3)); s >= 3 reduces to proper equitable feasibility.
FeasibilityVerdict tree_feasible_q1(const PartiteSpec& spec, int q);

/// Witness equitable (q,1)-tree-coloring; throws Infeasible when none exists.
Partition construct_tree_coloring_q1(const PartiteSpec& spec, int q);

/// Exact engine for any complete multipartite graph: scans q downward from
/// ceil(N/2) (everything from there up is feasible by pairing) and returns
/// one past the largest infeasible q.
Va1Result va1_general(const PartiteSpec& spec);

/// Closed form for K_{m,n}. Arguments are normalized so the value is
/// symmetric in m and n.
Va1Result va1_bipartite_closed(int m, int n);

/// Closed form for the balanced graph K_{k*n}; k = 2 routes through the
/// bipartite form.
Va1Result va1_balanced_closed(int k, int n);

} // namespace vaeq
