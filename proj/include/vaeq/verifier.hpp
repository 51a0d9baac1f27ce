#pragma once

#include <span>
#include <string>

#include "vaeq/graph_model.hpp"

namespace vaeq {

/// Structure of the subgraph induced by one class, derived from its counts
/// alone (the induced graph is complete multipartite on the nonzero counts).
struct ClassShape {
    int maxDegree = 0;
    bool isForest = true;
    bool isIndependent = true;
};

/// Closed-form shape of the induced subgraph of a class with these per-part
/// counts: a vertex in a part with count c has degree total - c; the graph is
/// a forest iff it touches one part, or two parts one of which contributes a
/// single vertex (two counts >= 2 contain a 4-cycle, three parts a triangle).
ClassShape class_shape(std::span<const int> counts);

struct VerificationReport {
    bool coversAllVertices = false;
    bool classesDisjoint = false;
    bool isEquitable = false;
    bool isProper = false;
    bool isTreeColoring = false;
    int treeDegreeBound = 0;
    std::string firstViolation; // empty when the tree-coloring check passed
};

/// Full structural check: the partition is an equitable (q,r)-tree-coloring
/// iff it covers every vertex exactly once, class sizes differ by at most 1,
/// and every class induces a forest of maximum degree <= r. Throws
/// MalformedPartition when the partition is not even internally consistent
/// (counts exceeding part sizes, member lists disagreeing with counts).
VerificationReport verify_tree_coloring(const PartiteSpec& spec, const Partition& partition, int r);

/// Class sizes pairwise differ by at most one.
bool verify_equitable(const Partition& partition);

/// Every class is an independent set, i.e. lies inside a single part.
bool verify_proper(const PartiteSpec& spec, const Partition& partition);

} // namespace vaeq
