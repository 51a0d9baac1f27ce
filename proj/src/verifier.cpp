#include "vaeq/verifier.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <utility>

namespace vaeq {

ClassShape class_shape(std::span<const int> counts) {
    int total = 0;
    int nonzero = 0;
    int minNonzero = std::numeric_limits<int>::max();
    for (int c : counts) {
        if (c < 0)
            throw MalformedPartition("negative vertex count in a class");
        total += c;
        if (c > 0) {
            ++nonzero;
            minNonzero = std::min(minNonzero, c);
        }
    }
    ClassShape shape;
    shape.isIndependent = nonzero <= 1;
    shape.maxDegree = nonzero <= 1 ? 0 : total - minNonzero;
    shape.isForest = nonzero <= 1 || (nonzero == 2 && minNonzero == 1);
    return shape;
}

namespace {

// Structural validation shared by the verify_* entry points. Returns how many
// vertices of each part the classes claim; throws MalformedPartition when the
// partition is inconsistent with itself or takes more than a part has.
std::vector<int> validated_coverage(const PartiteSpec& spec, const Partition& partition) {
    if (partition.spec.sizes() != spec.sizes())
        throw MalformedPartition("partition was built against different part sizes");
    const int k = spec.partCount();
    std::vector<int> cover(static_cast<std::size_t>(k), 0);
    for (std::size_t ci = 0; ci < partition.classes.size(); ++ci) {
        const ColorClass& cls = partition.classes[ci];
        const std::string where = "class " + std::to_string(ci);
        if (static_cast<int>(cls.counts.size()) != k)
            throw MalformedPartition(where + " has a counts vector of the wrong length");
        for (int i = 0; i < k; ++i) {
            const int c = cls.counts[static_cast<std::size_t>(i)];
            if (c < 0)
                throw MalformedPartition(where + " has a negative count for part " + std::to_string(i));
            cover[static_cast<std::size_t>(i)] += c;
            if (cover[static_cast<std::size_t>(i)] > spec.partSize(i))
                throw MalformedPartition("counts exceed the size of part " + std::to_string(i));
        }
        if (cls.members) {
            if (static_cast<int>(cls.members->size()) != cls.size())
                throw MalformedPartition(where + " lists " + std::to_string(cls.members->size()) +
                                         " members but counts to " + std::to_string(cls.size()));
            std::vector<int> tally(static_cast<std::size_t>(k), 0);
            std::set<VertexRef> seen;
            for (const VertexRef& v : *cls.members) {
                if (v.part < 0 || v.part >= k || v.index < 0 || v.index >= spec.partSize(v.part))
                    throw MalformedPartition(where + " references a vertex outside the graph");
                if (!seen.insert(v).second)
                    throw MalformedPartition(where + " repeats a member");
                ++tally[static_cast<std::size_t>(v.part)];
            }
            if (tally != cls.counts)
                throw MalformedPartition(where + " members disagree with its counts");
        }
    }
    return cover;
}

} // namespace

VerificationReport verify_tree_coloring(const PartiteSpec& spec, const Partition& partition, int r) {
    if (r < 0)
        throw PreconditionViolated("the degree bound r must be nonnegative");
    const std::vector<int> cover = validated_coverage(spec, partition);
    const int k = spec.partCount();

    VerificationReport report;
    report.treeDegreeBound = r;
    report.firstViolation.clear();

    report.coversAllVertices = true;
    for (int i = 0; i < k; ++i) {
        if (cover[static_cast<std::size_t>(i)] != spec.partSize(i)) {
            report.coversAllVertices = false;
            if (report.firstViolation.empty())
                report.firstViolation = "part " + std::to_string(i) + " has " +
                                        std::to_string(cover[static_cast<std::size_t>(i)]) + " of " +
                                        std::to_string(spec.partSize(i)) + " vertices covered";
            break;
        }
    }

    // Disjointness is only observable when members are explicit; counts are
    // anonymous within a part.
    report.classesDisjoint = true;
    std::map<VertexRef, std::size_t> owner;
    for (std::size_t ci = 0; ci < partition.classes.size() && report.classesDisjoint; ++ci) {
        const auto& cls = partition.classes[ci];
        if (!cls.members)
            continue;
        for (const VertexRef& v : *cls.members) {
            auto [it, inserted] = owner.try_emplace(v, ci);
            if (!inserted) {
                report.classesDisjoint = false;
                if (report.firstViolation.empty())
                    report.firstViolation = "vertex (" + std::to_string(v.part) + "," + std::to_string(v.index) +
                                            ") appears in classes " + std::to_string(it->second) + " and " +
                                            std::to_string(ci);
                break;
            }
        }
    }

    report.isEquitable = true;
    if (!partition.classes.empty()) {
        int minSize = std::numeric_limits<int>::max();
        int maxSize = 0;
        for (const auto& cls : partition.classes) {
            const int s = cls.size();
            minSize = std::min(minSize, s);
            maxSize = std::max(maxSize, s);
        }
        if (maxSize - minSize > 1) {
            report.isEquitable = false;
            if (report.firstViolation.empty())
                report.firstViolation = "class sizes " + std::to_string(minSize) + " and " +
                                        std::to_string(maxSize) + " differ by more than one";
        }
    }

    report.isProper = std::all_of(partition.classes.begin(), partition.classes.end(),
                                  [](const ColorClass& cls) { return cls.nonzeroParts() <= 1; });

    bool shapesOk = true;
    for (std::size_t ci = 0; ci < partition.classes.size(); ++ci) {
        const ClassShape shape = class_shape(partition.classes[ci].counts);
        if (!shape.isForest || shape.maxDegree > r) {
            shapesOk = false;
            if (report.firstViolation.empty()) {
                report.firstViolation = !shape.isForest
                                            ? "class " + std::to_string(ci) + " induces a cycle"
                                            : "class " + std::to_string(ci) + " has maximum degree " +
                                                  std::to_string(shape.maxDegree) + " > " + std::to_string(r);
            }
            break;
        }
    }

    report.isTreeColoring =
        report.coversAllVertices && report.classesDisjoint && report.isEquitable && shapesOk;
    if (report.isTreeColoring)
        report.firstViolation.clear();
    return report;
}

bool verify_equitable(const Partition& partition) {
    validated_coverage(partition.spec, partition);
    if (partition.classes.empty())
        return true;
    int minSize = std::numeric_limits<int>::max();
    int maxSize = 0;
    for (const auto& cls : partition.classes) {
        const int s = cls.size();
        minSize = std::min(minSize, s);
        maxSize = std::max(maxSize, s);
    }
    return maxSize - minSize <= 1;
}

bool verify_proper(const PartiteSpec& spec, const Partition& partition) {
    validated_coverage(spec, partition);
    return std::all_of(partition.classes.begin(), partition.classes.end(),
                       [](const ColorClass& cls) { return cls.nonzeroParts() <= 1; });
}

} // namespace vaeq
