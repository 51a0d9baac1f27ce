#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "vaeq/errors.hpp"

namespace vaeq {

namespace detail {

// Ceiling division for nonnegative a, positive b.
constexpr int ceil_div(int a, int b) { return (a + b - 1) / b; }

} // namespace detail

/// The complete multipartite graph K_{n_1,...,n_k}, given by its part sizes.
///
/// Sizes are kept in the caller's order (that order is what goes back out on
/// the wire); partsBySizeDesc() is the descending-size view the algorithms
/// iterate over, so every computed value is invariant under part reordering.
class PartiteSpec {
public:
    explicit PartiteSpec(std::vector<int> sizes);

    int partCount() const noexcept { return static_cast<int>(sizes_.size()); }
    int partSize(int part) const { return sizes_.at(static_cast<std::size_t>(part)); }
    const std::vector<int>& sizes() const noexcept { return sizes_; }

    /// N = n_1 + ... + n_k, recomputed on demand.
    int totalVertices() const noexcept;

    int maxPartSize() const noexcept;

    /// Part indices ordered by descending size, ties by original index.
    const std::vector<int>& partsBySizeDesc() const noexcept { return bySizeDesc_; }

    bool operator==(const PartiteSpec&) const = default;

private:
    std::vector<int> sizes_;
    std::vector<int> bySizeDesc_;
};

/// One vertex, addressed as (part, index within part). Zero-based.
struct VertexRef {
    int part = 0;
    int index = 0;

    auto operator<=>(const VertexRef&) const = default;
};

/// One color class: how many vertices it takes from each part, plus an
/// optional explicit member list consistent with those counts.
struct ColorClass {
    std::vector<int> counts;
    std::optional<std::vector<VertexRef>> members;

    int size() const noexcept;

    /// Number of parts the class touches.
    int nonzeroParts() const noexcept;

    /// Index of the unique nonzero part, or -1 if empty or spanning.
    int singlePart() const noexcept;
};

ColorClass single_part_class(int partCount, int part, int size);

/// An ordered list of classes covering a PartiteSpec; the witness object for
/// every coloring this library talks about.
struct Partition {
    PartiteSpec spec;
    std::vector<ColorClass> classes;

    int classCount() const noexcept { return static_cast<int>(classes.size()); }
    std::vector<int> classSizes() const;

    /// Copy with deterministic explicit members: vertices of each part are
    /// numbered consecutively in class order.
    Partition withExplicitMembers() const;
};

/// Class sizes forced by splitting N vertices into q classes equitably:
/// bigClasses classes of size smallSize+1 and smallClasses of size smallSize.
struct ClassSizeProfile {
    int smallSize = 0;    // floor(N/q)
    int bigClasses = 0;   // N mod q
    int smallClasses = 0; // q - bigClasses
};

ClassSizeProfile class_size_profile(const PartiteSpec& spec, int q);

/// Outcome of a feasibility rule. When infeasible, `rule` names the first
/// violated check and `needed`/`available` are the two sides of it
/// (infeasible because needed > available).
struct FeasibilityVerdict {
    bool feasible = false;
    std::string rule;
    long long needed = 0;
    long long available = 0;
    std::string detail;

    explicit operator bool() const noexcept { return feasible; }
};

} // namespace vaeq
