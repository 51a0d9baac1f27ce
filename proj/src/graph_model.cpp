#include "vaeq/graph_model.hpp"

#include <algorithm>
#include <numeric>

namespace vaeq {

PartiteSpec::PartiteSpec(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.size() < 2)
        throw PreconditionViolated("a complete multipartite graph needs at least two parts");
    for (int n : sizes_)
        if (n < 1)
            throw PreconditionViolated("every part size must be a positive integer");
    bySizeDesc_.resize(sizes_.size());
    std::iota(bySizeDesc_.begin(), bySizeDesc_.end(), 0);
    std::stable_sort(bySizeDesc_.begin(), bySizeDesc_.end(),
                     [this](int a, int b) { return sizes_[static_cast<std::size_t>(a)] > sizes_[static_cast<std::size_t>(b)]; });
}

int PartiteSpec::totalVertices() const noexcept {
    return std::accumulate(sizes_.begin(), sizes_.end(), 0);
}

int PartiteSpec::maxPartSize() const noexcept {
    return *std::max_element(sizes_.begin(), sizes_.end());
}

int ColorClass::size() const noexcept {
    return std::accumulate(counts.begin(), counts.end(), 0);
}

int ColorClass::nonzeroParts() const noexcept {
    return static_cast<int>(std::count_if(counts.begin(), counts.end(), [](int c) { return c > 0; }));
}

int ColorClass::singlePart() const noexcept {
    int found = -1;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] > 0) {
            if (found >= 0)
                return -1;
            found = static_cast<int>(i);
        }
    }
    return found;
}

ColorClass single_part_class(int partCount, int part, int size) {
    ColorClass cls;
    cls.counts.assign(static_cast<std::size_t>(partCount), 0);
    cls.counts[static_cast<std::size_t>(part)] = size;
    return cls;
}

std::vector<int> Partition::classSizes() const {
    std::vector<int> sizes;
    sizes.reserve(classes.size());
    for (const auto& cls : classes)
        sizes.push_back(cls.size());
    return sizes;
}

Partition Partition::withExplicitMembers() const {
    Partition out = *this;
    const int k = spec.partCount();
    std::vector<int> next(static_cast<std::size_t>(k), 0);
    for (auto& cls : out.classes) {
        if (static_cast<int>(cls.counts.size()) != k)
            throw MalformedPartition("class counts length does not match the part count");
        std::vector<VertexRef> members;
        members.reserve(static_cast<std::size_t>(cls.size()));
        for (int p = 0; p < k; ++p) {
            const int c = cls.counts[static_cast<std::size_t>(p)];
            if (c < 0)
                throw MalformedPartition("negative vertex count in a class");
            for (int t = 0; t < c; ++t) {
                if (next[static_cast<std::size_t>(p)] >= spec.partSize(p))
                    throw MalformedPartition("counts exceed the size of part " + std::to_string(p));
                members.push_back(VertexRef{p, next[static_cast<std::size_t>(p)]++});
            }
        }
        cls.members = std::move(members);
    }
    return out;
}

ClassSizeProfile class_size_profile(const PartiteSpec& spec, int q) {
    if (q < 1)
        throw PreconditionViolated("class_size_profile requires q >= 1");
    const int n = spec.totalVertices();
    ClassSizeProfile profile;
    profile.smallSize = n / q;
    profile.bigClasses = n % q;
    profile.smallClasses = q - profile.bigClasses;
    return profile;
}

} // namespace vaeq
