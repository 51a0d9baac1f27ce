// Acceptance suite: one line per criterion, nonzero exit iff any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "vaeq/equitable_coloring.hpp"
#include "vaeq/oracle.hpp"
#include "vaeq/tree_arboricity.hpp"
#include "vaeq/verifier.hpp"

using namespace vaeq;

namespace {

struct Criterion {
    int id;
    std::string name;
    double timeLimitSeconds; // 0 = untimed
    std::function<bool(std::string&)> run;
};

PartiteSpec balanced(int k, int n) {
    return PartiteSpec(std::vector<int>(static_cast<std::size_t>(k), n));
}

bool criterion_k77_pattern(std::string& detail) {
    const PartiteSpec spec({7, 7});
    bool ok = true;
    for (int q = 1; q <= 14; ++q) {
        const bool expected = q == 2 || q == 4 || q == 6 || q >= 8;
        const bool engine = coloring_feasible(spec, q).feasible;
        const bool oracle = brute_force_equitable_colorable(spec, q);
        if (engine != expected || oracle != expected) {
            detail = "mismatch at q=" + std::to_string(q);
            ok = false;
        }
    }
    if (ok)
        detail = "engine and oracle both match {2,4,6} and [8,14]";
    return ok;
}

bool criterion_threshold(std::string& detail) {
    const int value = equitable_threshold(PartiteSpec({7, 7}));
    detail = "threshold(K_{7,7}) = " + std::to_string(value);
    return value == 8;
}

bool criterion_table1(std::string& detail) {
    int rows = 0;
    int disagreements = 0;
    for (int m = 1; m <= 40; ++m) {
        for (int n = m; n <= 40; ++n) {
            ++rows;
            if (va1_bipartite_closed(m, n).value != va1_general(PartiteSpec({m, n})).value) {
                ++disagreements;
                if (disagreements == 1)
                    detail = "first disagreement at (" + std::to_string(m) + "," + std::to_string(n) + ")";
            }
        }
    }
    if (disagreements == 0)
        detail = std::to_string(rows) + " pairs m<=n (includes the 780 with m<n), zero disagreements";
    return disagreements == 0 && rows == 820;
}

bool criterion_table2(std::string& detail) {
    int rows = 0;
    int disagreements = 0;
    for (int k = 2; k <= 6; ++k) {
        for (int n = 1; n <= 20; ++n) {
            ++rows;
            if (va1_balanced_closed(k, n).value != va1_general(balanced(k, n)).value) {
                ++disagreements;
                if (disagreements == 1)
                    detail = "first disagreement at k=" + std::to_string(k) + " n=" + std::to_string(n);
            }
        }
    }
    if (disagreements == 0)
        detail = std::to_string(rows) + " rows, zero disagreements";
    return disagreements == 0 && rows == 100;
}

bool criterion_spot_values(std::string& detail) {
    struct Spot {
        std::vector<int> sizes;
        int expected;
    };
    const std::vector<Spot> spots = {
        {{1, 4}, 2}, {{2, 3}, 2}, {{4, 5}, 4}, {{5, 5}, 4},
        {{4, 4, 4}, 5}, {{5, 5, 5}, 6}, {{4, 4, 4, 4}, 6}, {{1, 1}, 1},
    };
    bool ok = true;
    for (const Spot& spot : spots) {
        const PartiteSpec spec(spot.sizes);
        const int engine = va1_general(spec).value;
        int closed = 0;
        if (spec.partCount() == 2)
            closed = va1_bipartite_closed(spec.partSize(0), spec.partSize(1)).value;
        else
            closed = va1_balanced_closed(spec.partCount(), spec.partSize(0)).value;
        if (engine != spot.expected || closed != spot.expected) {
            std::ostringstream msg;
            msg << "sizes=(";
            for (int n : spot.sizes)
                msg << n << ",";
            msg << ") expected " << spot.expected << " closed " << closed << " engine " << engine;
            detail = msg.str();
            ok = false;
        }
    }
    if (ok)
        detail = "all 8 values exact";
    return ok;
}

bool criterion_oracle_sweep(std::string& detail) {
    long long specs = 0;
    long long checks = 0;
    for (int total = 2; total <= 12; ++total) {
        for (const PartiteSpec& spec : all_multipartite_specs(total)) {
            ++specs;
            for (int q = 1; q <= total; ++q) {
                const bool engine0 = coloring_feasible(spec, q).feasible;
                const bool oracle0 = brute_force_equitable_colorable(spec, q);
                const bool engine1 = tree_feasible_q1(spec, q).feasible;
                const bool oracle1 = brute_force_feasible(spec, q, 1);
                checks += 2;
                if (engine0 != oracle0 || engine1 != oracle1) {
                    std::ostringstream msg;
                    msg << "disagreement at sizes=(";
                    for (int n : spec.sizes())
                        msg << n << ",";
                    msg << ") q=" << q;
                    detail = msg.str();
                    return false;
                }
            }
            ++checks;
            if (va1_general(spec).value != brute_force_va1(spec)) {
                detail = "va1 disagreement";
                return false;
            }
        }
    }
    detail = std::to_string(specs) + " specs, " + std::to_string(checks) + " checks, zero disagreements";
    return specs == 4083;
}

bool criterion_interval_property(std::string& detail) {
    long long specCount = 0;
    long long feasibleQ = 0;
    for (int k = 2; k <= 3; ++k) {
        std::vector<int> sizes(static_cast<std::size_t>(k), 1);
        const std::function<bool(int)> sweep = [&](int slot) -> bool {
            if (slot == k) {
                ++specCount;
                const PartiteSpec spec(sizes);
                for (int q = 1; q <= spec.totalVertices(); ++q) {
                    if (!coloring_feasible(spec, q).feasible)
                        continue;
                    ++feasibleQ;
                    const int p = compute_p(spec, q);
                    if (p > q) {
                        detail = "p(q) above q";
                        return false;
                    }
                    for (int r = p; r <= q; ++r) {
                        if (!coloring_feasible(spec, r).feasible) {
                            detail = "gap inside [p,q]";
                            return false;
                        }
                    }
                    if (p >= 2 && coloring_feasible(spec, p - 1).feasible) {
                        detail = "p-1 unexpectedly feasible";
                        return false;
                    }
                }
                return true;
            }
            for (int v = 1; v <= 8; ++v) {
                sizes[static_cast<std::size_t>(slot)] = v;
                if (!sweep(slot + 1))
                    return false;
            }
            return true;
        };
        if (!sweep(0))
            return false;
    }
    detail = std::to_string(specCount) + " specs, " + std::to_string(feasibleQ) +
             " feasible (spec,q) pairs, zero counterexamples";
    return true;
}

bool criterion_witness_suite(std::string& detail) {
    std::mt19937 rng(90210);
    long long processed = 0;
    long long chains = 0;
    long long reductions = 0;
    while (processed < 10000) {
        const PartiteSpec spec = testsupport::random_spec(rng, 5, 9);
        std::uniform_int_distribution<int> qDist(1, spec.totalVertices() + 2);
        const int q = qDist(rng);
        const bool properFeasible = coloring_feasible(spec, q).feasible;
        const bool treeFeasible = tree_feasible_q1(spec, q).feasible;
        if (!properFeasible && !treeFeasible)
            continue;
        ++processed;

        if (properFeasible) {
            Partition partition = construct_equitable_coloring(spec, q);
            if (partition.classCount() != q || !verify_tree_coloring(spec, partition, 0).isTreeColoring) {
                detail = "equitable witness failed verification";
                return false;
            }
            const int p = compute_p(spec, q);
            ++chains;
            for (int r = q; r > p; --r) {
                try {
                    partition = reduce_coloring(spec, partition);
                } catch (const Error& e) {
                    detail = "reduction chain broke at r=" + std::to_string(r) + ": " + e.what();
                    return false;
                }
                ++reductions;
                if (partition.classCount() != r - 1 ||
                    !verify_tree_coloring(spec, partition, 0).isTreeColoring) {
                    detail = "reduced coloring failed verification";
                    return false;
                }
            }
        }
        if (treeFeasible) {
            const Partition partition = construct_tree_coloring_q1(spec, q);
            if (partition.classCount() != q || !verify_tree_coloring(spec, partition, 1).isTreeColoring) {
                detail = "tree witness failed verification";
                return false;
            }
        }
    }
    detail = "10000 feasible draws, " + std::to_string(chains) + " reduction chains (" +
             std::to_string(reductions) + " steps), all verified";
    return true;
}

bool criterion_shape_oracle(std::string& detail) {
    long long vectors = 0;
    for (int slots = 1; slots <= 8; ++slots) {
        for (const auto& counts : testsupport::all_count_vectors(slots, 8)) {
            ++vectors;
            const ClassShape closed = class_shape(counts);
            const ClassShape literal = testsupport::literal_class_shape(counts);
            if (closed.maxDegree != literal.maxDegree || closed.isForest != literal.isForest ||
                closed.isIndependent != literal.isIndependent) {
                std::ostringstream msg;
                msg << "mismatch on counts (";
                for (int c : counts)
                    msg << c << ",";
                msg << ")";
                detail = msg.str();
                return false;
            }
        }
    }
    detail = std::to_string(vectors) + " count vectors, closed form == literal graph";
    return true;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "K_{7,7} colorability pattern, engine and oracle", 1.0, criterion_k77_pattern},
        {2, "equitable chromatic threshold of K_{7,7}", 0.0, criterion_threshold},
        {3, "bipartite table reproduction up to 40", 5.0, criterion_table1},
        {4, "balanced table reproduction, k<=6 n<=20", 5.0, criterion_table2},
        {5, "spot values", 0.0, criterion_spot_values},
        {6, "oracle certification sweep, N<=12", 120.0, criterion_oracle_sweep},
        {7, "interval property, k<=3 n_i<=8", 0.0, criterion_interval_property},
        {8, "witness property suite, 10000 draws", 0.0, criterion_witness_suite},
        {9, "class shape vs literal graph, totals<=8", 0.0, criterion_shape_oracle},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        std::string detail;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && criterion.timeLimitSeconds > 0 && seconds > criterion.timeLimitSeconds) {
            ok = false;
            detail += " [over the " + std::to_string(criterion.timeLimitSeconds) + " s budget]";
        }
        if (!ok)
            ++failures;
        std::printf("%s  %d  %s (%s; %.2f s)\n", ok ? "PASS" : "FAIL", criterion.id, criterion.name.c_str(),
                    detail.c_str(), seconds);
        std::fflush(stdout);
    }
    return failures;
}
