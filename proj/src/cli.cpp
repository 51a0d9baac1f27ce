#include "vaeq/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vaeq/equitable_coloring.hpp"
#include "vaeq/json_io.hpp"
#include "vaeq/oracle.hpp"
#include "vaeq/tree_arboricity.hpp"
#include "vaeq/verifier.hpp"

namespace vaeq {

namespace {

using nlohmann::ordered_json;

struct SpecOpts {
    std::string parts;
    std::string kstar;
};

void add_spec_options(CLI::App* cmd, SpecOpts& opts) {
    auto* p = cmd->add_option("--parts", opts.parts, "comma-separated part sizes, e.g. 7,7");
    auto* s = cmd->add_option("--kstar", opts.kstar, "balanced shorthand KxN, e.g. 4x6");
    p->excludes(s);
    s->excludes(p);
}

int parse_positive(const std::string& token, const std::string& what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(token, &used);
    } catch (const std::exception&) {
        throw CLI::ValidationError(what, "'" + token + "' is not an integer");
    }
    if (used != token.size() || value < 1)
        throw CLI::ValidationError(what, "'" + token + "' is not a positive integer");
    return value;
}

PartiteSpec resolve_spec(const SpecOpts& opts) {
    std::vector<int> sizes;
    if (!opts.kstar.empty()) {
        const auto x = opts.kstar.find('x');
        if (x == std::string::npos)
            throw CLI::ValidationError("--kstar", "expected KxN, e.g. 4x6");
        const int k = parse_positive(opts.kstar.substr(0, x), "--kstar");
        const int n = parse_positive(opts.kstar.substr(x + 1), "--kstar");
        if (k < 2)
            throw CLI::ValidationError("--kstar", "need at least two parts");
        sizes.assign(static_cast<std::size_t>(k), n);
    } else if (!opts.parts.empty()) {
        std::stringstream ss(opts.parts);
        std::string token;
        while (std::getline(ss, token, ','))
            sizes.push_back(parse_positive(token, "--parts"));
        if (sizes.size() < 2)
            throw CLI::ValidationError("--parts", "need at least two part sizes");
    } else {
        throw CLI::ValidationError("spec", "one of --parts or --kstar is required");
    }
    return PartiteSpec(std::move(sizes));
}

bool is_balanced(const PartiteSpec& spec) {
    for (int n : spec.sizes())
        if (n != spec.sizes().front())
            return false;
    return true;
}

Va1Result dispatch_va1(const PartiteSpec& spec) {
    if (is_balanced(spec))
        return va1_balanced_closed(spec.partCount(), spec.sizes().front());
    if (spec.partCount() == 2)
        return va1_bipartite_closed(spec.partSize(0), spec.partSize(1));
    return va1_general(spec);
}

OracleCaps caps_from_env() {
    OracleCaps caps;
    if (const char* env = std::getenv("VAEQ_ORACLE_CAP")) {
        try {
            const int cap = std::stoi(env);
            caps.treeCap = cap;
            caps.independentCap = cap;
        } catch (const std::exception&) {
            throw PreconditionViolated("VAEQ_ORACLE_CAP must be an integer");
        }
    }
    return caps;
}

void merge_verdict(ordered_json& j, const FeasibilityVerdict& verdict) {
    const ordered_json v = verdict_to_json(verdict);
    for (const auto& [key, value] : v.items())
        j[key] = value;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact equitable colorings and strong equitable vertex 1-arboricity "
                 "of complete multipartite graphs"};
    app.name("vaeq");
    app.require_subcommand(1);
    bool timing = false;
    app.add_flag("--timing", timing, "report the elapsed time on standard error");
    int code = 0;
    const auto started = std::chrono::steady_clock::now();

    // va
    SpecOpts vaSpec;
    bool vaCheck = false;
    auto* va = app.add_subcommand("va", "strong equitable vertex 1-arboricity");
    add_spec_options(va, vaSpec);
    va->add_flag("--check", vaCheck, "cross-check the closed form against the general engine");
    va->callback([&] {
        const PartiteSpec spec = resolve_spec(vaSpec);
        const Va1Result result = dispatch_va1(spec);
        ordered_json j;
        j["parts"] = spec.sizes();
        j["value"] = result.value;
        j["method"] = to_string(result.method);
        if (result.certificateQ)
            j["certificate_q"] = *result.certificateQ;
        if (vaCheck) {
            const Va1Result engine = va1_general(spec);
            j["engine"] = engine.value;
            j["agree"] = engine.value == result.value;
            if (engine.value != result.value)
                code = 2;
        }
        out << j.dump() << "\n";
    });

    // p
    SpecOpts pSpec;
    int pQ = 0;
    auto* pCmd = app.add_subcommand("p", "the function p(q: n_1,...,n_k)");
    add_spec_options(pCmd, pSpec);
    pCmd->add_option("-q,--q", pQ, "number of classes of the assumed equitable coloring")->required();
    pCmd->callback([&] {
        const PartiteSpec spec = resolve_spec(pSpec);
        const int p = compute_p(spec, pQ);
        const DSearchResult ds = smallest_valid_d(spec, pQ);
        ordered_json j;
        j["parts"] = spec.sizes();
        j["q"] = pQ;
        j["p"] = p;
        j["d"] = ds.d;
        j["trigger"] = to_string(ds.trigger);
        j["d_start"] = ds.start;
        out << j.dump() << "\n";
    });

    // threshold
    SpecOpts thSpec;
    auto* th = app.add_subcommand("threshold", "equitable chromatic threshold");
    add_spec_options(th, thSpec);
    th->callback([&] {
        const PartiteSpec spec = resolve_spec(thSpec);
        const int value = equitable_threshold(spec);
        const DSearchResult ds = smallest_valid_d(spec, spec.totalVertices());
        ordered_json j;
        j["parts"] = spec.sizes();
        j["threshold"] = value;
        j["d"] = ds.d;
        j["trigger"] = to_string(ds.trigger);
        out << j.dump() << "\n";
    });

    // feasible
    SpecOpts feSpec;
    int feQ = 0;
    std::optional<int> feTree;
    auto* fe = app.add_subcommand("feasible", "equitable q-colorability / (q,1)-tree-colorability");
    add_spec_options(fe, feSpec);
    fe->add_option("-q,--q", feQ, "number of classes")->required();
    fe->add_option("--tree", feTree, "check (q,R)-tree-coloring feasibility instead (R = 0 or 1)");
    fe->callback([&] {
        const PartiteSpec spec = resolve_spec(feSpec);
        const int r = feTree.value_or(0);
        if (r < 0 || r > 1)
            throw CLI::ValidationError("--tree",
                                       "feasibility is computed for r = 0 and r = 1 only; "
                                       "`verify` checks a given partition for any r");
        const FeasibilityVerdict verdict = r == 1 ? tree_feasible_q1(spec, feQ) : coloring_feasible(spec, feQ);
        ordered_json j;
        j["parts"] = spec.sizes();
        j["q"] = feQ;
        j["r"] = r;
        merge_verdict(j, verdict);
        out << j.dump() << "\n";
        code = verdict.feasible ? 0 : 2;
    });

    // construct
    SpecOpts coSpec;
    int coQ = 0;
    bool coTree = false;
    bool coVerify = false;
    bool coMembers = false;
    auto* co = app.add_subcommand("construct", "emit a witness partition");
    add_spec_options(co, coSpec);
    co->add_option("-q,--q", coQ, "number of classes")->required();
    co->add_flag("--tree", coTree, "construct an equitable (q,1)-tree-coloring");
    co->add_flag("--verify", coVerify, "re-check the witness before printing it");
    co->add_flag("--members", coMembers, "include explicit vertex members");
    co->callback([&] {
        const PartiteSpec spec = resolve_spec(coSpec);
        Partition partition =
            coTree ? construct_tree_coloring_q1(spec, coQ) : construct_equitable_coloring(spec, coQ);
        if (coMembers)
            partition = partition.withExplicitMembers();
        if (coVerify) {
            const VerificationReport report = verify_tree_coloring(spec, partition, coTree ? 1 : 0);
            const bool ok = report.isTreeColoring && (coTree || report.isProper);
            if (!ok)
                throw Error("constructed witness failed verification: " + report.firstViolation);
        }
        out << partition_to_json(partition).dump() << "\n";
    });

    // table1
    int t1Max = 0;
    auto* t1 = app.add_subcommand("table1", "closed form vs engine for all K_{m,n} as CSV");
    t1->add_option("--max", t1Max, "largest part size")->required()->check(CLI::PositiveNumber);
    t1->callback([&] {
        out << "m,n,closed_form,engine,agree,method\n";
        bool allAgree = true;
        for (int m = 1; m <= t1Max; ++m) {
            for (int n = m; n <= t1Max; ++n) {
                const Va1Result closed = va1_bipartite_closed(m, n);
                const Va1Result engine = va1_general(PartiteSpec({m, n}));
                const bool agree = closed.value == engine.value;
                allAgree = allAgree && agree;
                out << m << ',' << n << ',' << closed.value << ',' << engine.value << ','
                    << (agree ? "true" : "false") << ',' << to_string(closed.method) << "\n";
            }
        }
        code = allAgree ? 0 : 2;
    });

    // table2
    int t2MaxK = 0;
    int t2MaxN = 0;
    auto* t2 = app.add_subcommand("table2", "closed form vs engine for all K_{k*n} as CSV");
    t2->add_option("--max-k", t2MaxK, "largest number of parts")->required()->check(CLI::Range(2, 1 << 20));
    t2->add_option("--max-n", t2MaxN, "largest part size")->required()->check(CLI::PositiveNumber);
    t2->callback([&] {
        out << "k,n,closed_form,engine,agree,method\n";
        bool allAgree = true;
        for (int k = 2; k <= t2MaxK; ++k) {
            for (int n = 1; n <= t2MaxN; ++n) {
                const Va1Result closed = va1_balanced_closed(k, n);
                const Va1Result engine = va1_general(PartiteSpec(std::vector<int>(static_cast<std::size_t>(k), n)));
                const bool agree = closed.value == engine.value;
                allAgree = allAgree && agree;
                out << k << ',' << n << ',' << closed.value << ',' << engine.value << ','
                    << (agree ? "true" : "false") << ',' << to_string(closed.method) << "\n";
            }
        }
        code = allAgree ? 0 : 2;
    });

    // certify
    int ceMax = 0;
    auto* ce = app.add_subcommand("certify", "engine vs brute-force oracle over every composition");
    ce->add_option("--max-total", ceMax, "largest total vertex count")->required()->check(CLI::Range(2, 1 << 20));
    ce->callback([&] {
        const OracleCaps caps = caps_from_env();
        long long specCount = 0;
        long long feasibilityChecks = 0;
        long long va1Checks = 0;
        long long disagreements = 0;
        for (int total = 2; total <= ceMax; ++total) {
            for (const PartiteSpec& spec : all_multipartite_specs(total)) {
                ++specCount;
                for (int q = 1; q <= total; ++q) {
                    const bool engine0 = coloring_feasible(spec, q).feasible;
                    const bool oracle0 = brute_force_equitable_colorable(spec, q, caps);
                    const bool engine1 = tree_feasible_q1(spec, q).feasible;
                    const bool oracle1 = brute_force_feasible(spec, q, 1, caps);
                    feasibilityChecks += 2;
                    if (engine0 != oracle0 || engine1 != oracle1) {
                        ++disagreements;
                        err << "disagreement at sizes=" << ordered_json(spec.sizes()).dump() << " q=" << q
                            << " engine0=" << engine0 << " oracle0=" << oracle0 << " engine1=" << engine1
                            << " oracle1=" << oracle1 << "\n";
                    }
                }
                const int engineVa = va1_general(spec).value;
                const int oracleVa = brute_force_va1(spec, caps);
                ++va1Checks;
                if (engineVa != oracleVa) {
                    ++disagreements;
                    err << "va1 disagreement at sizes=" << ordered_json(spec.sizes()).dump()
                        << " engine=" << engineVa << " oracle=" << oracleVa << "\n";
                }
            }
        }
        ordered_json j;
        j["maxTotal"] = ceMax;
        j["specs"] = specCount;
        j["feasibilityChecks"] = feasibilityChecks;
        j["va1Checks"] = va1Checks;
        j["disagreements"] = disagreements;
        j["ok"] = disagreements == 0;
        out << j.dump() << "\n";
        code = disagreements == 0 ? 0 : 2;
    });

    // verify
    SpecOpts veSpec;
    std::string vePath;
    int veR = 1;
    auto* ve = app.add_subcommand("verify", "check a partition file against a spec");
    add_spec_options(ve, veSpec);
    ve->add_option("--partition", vePath, "partition JSON file, or - for stdin")->required();
    ve->add_option("--tree", veR, "degree bound r of the tree-coloring check")->check(CLI::NonNegativeNumber);
    ve->callback([&] {
        const PartiteSpec spec = resolve_spec(veSpec);
        nlohmann::json doc;
        if (vePath == "-") {
            doc = nlohmann::json::parse(std::cin, nullptr, true);
        } else {
            std::ifstream in(vePath);
            if (!in)
                throw CLI::ValidationError("--partition", "cannot open '" + vePath + "'");
            doc = nlohmann::json::parse(in, nullptr, true);
        }
        const Partition partition = partition_from_json(doc, spec);
        const VerificationReport report = verify_tree_coloring(spec, partition, veR);
        out << report_to_json(report).dump() << "\n";
        code = report.isTreeColoring ? 0 : 2;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 1;
    } catch (const nlohmann::json::parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (timing) {
        const auto elapsed = std::chrono::steady_clock::now() - started;
        err << "elapsed_ms=" << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() << "\n";
    }
    return code;
}

} // namespace vaeq
