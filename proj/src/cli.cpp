#include "ordval/cli.hpp"

#include "ordval/checks.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <sstream>

namespace ordval {

namespace {

struct Flags {
    std::string expr;     // positional expression (classify-group, parse)
    std::string name;     // positional predicate/witness/suite name
    std::string coeff;
    std::string group;
    std::string at;
    std::string cut;
    long trials = 1000;
    std::uint64_t seed = 0x5EED;
    bool seedGiven = false;
    long primeBound = 13;
    bool primeBoundGiven = false;
    std::string format = "text";
};

std::uint64_t envSeed(std::uint64_t fallback) {
    const char* s = std::getenv("ORDVAL_SEED");
    if (!s || !*s) return fallback;
    return std::stoull(s, nullptr, 0);
}

std::string boolStr(bool b) { return b ? "true" : "false"; }

void requireFlag(const std::string& value, const std::string& flag) {
    if (value.empty()) throw std::invalid_argument("missing required flag " + flag);
}

int classifyCmd(const Flags& f, const std::string& coeffExpr, const std::string& groupExpr,
                std::ostream& out) {
    CoeffField k = parseCoeffField(coeffExpr);
    GroupDescriptor G = parseGroup(groupExpr);
    ClassificationReport r = classifyReport(k, G, f.primeBound);
    out << (f.format == "json" ? reportJson(r) : reportText(r));
    return 0;
}

int predicateCmd(const Flags& f, std::ostream& out) {
    requireFlag(f.group, "--group");
    GroupDescriptor G = parseGroup(f.group);
    bool value = false;
    if (f.name == "limit-point") {
        requireFlag(f.at, "--at");
        value = isLimitPoint(parseElement(f.at), G);
    } else if (f.name == "phi" || f.name == "member-ds" || f.name == "member-os") {
        requireFlag(f.coeff, "--coeff");
        requireFlag(f.at, "--at");
        CoeffField k = parseCoeffField(f.coeff);
        Series x = parseSeries(f.at, k, G);
        if (f.name == "phi") {
            value = phiHolds(x);
        } else {
            requireFlag(f.cut, "--cut");
            CutPoint cut = parseCut(f.cut, G);
            value = f.name == "member-ds" ? memberDs(x, cut) : memberOs(x, cut);
        }
    } else {
        throw std::invalid_argument("unknown predicate: " + f.name);
    }
    out << f.name << ": " << boolStr(value) << "\n";
    return 0;
}

CaseTag caseFromName(const std::string& s) {
    if (s == "discrete") return CaseTag::Discrete;
    if (s == "group-limit") return CaseTag::GroupLimitPoint;
    if (s == "residue-limit") return CaseTag::ResidueLimitPoint;
    throw std::invalid_argument("unknown cut case: " + s +
                                " (expected discrete, group-limit, or residue-limit)");
}

int witnessCmd(const Flags& f, std::ostream& out) {
    requireFlag(f.group, "--group");
    GroupDescriptor G = parseGroup(f.group);
    if (f.name == "nondense") {
        out << "nondense_witness: " << hullStr(findNondenseWitness(G)) << "\n";
        return 0;
    }
    requireFlag(f.coeff, "--coeff");
    CoeffField k = parseCoeffField(f.coeff);
    if (f.name == "cut") {
        requireFlag(f.cut, "--cut");
        CutPoint cut = makeCut(k, G, caseFromName(f.cut));
        out << "cut: " << cutStr(cut) << "\n";
        return 0;
    }
    requireFlag(f.at, "--at");
    Series x = parseSeries(f.at, k, G);
    if (f.name == "os-violation") {
        requireFlag(f.cut, "--cut");
        CutPoint cut = parseCut(f.cut, G);
        out << "os_violation_witness: " << seriesStr(osViolationWitness(x, cut)) << "\n";
        return 0;
    }
    if (f.name == "phi") {
        TruncatedResult w = phiWitness(x, 3);
        out << "phi_witness: " << seriesStr(w.terms) << "\n";
        out << "guarantee: " << hullStr(w.guarantee) << "\n";
        out << "exact: " << boolStr(w.exact) << "\n";
        return 0;
    }
    throw std::invalid_argument("unknown witness kind: " + f.name);
}

int checkCmd(const Flags& f, std::ostream& out) {
    CheckOptions opts;
    opts.seed = f.seedGiven ? f.seed : envSeed(f.seed);
    opts.trials = f.trials;
    opts.primeBound = f.primeBoundGiven ? f.primeBound : 50;
    CheckResult r = runSuite(f.name, opts);
    out << checkResultLine(r) << "\n";
    return r.passed ? 0 : 1;
}

int parseCmd(const Flags& f, std::ostream& out) {
    std::string kind, printed;
    if (!f.coeff.empty() && !f.group.empty()) {
        CoeffField k = parseCoeffField(f.coeff);
        GroupDescriptor G = parseGroup(f.group);
        kind = "series";
        printed = seriesStr(parseSeries(f.expr, k, G));
    } else if (!f.group.empty() && (f.expr.empty() || f.expr.front() != '{')) {
        GroupDescriptor G = parseGroup(f.group);
        kind = "cut";
        printed = cutStr(parseCut(f.expr, G));
    } else if (!f.expr.empty() && f.expr.front() == '{') {
        kind = "element";
        printed = hullStr(parseElement(f.expr));
    } else {
        kind = "group";
        printed = groupStr(parseGroup(f.expr));
    }
    out << kind << ": " << printed << "\n";
    return 0;
}

}  // namespace

CommandResult runCommand(const std::vector<std::string>& args) {
    CLI::App app{"Exact computation kernel for lexicographic sums of rational "
                 "subgroups and Hahn series fields"};
    app.require_subcommand(1);
    Flags f;

    auto addCommon = [&](CLI::App* sub, bool withExpr, bool withName) {
        if (withExpr) sub->add_option("expr", f.expr, "expression")->required();
        if (withName) sub->add_option("name", f.name, "name")->required();
        sub->add_option("--coeff", f.coeff, "coefficient field expression");
        sub->add_option("--group", f.group, "group expression");
        sub->add_option("--at", f.at, "series or element literal");
        sub->add_option("--cut", f.cut, "cut expression or case name");
        sub->add_option("--trials", f.trials, "sampling trials");
        sub->add_option("--seed", f.seed, "sampling seed")
            ->each([&](const std::string&) { f.seedGiven = true; });
        sub->add_option("--prime-bound", f.primeBound, "largest prime scanned")
            ->each([&](const std::string&) { f.primeBoundGiven = true; });
        sub->add_option("--format", f.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* cg = app.add_subcommand("classify-group", "report on one group descriptor");
    addCommon(cg, true, false);
    CLI::App* cf = app.add_subcommand("classify-field", "report on a Hahn series field");
    addCommon(cf, false, false);
    CLI::App* pr = app.add_subcommand("predicate",
                                      "evaluate phi | member-ds | member-os | limit-point");
    addCommon(pr, false, true);
    CLI::App* wi = app.add_subcommand("witness",
                                      "emit os-violation | nondense | phi | cut witness");
    addCommon(wi, false, true);
    CLI::App* ch = app.add_subcommand("check", "run a seeded property-check suite");
    ch->add_option("--suite", f.name, "suite name")->required();
    addCommon(ch, false, false);
    CLI::App* pa = app.add_subcommand("parse", "parse and reprint an expression");
    addCommon(pa, true, false);

    std::ostringstream out;
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return {0, out.str()};
    } catch (const CLI::ParseError& e) {
        out << "usage error: " << e.what() << "\n";
        return {2, out.str()};
    }

    try {
        int code = 0;
        if (cg->parsed()) {
            code = classifyCmd(f, f.coeff.empty() ? "Q" : f.coeff, f.expr, out);
        } else if (cf->parsed()) {
            requireFlag(f.coeff, "--coeff");
            requireFlag(f.group, "--group");
            code = classifyCmd(f, f.coeff, f.group, out);
        } else if (pr->parsed()) {
            code = predicateCmd(f, out);
        } else if (wi->parsed()) {
            code = witnessCmd(f, out);
        } else if (ch->parsed()) {
            code = checkCmd(f, out);
        } else {
            code = parseCmd(f, out);
        }
        return {code, out.str()};
    } catch (const ParseError& e) {
        out << "parse error: " << e.what() << "\n";
        return {2, out.str()};
    } catch (const std::invalid_argument& e) {
        out << "unsupported input: " << e.what() << "\n";
        return {3, out.str()};
    } catch (const std::domain_error& e) {
        out << "unsupported input: " << e.what() << "\n";
        return {3, out.str()};
    }
}

}  // namespace ordval
