// Python bindings for the ordval kernel. Everything crosses the boundary as
// expression strings in the CLI grammar, so exact rational data never has to
// survive a float conversion.
#include "ordval/checks.hpp"
#include "ordval/cli.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ordval;

namespace {

GroupDescriptor G(const std::string& e) { return parseGroup(e); }
CoeffField K(const std::string& e) { return parseCoeffField(e); }
Series S(const std::string& coeff, const std::string& group, const std::string& e) {
    return parseSeries(e, K(coeff), G(group));
}
CutPoint C(const std::string& group, const std::string& e) { return parseCut(e, G(group)); }

}  // namespace

PYBIND11_MODULE(_ordval, m) {
    m.doc() = "Exact kernel for lexicographic sums of rational subgroups and "
              "Hahn series fields";

    py::register_exception<ParseError>(m, "ExprParseError", PyExc_ValueError);

    // Parsing / canonical printing.
    m.def("canonical_group", [](const std::string& e) { return groupStr(G(e)); });
    m.def("canonical_element", [](const std::string& e) { return hullStr(parseElement(e)); });
    m.def("canonical_series", [](const std::string& coeff, const std::string& group,
                                 const std::string& e) { return seriesStr(S(coeff, group, e)); });
    m.def("canonical_cut",
          [](const std::string& group, const std::string& e) { return cutStr(C(group, e)); });

    // Group predicates and constructions.
    m.def("densely_ordered", [](const std::string& g) { return isDenselyOrdered(G(g)); });
    m.def("discretely_ordered", [](const std::string& g) { return isDiscretelyOrdered(G(g)); });
    m.def("regular", [](const std::string& g) { return isRegular(G(g)); });
    m.def("dense_in_hull", [](const std::string& g) { return isDenseInHull(G(g)); });
    m.def("immediate_in_hull", [](const std::string& g) { return isImmediateInHull(G(g)); });
    m.def("closed_in_hull", [](const std::string& g) { return isClosedInHull(G(g)); });
    m.def("member", [](const std::string& g, const std::string& x) {
        return gMember(parseElement(x), G(g));
    });
    m.def("limit_point", [](const std::string& g, const std::string& x) {
        return isLimitPoint(parseElement(x), G(g));
    });
    m.def("nondense_witness",
          [](const std::string& g) { return hullStr(findNondenseWitness(G(g))); });
    m.def("p_divisible_segment", [](const std::string& g, long p) {
        return segmentStr(largestPDivisibleConvex(G(g), p));
    });
    m.def("between",
          [](const std::string& g, const std::string& a, const std::string& b,
             long bound) -> std::optional<std::string> {
              auto r = oracleBetween(G(g), parseElement(a), parseElement(b), bound);
              if (!r) return std::nullopt;
              return hullStr(r->value);
          },
          py::arg("group"), py::arg("lo"), py::arg("hi"), py::arg("bound") = 64);

    // Series field operations.
    auto binop = [](Series (*op)(const Series&, const Series&)) {
        return [op](const std::string& coeff, const std::string& group, const std::string& x,
                    const std::string& y) {
            return seriesStr(op(S(coeff, group, x), S(coeff, group, y)));
        };
    };
    m.def("s_add", binop(&sAdd));
    m.def("s_sub", binop(&sSub));
    m.def("s_mul", binop(&sMul));
    m.def("s_cmp", [](const std::string& coeff, const std::string& group, const std::string& x,
                      const std::string& y) { return sCmp(S(coeff, group, x), S(coeff, group, y)); });
    m.def("s_vmin", [](const std::string& coeff, const std::string& group,
                       const std::string& x) -> std::optional<std::string> {
        auto v = sVmin(S(coeff, group, x));
        if (!v) return std::nullopt;
        return hullStr(*v);
    });
    auto truncOut = [](const TruncatedResult& r) {
        return py::make_tuple(seriesStr(r.terms), hullStr(r.guarantee), r.exact);
    };
    m.def("trunc_inverse", [truncOut](const std::string& coeff, const std::string& group,
                                      const std::string& x, long n) {
        return truncOut(truncInverse(S(coeff, group, x), n));
    });
    m.def("trunc_sqrt", [truncOut](const std::string& coeff, const std::string& group,
                                   const std::string& x, long n) {
        return truncOut(truncSqrt(S(coeff, group, x), n));
    });

    // Cut-based valuation machinery.
    m.def("make_cut", [](const std::string& coeff, const std::string& group,
                         const std::string& tag) {
        CaseTag t = tag == "discrete"          ? CaseTag::Discrete
                    : tag == "group-limit"     ? CaseTag::GroupLimitPoint
                    : tag == "residue-limit"   ? CaseTag::ResidueLimitPoint
                                               : throw std::invalid_argument("unknown case: " + tag);
        return cutStr(makeCut(K(coeff), G(group), t));
    });
    m.def("member_ds", [](const std::string& coeff, const std::string& group,
                          const std::string& x, const std::string& cut) {
        return memberDs(S(coeff, group, x), C(group, cut));
    });
    m.def("member_os", [](const std::string& coeff, const std::string& group,
                          const std::string& x, const std::string& cut) {
        return memberOs(S(coeff, group, x), C(group, cut));
    });
    m.def("os_violation_witness", [](const std::string& coeff, const std::string& group,
                                     const std::string& x, const std::string& cut) {
        return seriesStr(osViolationWitness(S(coeff, group, x), C(group, cut)));
    });
    m.def("phi_holds", [](const std::string& coeff, const std::string& group,
                          const std::string& x) { return phiHolds(S(coeff, group, x)); });
    m.def("phi_witness", [truncOut](const std::string& coeff, const std::string& group,
                                    const std::string& x, long n) {
        return truncOut(phiWitness(S(coeff, group, x), n));
    });

    // Classification.
    m.def("classify_text", [](const std::string& coeff, const std::string& group,
                              long primeBound) {
        return reportText(classifyReport(K(coeff), G(group), primeBound));
    }, py::arg("coeff"), py::arg("group"), py::arg("prime_bound") = 13);
    m.def("classify_json", [](const std::string& coeff, const std::string& group,
                              long primeBound) {
        return reportJson(classifyReport(K(coeff), G(group), primeBound));
    }, py::arg("coeff"), py::arg("group"), py::arg("prime_bound") = 13);

    // Property-check harness and CLI entry point.
    m.def("run_suite", [](const std::string& name, std::uint64_t seed, long trials,
                          long primeBound) {
        CheckOptions o{seed, trials, primeBound};
        CheckResult r = runSuite(name, o);
        return py::make_tuple(r.passed, r.assertions, r.detail);
    }, py::arg("name"), py::arg("seed") = 0x5EED, py::arg("trials") = 1000,
       py::arg("prime_bound") = 50);
    m.def("suite_names", [] { return suiteNames(); });
    m.def("run_command", [](const std::vector<std::string>& args) {
        CommandResult r = runCommand(args);
        return py::make_tuple(r.exitCode, r.output);
    });
}
