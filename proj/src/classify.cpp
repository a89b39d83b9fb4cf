#include "ordval/classify.hpp"

#include <sstream>

#include "json.hpp"

namespace ordval {

namespace {

ValuationDescriptor fromSegment(const GroupDescriptor& G, const FinalSegment& s) {
    return {s, convexQuotient(G, s), segmentSubgroup(G, s)};
}

}  // namespace

ValuationDescriptor v0Descriptor(const GroupDescriptor& G) {
    return fromSegment(G, largestDivisibleConvex(G));
}

std::pair<bool, std::optional<long>> v0LrDefinable(const GroupDescriptor& G, long primeBound) {
    GroupDescriptor H = v0Descriptor(G).valueGroup;
    if (H.trivial()) return {false, std::nullopt};
    for (long p = 2; p <= primeBound; ++p) {
        if (!isPrime(p)) continue;
        if (largestPDivisibleConvex(H, p) == FinalSegment::trivialSeg()) return {true, p};
    }
    return {false, std::nullopt};
}

ValuationDescriptor vpDescriptor(const GroupDescriptor& G, long p) {
    return fromSegment(G, largestPDivisibleConvex(G, p));
}

std::vector<CaseTag> thm45Cases(const CoeffField& k, const GroupDescriptor& G) {
    std::vector<CaseTag> out;
    for (CaseTag c : {CaseTag::Discrete, CaseTag::GroupLimitPoint, CaseTag::ResidueLimitPoint})
        if (caseAvailable(k, G, c)) out.push_back(c);
    return out;
}

bool lrDefinableRegular(const GroupDescriptor& G) {
    return isRegular(G) && !G.trivial() && !G.allComponentsDivisible();
}

bool arcV0Collapse(const GroupDescriptor& G) {
    bool collapse = isDiscretelyOrdered(G) || !isClosedInHull(G);
    if (collapse) {
        if (v0Descriptor(G).segment != FinalSegment::trivialSeg())
            throw std::logic_error("collapse criterion met but v0 has a nontrivial kernel");
        if (!v0LrDefinable(G, 64).first)
            throw std::logic_error("collapse criterion met but v0 not found definable");
    }
    return collapse;
}

bool nonSingular(const GroupDescriptor& G, long primeBound) {
    (void)primeBound;  // closed forms below need no prime search
    switch (G.shape) {
        case GroupDescriptor::Shape::FiniteLex:
            // Finitely many components, each contributing a factor of size
            // at most p to G/pG.
            return true;
        case GroupDescriptor::Shape::OmegaLex:
        case GroupDescriptor::Shape::OmegaPlusOneLex:
            if (const auto* c = std::get_if<ConstantRule>(&G.rule))
                // A missing prime repeats in every component, giving an
                // infinite quotient; divisible components never fail.
                return c->comp.divisible();
            // Prefix-primes components all fail at p = 2.
            return false;
    }
    return false;
}

NipWitness stronglyNipWitnessed(const GroupDescriptor& G) {
    // For these component shapes the finiteness conditions coincide with
    // non-singularity: finitely many p-divisibility failures per prime.
    return nonSingular(G, 2) ? NipWitness::Witnessed : NipWitness::NotWitnessedByPresentation;
}

bool fieldDenseInRc(const CoeffField& k, const GroupDescriptor& G) {
    return k.declaredRealClosed && G.allComponentsDivisible();
}

ClassificationReport classifyReport(const CoeffField& k, const GroupDescriptor& G,
                                    long primeBound) {
    ClassificationReport r;
    r.field = k;
    r.group = G;
    r.denselyOrdered = isDenselyOrdered(G);
    r.discretelyOrdered = isDiscretelyOrdered(G);
    r.regular = isRegular(G);
    r.denseInHull = isDenseInHull(G);
    r.immediateInHull = isImmediateInHull(G);
    r.closedInHull = isClosedInHull(G);
    r.archimedeanModelCandidate = r.regular ? "candidate-yes" : "no";
    r.v0 = v0Descriptor(G);
    auto [def, p] = v0LrDefinable(G, primeBound);
    r.v0LrDefinable = def;
    r.v0WitnessPrime = p;
    for (long q = 2; q <= primeBound; ++q)
        if (isPrime(q)) r.vpTable.emplace_back(q, vpDescriptor(G, q));
    r.thm45 = thm45Cases(k, G);
    r.lrDefinableRegular = lrDefinableRegular(G);
    r.arcV0Collapse = arcV0Collapse(G);
    r.nonSingular = nonSingular(G, primeBound);
    r.stronglyNip = stronglyNipWitnessed(G);
    r.fieldDenseInRc = fieldDenseInRc(k, G);
    return r;
}

std::string coeffFieldStr(const CoeffField& k) {
    std::string base =
        k.kind == CoeffField::Kind::PlainRationals ? "Q" : "quad(" + std::to_string(k.d) + ")";
    return k.declaredRealClosed ? "rc(" + base + ")" : base;
}

namespace {

const char* boolStr(bool b) { return b ? "true" : "false"; }

std::string casesStr(const std::vector<CaseTag>& cs) {
    if (cs.empty()) return "none";
    std::string out;
    for (size_t i = 0; i < cs.size(); ++i) {
        if (i) out += ", ";
        out += caseStr(cs[i]);
    }
    return out;
}

std::string nipStr(NipWitness w) {
    return w == NipWitness::Witnessed ? "witnessed" : "not-witnessed-by-presentation";
}

}  // namespace

std::string reportText(const ClassificationReport& r) {
    std::ostringstream out;
    out << "coeff_field: " << coeffFieldStr(r.field) << "\n";
    out << "group: " << groupStr(r.group) << "\n";
    out << "densely_ordered: " << boolStr(r.denselyOrdered) << "\n";
    out << "discretely_ordered: " << boolStr(r.discretelyOrdered) << "\n";
    out << "regular: " << boolStr(r.regular) << "\n";
    out << "dense_in_hull: " << boolStr(r.denseInHull) << "\n";
    out << "immediate_in_hull: " << boolStr(r.immediateInHull) << "\n";
    out << "closed_in_hull: " << boolStr(r.closedInHull) << "\n";
    out << "archimedean_model_candidate: " << r.archimedeanModelCandidate << "\n";
    out << "v0_segment: " << segmentStr(r.v0.segment) << "\n";
    out << "v0_value_group: " << groupStr(r.v0.valueGroup) << "\n";
    out << "v0_residue_group: " << groupStr(r.v0.residueGroup) << "\n";
    out << "v0_lr_definable: " << boolStr(r.v0LrDefinable) << "\n";
    out << "v0_witness_prime: " << (r.v0WitnessPrime ? std::to_string(*r.v0WitnessPrime) : "none")
        << "\n";
    out << "v0_lr_criterion: p-divisibility-only\n";
    for (const auto& [p, vd] : r.vpTable)
        out << "vp[" << p << "]_segment: " << segmentStr(vd.segment) << "\n";
    out << "thm45_cases: " << casesStr(r.thm45) << "\n";
    out << "lr_definable_regular: " << boolStr(r.lrDefinableRegular) << "\n";
    out << "arc_v0_collapse: " << boolStr(r.arcV0Collapse) << "\n";
    out << "non_singular: " << boolStr(r.nonSingular) << " (presentation-level)\n";
    out << "strongly_nip: " << nipStr(r.stronglyNip) << "\n";
    out << "field_dense_in_rc: " << boolStr(r.fieldDenseInRc) << "\n";
    return out.str();
}

std::string reportJson(const ClassificationReport& r) {
    nlohmann::ordered_json j;
    j["coeff_field"] = coeffFieldStr(r.field);
    j["group"] = groupStr(r.group);
    j["densely_ordered"] = r.denselyOrdered;
    j["discretely_ordered"] = r.discretelyOrdered;
    j["regular"] = r.regular;
    j["dense_in_hull"] = r.denseInHull;
    j["immediate_in_hull"] = r.immediateInHull;
    j["closed_in_hull"] = r.closedInHull;
    j["archimedean_model_candidate"] = r.archimedeanModelCandidate;
    j["v0_segment"] = segmentStr(r.v0.segment);
    j["v0_value_group"] = groupStr(r.v0.valueGroup);
    j["v0_residue_group"] = groupStr(r.v0.residueGroup);
    j["v0_lr_definable"] = r.v0LrDefinable;
    if (r.v0WitnessPrime)
        j["v0_witness_prime"] = *r.v0WitnessPrime;
    else
        j["v0_witness_prime"] = nullptr;
    j["v0_lr_criterion"] = "p-divisibility-only";
    nlohmann::ordered_json table = nlohmann::ordered_json::object();
    for (const auto& [p, vd] : r.vpTable) table[std::to_string(p)] = segmentStr(vd.segment);
    j["vp_segments"] = table;
    nlohmann::ordered_json cases = nlohmann::ordered_json::array();
    for (CaseTag c : r.thm45) cases.push_back(caseStr(c));
    j["thm45_cases"] = cases;
    j["lr_definable_regular"] = r.lrDefinableRegular;
    j["arc_v0_collapse"] = r.arcV0Collapse;
    j["non_singular"] = r.nonSingular;
    j["non_singular_scope"] = "presentation-level";
    j["strongly_nip"] = nipStr(r.stronglyNip);
    j["field_dense_in_rc"] = r.fieldDenseInRc;
    return j.dump(2) + "\n";
}

}  // namespace ordval
