/**
 * @file classify.hpp
 * @brief Classification reports for Hahn series fields: the lattice of
 *        convex-subgroup valuations (v0 and the p-divisible vp family),
 *        definability criteria, applicable cut constructions, and
 *        presentation-level non-singularity / strong-NIP witnesses.
 */
#pragma once

#include "ordval/defval.hpp"

namespace ordval {

/// A coarsening of the natural valuation, recorded by the convex subgroup
/// it kills: value group = G/H, residue (Hahn) field value group = H.
struct ValuationDescriptor {
    FinalSegment segment;
    GroupDescriptor valueGroup;
    GroupDescriptor residueGroup;

    bool operator==(const ValuationDescriptor&) const = default;
};

/// Presentation-level strong-NIP verdict. A failing presentation never
/// refutes the property (the criterion quantifies over elementarily
/// equivalent presentations), hence no third "refuted" state.
enum class NipWitness { Witnessed, NotWitnessedByPresentation };

struct ClassificationReport {
    CoeffField field;
    GroupDescriptor group;

    bool denselyOrdered = false;
    bool discretelyOrdered = false;
    bool regular = false;
    bool denseInHull = false;
    bool immediateInHull = false;
    bool closedInHull = false;
    /// "candidate-yes" when regular (archimedean models exist for regular
    /// groups), otherwise "no".
    std::string archimedeanModelCandidate;

    ValuationDescriptor v0;
    bool v0LrDefinable = false;
    std::optional<long> v0WitnessPrime;

    std::vector<std::pair<long, ValuationDescriptor>> vpTable;
    std::vector<CaseTag> thm45;  // sorted: Discrete, GroupLimitPoint, ResidueLimitPoint

    bool lrDefinableRegular = false;
    bool arcV0Collapse = false;
    bool nonSingular = false;
    NipWitness stronglyNip = NipWitness::NotWitnessedByPresentation;
    bool fieldDenseInRc = false;
};

/// Coarsest valuation with real closed residue: quotient by the largest
/// divisible convex subgroup.
ValuationDescriptor v0Descriptor(const GroupDescriptor& G);

/// Definability criterion for v0: some prime p <= primeBound for which the
/// v0 value group has no nontrivial p-divisible convex subgroup. Returns
/// (false, empty) when v0 is trivial or no prime works. Only the
/// p-divisibility clause of the criterion is evaluated.
std::pair<bool, std::optional<long>> v0LrDefinable(const GroupDescriptor& G, long primeBound);

/// Quotient by the largest p-divisible convex subgroup.
ValuationDescriptor vpDescriptor(const GroupDescriptor& G, long p);

/// The set of applicable cut constructions over (k, G), sorted.
std::vector<CaseTag> thm45Cases(const CoeffField& k, const GroupDescriptor& G);

/// Regular and non-divisible: the coarsening is definable without
/// parameters.
bool lrDefinableRegular(const GroupDescriptor& G);

/// Discretely ordered or not closed in the hull; when true, the natural
/// valuation collapses onto v0 (trivial segment) and v0 is definable —
/// both re-checked here (std::logic_error on internal disagreement).
bool arcV0Collapse(const GroupDescriptor& G);

/// G/pG finite for every prime p. Closed-form over the component rules; the
/// bound only limits scans over finite prime sets.
bool nonSingular(const GroupDescriptor& G, long primeBound);

/// Whether this presentation witnesses strong NIP: for every prime only
/// finitely many components fail p-divisibility (component index bounds
/// [C : pC] <= p, so the second finiteness condition is automatic).
NipWitness stronglyNipWitnessed(const GroupDescriptor& G);

/// k<<G>> is dense in its real closure iff it is real closed: declared
/// real closed coefficients and a divisible group.
bool fieldDenseInRc(const CoeffField& k, const GroupDescriptor& G);

ClassificationReport classifyReport(const CoeffField& k, const GroupDescriptor& G,
                                    long primeBound = 13);

/// Deterministic line-oriented "key: value" rendering, fixed key order.
std::string reportText(const ClassificationReport& r);
/// Same content as JSON (identical keys).
std::string reportJson(const ClassificationReport& r);

std::string coeffFieldStr(const CoeffField& k);

}  // namespace ordval
