#include "tricyclic/classify.hpp"

#include <cmath>

#include "tricyclic/error.hpp"
#include "tricyclic/spectra.hpp"
#include "tricyclic/structure.hpp"
#include "tricyclic/subgraph.hpp"

namespace tricyclic {

std::string to_string(RejectReason r) {
    switch (r) {
    case RejectReason::NotChordal:
        return "not_chordal";
    case RejectReason::NonTriangleCycle:
        return "non_triangle_cycle";
    case RejectReason::BaseTypeExcluded:
        return "base_type_excluded";
    case RejectReason::ForbiddenSubgraph:
        return "forbidden_subgraph";
    case RejectReason::NoFamilyMatch:
        return "no_family_match";
    }
    return "unknown";
}

std::string Verdict::reason_text() const {
    if (!reject_reason) return "";
    if (*reject_reason == RejectReason::ForbiddenSubgraph) return "forbidden_subgraph(" + std::to_string(forbidden_index) + ")";
    return to_string(*reject_reason);
}

Verdict classify_tricyclic(const Graph& g) {
    const int c = cyclomatic_number(g);
    if (c != 3) {
        throw DomainError("cyclomatic number is " + std::to_string(c) +
                          "; classify handles tricyclic graphs only (use blockgraph for block graphs)");
    }
    Verdict v;
    auto reject = [&](RejectReason r) {
        v.accepted = false;
        v.reject_reason = r;
        return v;
    };

    if (!is_chordal(g)) return reject(RejectReason::NotChordal);

    const Graph base = base_of(g);
    if (base.n() == 4) {
        v.in_scope = false;
        return reject(RejectReason::BaseTypeExcluded);
    }
    // A chordal tricyclic base has blocks K2, K3, K4 - e, K4 or a five-vertex
    // block carrying all three independent cycles.
    for (const auto& block : block_decomposition(base).blocks) {
        if (block.size() >= 5) return reject(RejectReason::NonTriangleCycle);
    }

    if (const int i = first_forbidden(g); i != 0) {
        v.forbidden_index = i;
        return reject(RejectReason::ForbiddenSubgraph);
    }

    if (auto spec = match_family(g)) {
        v.accepted = true;
        v.witness = std::move(spec);
        return v;
    }
    return reject(RejectReason::NoFamilyMatch);
}

Verdict verify_against_spectrum(const Graph& g, double tol) {
    Verdict v = classify_tricyclic(g);
    const double l2 = lambda2(g);
    v.lambda2 = l2;
    v.agreement = v.accepted == (l2 < -0.5 - tol);
    v.boundary_suspect = std::abs(l2 + 0.5) < 100.0 * tol;
    return v;
}

} // namespace tricyclic
