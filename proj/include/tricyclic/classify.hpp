#ifndef TRICYCLIC_CLASSIFY_HPP
#define TRICYCLIC_CLASSIFY_HPP

#include <optional>
#include <string>

#include "tricyclic/families.hpp"
#include "tricyclic/graph.hpp"

namespace tricyclic {

/// Strict threshold slack for the spectral predicate lambda_2 < -1/2 - tol.
inline constexpr double kSpectralTolerance = 1e-9;

enum class RejectReason {
    NotChordal,
    NonTriangleCycle,
    BaseTypeExcluded,
    ForbiddenSubgraph,
    NoFamilyMatch,
};

std::string to_string(RejectReason r);

struct Verdict {
    bool accepted = false;
    /// False for graphs whose base is K4; the characterization says nothing
    /// about them and such graphs are reported separately.
    bool in_scope = true;
    std::optional<FamilySpec> witness;
    std::optional<RejectReason> reject_reason;
    int forbidden_index = 0; // set with ForbiddenSubgraph
    std::optional<double> lambda2;
    std::optional<bool> agreement;
    bool boundary_suspect = false;

    /// "forbidden_subgraph(5)" style reason text, or "" when accepted.
    std::string reason_text() const;
};

/// Decision by family membership. Cheap rejections run first: not chordal,
/// base isomorphic to K4 (out of scope), base containing a five-vertex
/// 2-connected block, a forbidden distance-preserving subgraph. Remaining
/// graphs are accepted iff they match a family member. Throws DomainError for
/// non-tricyclic input and ConnectivityError for disconnected input.
Verdict classify_tricyclic(const Graph& g);

/// classify_tricyclic plus lambda_2, agreement with lambda_2 < -1/2 - tol,
/// and boundary_suspect when |lambda_2 + 1/2| < 100 tol.
Verdict verify_against_spectrum(const Graph& g, double tol = kSpectralTolerance);

} // namespace tricyclic

#endif // TRICYCLIC_CLASSIFY_HPP
