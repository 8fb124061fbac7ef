#ifndef TRICYCLIC_ENUMERATE_HPP
#define TRICYCLIC_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tricyclic/classify.hpp"
#include "tricyclic/graph.hpp"

namespace tricyclic {

/// Candidate budgets without --allow-large: labeled edge subsets of K_n
/// with a fixed edge count, and unrestricted subsets.
inline constexpr std::uint64_t kFixedEdgeCandidateLimit = std::uint64_t{1} << 25;
inline constexpr std::uint64_t kUnrestrictedCandidateLimit = std::uint64_t{1} << 21;
/// Edge subsets are 64-bit masks, so n(n-1)/2 must stay below 64.
inline constexpr int kMaxEnumerationOrder = 11;

/// Labeled edge subsets of K_n, in colex order of the subset, split into
/// contiguous rank ranges. Only subsets whose degree sequence is
/// non-increasing in vertex order are examined further; every isomorphism
/// class has such a labeling.
struct EnumerationJob {
    int n = 0;
    std::optional<int> m;
    int min_degree = 0;
    bool allow_large = false;
    int threads = 1;
    int chunks = 64;
};

struct RankRange {
    std::uint64_t begin;
    std::uint64_t end;
};

/// Number of labeled candidates the job iterates.
std::uint64_t candidate_count(const EnumerationJob& job);

/// Throws ParameterError for invalid n or m and ResourceGuardError when the
/// candidate count exceeds the budget and allow_large is not set.
void check_job(const EnumerationJob& job);

/// Disjoint ranges covering [0, candidate_count) in order.
std::vector<RankRange> chunk_ranges(const EnumerationJob& job);

using GraphFilter = std::function<bool(const Graph&)>;

/// Canonical forms of connected candidates in one rank range that pass
/// `keep`, sorted and unique.
std::vector<std::string> enumerate_range(const EnumerationJob& job, RankRange range, const GraphFilter& keep = {});

/// Canonical forms of every connected class, sorted. Chunks run on
/// job.threads workers; the merge is deterministic.
std::vector<std::string> enumerate_canonical_forms(const EnumerationJob& job, const GraphFilter& keep = {});

/// Canonical representatives, one per class, in canonical-form order.
std::vector<Graph> enumerate_connected(const EnumerationJob& job, const GraphFilter& keep = {});

struct OutOfScopeEntry {
    std::string graph6;
    double lambda2;
    bool spectral_positive;
};

struct VerificationReport {
    std::string kind; // "tricyclic", "block" or "chordality"
    int n = 0;
    std::uint64_t total_graphs = 0;
    std::uint64_t accepted = 0;
    std::uint64_t spectral_positive = 0;
    std::vector<std::string> disagreements;
    std::vector<OutOfScopeEntry> out_of_scope;
    std::uint64_t literal_disagreements = 0;
    std::vector<std::string> boundary_suspects;
    std::uint64_t chordal = 0;
    std::vector<std::string> chordality_violations;
    std::map<std::string, std::uint64_t> reject_reasons;
    std::map<int, std::uint64_t> totals_by_n;
    double runtime_seconds = 0.0;

    bool confirmed() const { return disagreements.empty(); }
    std::string to_json() const;
};

struct CheckOptions {
    double tol = kSpectralTolerance;
    bool allow_large = false;
    int threads = 1;
    /// Called with every enumerated canonical graph6 string.
    std::function<void(const std::string&)> on_graph;
};

/// Every connected tricyclic class on n vertices through
/// verify_against_spectrum.
VerificationReport theorem_check_n(int n, const CheckOptions& options = {});

/// theorem_check_n for 4 <= n <= n_max (smaller orders have no tricyclic
/// graphs).
std::vector<VerificationReport> theorem_check(int n_max, const CheckOptions& options = {});

/// Every connected block graph class with 2 <= n <= n_max: the structural
/// decision against lambda_2 < -1/2 - tol.
VerificationReport blockgraph_check(int n_max, const CheckOptions& options = {});

/// Every connected class on n vertices: spectral positives must be chordal.
VerificationReport chordality_check(int n, const CheckOptions& options = {});

} // namespace tricyclic

#endif // TRICYCLIC_ENUMERATE_HPP
