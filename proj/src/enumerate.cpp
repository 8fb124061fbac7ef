#include "tricyclic/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <thread>

#include <json.hpp>

#include "tricyclic/error.hpp"
#include "tricyclic/spectra.hpp"
#include "tricyclic/structure.hpp"
#include "tricyclic/subgraph.hpp"

namespace tricyclic {

namespace {

using Mask = std::uint64_t;

const std::array<std::array<std::uint64_t, 65>, 65>& binomials() {
    static const auto table = [] {
        std::array<std::array<std::uint64_t, 65>, 65> c{};
        for (int a = 0; a <= 64; ++a) {
            c[a][0] = 1;
            for (int b = 1; b <= a; ++b) c[a][b] = c[a - 1][b - 1] + (b <= a - 1 ? c[a - 1][b] : 0);
        }
        return c;
    }();
    return table;
}

int pair_count(int n) { return n * (n - 1) / 2; }

// Smallest m-subset mask with colex rank r.
Mask unrank_colex(std::uint64_t r, int m) {
    const auto& c = binomials();
    Mask mask = 0;
    for (int i = m; i >= 1; --i) {
        int x = i - 1;
        while (x + 1 <= 63 && c[x + 1][i] <= r) ++x;
        mask |= Mask{1} << x;
        r -= c[x][i];
    }
    return mask;
}

// Next mask with the same popcount in increasing numeric (= colex) order.
Mask next_same_popcount(Mask x) {
    const Mask low = x & (~x + 1);
    const Mask ripple = x + low;
    return (((ripple ^ x) >> 2) / low) | ripple;
}

struct EdgeIndex {
    std::vector<int> u;
    std::vector<int> v;
};

EdgeIndex edge_index(int n) {
    EdgeIndex idx;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            idx.u.push_back(u);
            idx.v.push_back(v);
        }
    }
    return idx;
}

class CandidateFilter {
public:
    CandidateFilter(const EnumerationJob& job, const GraphFilter& keep)
        : n_(job.n), min_degree_(job.min_degree), keep_(keep), index_(edge_index(job.n)) {}

    void visit(Mask mask, std::vector<std::string>& out) const {
        std::array<int, kMaxEnumerationOrder> degree{};
        std::array<std::uint32_t, kMaxEnumerationOrder> adj{};
        for (Mask rest = mask; rest != 0; rest &= rest - 1) {
            const int k = std::countr_zero(rest);
            const int u = index_.u[k];
            const int v = index_.v[k];
            ++degree[u];
            ++degree[v];
            adj[u] |= 1u << v;
            adj[v] |= 1u << u;
        }
        for (int v = 1; v < n_; ++v) {
            if (degree[v] > degree[v - 1]) return;
        }
        if (n_ > 0 && degree[n_ - 1] < min_degree_) return;

        const std::uint32_t full = (1u << n_) - 1;
        std::uint32_t seen = 1;
        std::uint32_t frontier = 1;
        while (frontier != 0) {
            std::uint32_t next = 0;
            for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
            frontier = next & ~seen;
            seen |= next;
        }
        if (n_ > 0 && seen != full) return;

        std::vector<Edge> edges;
        for (Mask rest = mask; rest != 0; rest &= rest - 1) {
            const int k = std::countr_zero(rest);
            edges.emplace_back(index_.u[k], index_.v[k]);
        }
        const Graph g(n_, edges);
        if (keep_ && !keep_(g)) return;
        out.push_back(canonical_form(g));
    }

private:
    int n_;
    int min_degree_;
    const GraphFilter& keep_;
    EdgeIndex index_;
};

void sort_unique(std::vector<std::string>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

std::uint64_t candidate_count(const EnumerationJob& job) {
    const int pairs = pair_count(job.n);
    if (job.m) {
        if (*job.m < 0 || *job.m > pairs) return 0;
        return binomials()[pairs][*job.m];
    }
    return std::uint64_t{1} << pairs;
}

void check_job(const EnumerationJob& job) {
    if (job.n < 1 || job.n > kMaxEnumerationOrder) {
        throw ParameterError("enumeration needs 1 <= n <= " + std::to_string(kMaxEnumerationOrder) + ", got " +
                             std::to_string(job.n));
    }
    if (job.m && *job.m < 0) throw ParameterError("edge count must be nonnegative");
    if (job.threads < 1 || job.chunks < 1) throw ParameterError("threads and chunks must be positive");
    if (job.allow_large) return;
    const auto count = candidate_count(job);
    const auto limit = job.m ? kFixedEdgeCandidateLimit : kUnrestrictedCandidateLimit;
    if (count > limit) {
        throw ResourceGuardError(std::to_string(count) + " labeled candidates exceed the limit of " +
                                 std::to_string(limit) + "; pass --allow-large to proceed");
    }
}

std::vector<RankRange> chunk_ranges(const EnumerationJob& job) {
    const auto total = candidate_count(job);
    const auto chunks = static_cast<std::uint64_t>(job.chunks);
    std::vector<RankRange> out;
    for (std::uint64_t i = 0; i < chunks; ++i) {
        const std::uint64_t begin = total / chunks * i + std::min(i, total % chunks);
        const std::uint64_t end = begin + total / chunks + (i < total % chunks ? 1 : 0);
        if (begin < end) out.push_back({begin, end});
    }
    return out;
}

std::vector<std::string> enumerate_range(const EnumerationJob& job, RankRange range, const GraphFilter& keep) {
    check_job(job);
    std::vector<std::string> out;
    if (range.begin >= range.end) return out;
    const CandidateFilter filter(job, keep);
    if (job.m) {
        Mask mask = unrank_colex(range.begin, *job.m);
        for (std::uint64_t r = range.begin; r < range.end; ++r) {
            filter.visit(mask, out);
            if (*job.m == 0) break;
            if (r + 1 < range.end) mask = next_same_popcount(mask);
        }
    } else {
        for (std::uint64_t mask = range.begin; mask < range.end; ++mask) filter.visit(mask, out);
    }
    sort_unique(out);
    return out;
}

std::vector<std::string> enumerate_canonical_forms(const EnumerationJob& job, const GraphFilter& keep) {
    check_job(job);
    const auto ranges = chunk_ranges(job);
    std::vector<std::vector<std::string>> parts(ranges.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < ranges.size(); i = next++) parts[i] = enumerate_range(job, ranges[i], keep);
    };
    const int workers = std::min<int>(job.threads, static_cast<int>(ranges.size()));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::vector<std::string> out;
    for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    sort_unique(out);
    return out;
}

std::vector<Graph> enumerate_connected(const EnumerationJob& job, const GraphFilter& keep) {
    std::vector<Graph> out;
    for (const auto& form : enumerate_canonical_forms(job, keep)) out.push_back(parse_graph6(form));
    return out;
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["kind"] = kind;
    j["n"] = n;
    j["total_graphs"] = total_graphs;
    j["accepted"] = accepted;
    j["spectral_positive"] = spectral_positive;
    j["disagreements"] = disagreements;
    j["literal_disagreements"] = literal_disagreements;
    auto oos = nlohmann::ordered_json::array();
    for (const auto& e : out_of_scope) {
        oos.push_back({{"graph6", e.graph6}, {"lambda2", e.lambda2}, {"spectral_positive", e.spectral_positive}});
    }
    j["out_of_scope"] = oos;
    j["boundary_suspects"] = boundary_suspects;
    j["chordal_count"] = chordal;
    j["chordality_violations"] = chordality_violations;
    j["reject_reasons"] = reject_reasons;
    auto by_n = nlohmann::ordered_json::object();
    for (const auto& [order, count] : totals_by_n) by_n[std::to_string(order)] = count;
    j["totals_by_n"] = by_n;
    j["runtime_seconds"] = runtime_seconds;
    j["confirmed"] = confirmed();
    return j.dump();
}

VerificationReport theorem_check_n(int n, const CheckOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.kind = "tricyclic";
    report.n = n;
    EnumerationJob job{n, n + 2, 0, options.allow_large, options.threads};
    for (const auto& form : enumerate_canonical_forms(job)) {
        if (options.on_graph) options.on_graph(form);
        const Graph g = parse_graph6(form);
        const Verdict v = verify_against_spectrum(g, options.tol);
        const bool positive = *v.lambda2 < -0.5 - options.tol;
        ++report.total_graphs;
        if (v.accepted) ++report.accepted;
        else ++report.reject_reasons[to_string(*v.reject_reason)];
        if (positive) ++report.spectral_positive;
        if (!*v.agreement) {
            ++report.literal_disagreements;
            if (v.in_scope) report.disagreements.push_back(form);
        }
        if (!v.in_scope) report.out_of_scope.push_back({form, *v.lambda2, positive});
        if (v.boundary_suspect) report.boundary_suspects.push_back(form);
        const bool chordal = is_chordal(g);
        if (chordal) ++report.chordal;
        if (positive && !chordal) report.chordality_violations.push_back(form);
    }
    report.totals_by_n[n] = report.total_graphs;
    report.runtime_seconds = seconds_since(start);
    return report;
}

std::vector<VerificationReport> theorem_check(int n_max, const CheckOptions& options) {
    std::vector<VerificationReport> out;
    for (int n = 4; n <= n_max; ++n) out.push_back(theorem_check_n(n, options));
    return out;
}

VerificationReport blockgraph_check(int n_max, const CheckOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.kind = "block";
    report.n = n_max;
    for (int n = 2; n <= n_max; ++n) {
        EnumerationJob job{n, std::nullopt, 0, options.allow_large, options.threads};
        const auto forms = enumerate_canonical_forms(job, [](const Graph& g) { return is_block_graph(g); });
        report.totals_by_n[n] = forms.size();
        for (const auto& form : forms) {
            if (options.on_graph) options.on_graph(form);
            const Graph g = parse_graph6(form);
            const bool below = blockgraph_lambda2_below(g);
            const double l2 = lambda2(g);
            const bool positive = l2 < -0.5 - options.tol;
            ++report.total_graphs;
            if (below) ++report.accepted;
            if (positive) ++report.spectral_positive;
            if (below != positive) {
                ++report.literal_disagreements;
                report.disagreements.push_back(form);
            }
            if (std::abs(l2 + 0.5) < 100.0 * options.tol) report.boundary_suspects.push_back(form);
            const bool chordal = is_chordal(g);
            if (chordal) ++report.chordal;
            if (positive && !chordal) report.chordality_violations.push_back(form);
        }
    }
    report.runtime_seconds = seconds_since(start);
    return report;
}

VerificationReport chordality_check(int n, const CheckOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.kind = "chordality";
    report.n = n;
    EnumerationJob job{n, std::nullopt, 0, options.allow_large, options.threads};
    for (const auto& form : enumerate_canonical_forms(job)) {
        if (options.on_graph) options.on_graph(form);
        const Graph g = parse_graph6(form);
        ++report.total_graphs;
        const bool chordal = is_chordal(g);
        if (chordal) ++report.chordal;
        if (n < 2) continue;
        const double l2 = lambda2(g);
        const bool positive = l2 < -0.5 - options.tol;
        if (positive) ++report.spectral_positive;
        if (positive && !chordal) report.chordality_violations.push_back(form);
    }
    report.totals_by_n[n] = report.total_graphs;
    report.runtime_seconds = seconds_since(start);
    return report;
}

} // namespace tricyclic
