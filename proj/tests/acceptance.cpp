#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <thread>

#include "support.hpp"
#include "tricyclic/classify.hpp"
#include "tricyclic/enumerate.hpp"
#include "tricyclic/families.hpp"
#include "tricyclic/spectra.hpp"
#include "tricyclic/structure.hpp"
#include "tricyclic/subgraph.hpp"

using namespace tricyclic;
using namespace testing_support;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int worker_threads() { return static_cast<int>(std::max(1u, std::min(8u, std::thread::hardware_concurrency()))); }

Polynomial integer_poly(std::initializer_list<long long> c) {
    std::vector<Rational> coeffs;
    for (long long x : c) coeffs.emplace_back(x);
    return Polynomial(coeffs);
}

bool quotient_contained(const QuotientMatrix& q, const Spectrum& full) {
    for (double x : quotient_spectrum(q).values) {
        const bool found =
            std::any_of(full.values.begin(), full.values.end(), [&](double y) { return std::abs(x - y) < 1e-7; });
        if (!found) return false;
    }
    return true;
}

// Tricyclic classes for n <= 8, shared by criteria 1 and 8.
std::vector<VerificationReport> theorem_reports;

Outcome criterion1() {
    CheckOptions options;
    options.tol = 1e-9;
    options.allow_large = true;
    options.threads = worker_threads();
    theorem_reports = theorem_check(8, options);
    std::uint64_t classes = 0;
    std::uint64_t in_scope_disagreements = 0;
    std::uint64_t out_of_scope = 0;
    std::uint64_t literal = 0;
    std::uint64_t non_k4 = 0;
    std::uint64_t boundary = 0;
    for (const auto& r : theorem_reports) {
        classes += r.total_graphs;
        in_scope_disagreements += r.disagreements.size();
        literal += r.literal_disagreements;
        boundary += r.boundary_suspects.size();
        for (const auto& e : r.out_of_scope) {
            ++out_of_scope;
            const Graph base = base_of(parse_graph6(e.graph6));
            if (!is_isomorphic(base, complete_graph(4))) ++non_k4;
        }
    }
    char buf[320];
    std::snprintf(buf, sizeof buf,
                  "%llu tricyclic classes n=4..8, %llu in-scope disagreements, %llu boundary suspects; "
                  "%llu classes with base K4 excluded, %llu of them have lambda2 < -1/2 (literal disagreements)",
                  static_cast<unsigned long long>(classes), static_cast<unsigned long long>(in_scope_disagreements),
                  static_cast<unsigned long long>(boundary), static_cast<unsigned long long>(out_of_scope),
                  static_cast<unsigned long long>(literal));
    return {in_scope_disagreements == 0 && non_k4 == 0, buf};
}

Outcome criterion2() {
    const double golden[] = {-0.4727, -0.4384, -0.4754, -0.4943, -0.4931, -0.4917, -0.4934,
                             -0.4931, -0.4521, -0.4807, -0.3820, -0.3723, -0.2679};
    double worst = 0.0;
    bool above = true;
    for (int i = 1; i <= kForbiddenCount; ++i) {
        const double l2 = lambda2(forbidden_graph(i));
        worst = std::max(worst, std::abs(l2 - golden[i - 1]));
        above = above && l2 >= -0.5;
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "F1..F13 max deviation %.2e (tol 5e-05), all >= -1/2: %s", worst,
                  above ? "yes" : "no");
    return {worst <= 5e-5 && above, buf};
}

Outcome criterion3() {
    int holding = 0;
    for (int k = 1; k <= 50; ++k) {
        const auto q = quotient_matrix(distance_matrix(t3_graph(k)), t3_partition(k));
        const auto expected = integer_poly({1, -(2 * k + 6), -(9 * k + 31), -(10 * k + 36), -(3 * k + 12)});
        holding += q.equitable && char_poly(q) == expected ? 1 : 0;
    }
    for (int t = 1; t <= 50; ++t) {
        const auto q = quotient_matrix(distance_matrix(t4_graph(t)), t4_partition(t));
        const auto expected =
            integer_poly({1, -(2 * t + 1), -(15 * t + 35), -(35 * t + 91), -(26 * t + 76), -(6 * t + 20)});
        holding += q.equitable && char_poly(q) == expected ? 1 : 0;
    }
    bool signs = true;
    for (int k = 1; k <= 50; ++k) {
        const auto q = quotient_matrix(distance_matrix(t3_graph(k)), t3_partition(k));
        signs = signs && char_poly(q).evaluate(Rational(-1, 2)) == Rational(-15, 16);
    }
    for (int t = 1; t <= 50; ++t) {
        const auto f = char_poly(quotient_matrix(distance_matrix(t4_graph(t)), t4_partition(t)));
        signs = signs && f.evaluate(Rational(-1, 2)) == Rational(-15, 32) && f.evaluate(Rational(-3)) == Rational(10);
    }
    return {holding == 100 && signs, std::to_string(holding) + "/100 exact identities, sign evaluations " +
                                         (signs ? "exact" : "MISMATCH")};
}

Outcome criterion4() {
    double slack = 1.0;
    for (int k = 1; k <= 30; ++k) {
        const double l2 = lambda2(t3_graph(k));
        slack = std::min({slack, l2 + 0.75, -0.5 - l2});
    }
    for (int t = 2; t <= 30; ++t) {
        const double l2 = lambda2(t4_graph(t));
        slack = std::min({slack, l2 + 0.55, -0.5 - l2});
    }
    int members = 0;
    double worst = -1.0;
    for (int n = 6; n <= 12; ++n) {
        for (const auto& [spec, g] : enumerate_family_members(n)) {
            ++members;
            worst = std::max(worst, lambda2(g));
        }
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "min bound slack %.3e; %d family members n<=12, max lambda2 %.9f", slack, members,
                  worst);
    return {slack >= 1e-9 && worst < -0.5 - 1e-9, buf};
}

Outcome criterion5() {
    int failures = 0;
    for (int k = 1; k <= 20; ++k) {
        const Spectrum s = distance_spectrum(t3_graph(k));
        if (multiplicity(s, -2.0, 1e-7) != k - 1) ++failures;
        if (multiplicity(s, -1.0, 1e-7) != 3) ++failures;
        if (multiplicity(s, -3.0, 1e-7) < 1) ++failures;
    }
    for (int t = 1; t <= 20; ++t) {
        const Spectrum s = distance_spectrum(t4_graph(t));
        if (multiplicity(s, -2.0, 1e-7) != t) ++failures;
        if (multiplicity(s, -1.0, 1e-7) != 1) ++failures;
    }
    return {failures == 0, std::to_string(100 - failures) + "/100 multiplicity claims hold"};
}

Outcome criterion6() {
    CheckOptions options;
    options.tol = 1e-9;
    options.threads = worker_threads();
    const auto report = blockgraph_check(7, options);
    return {report.disagreements.empty() && report.boundary_suspects.empty(),
            std::to_string(report.total_graphs) + " block graphs n=2..7, " +
                std::to_string(report.disagreements.size()) + " disagreements, " +
                std::to_string(report.boundary_suspects.size()) + " boundary suspects"};
}

Outcome criterion7() {
    std::mt19937_64 rng(20240601);
    int interlacing = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 15);
        const Graph g = random_connected_graph(n, static_cast<int>(rng() % 10), rng);
        const int size = 1 + static_cast<int>(rng() % n);
        const auto perm = random_permutation(n, rng);
        std::vector<int> subset(perm.begin(), perm.begin() + size);
        std::sort(subset.begin(), subset.end());
        interlacing += interlacing_holds(g, subset) ? 1 : 0;
    }

    int named = 0;
    for (int k = 1; k <= 20; ++k) {
        const Graph g = t3_graph(k);
        const auto q = quotient_matrix(distance_matrix(g), t3_partition(k));
        named += q.equitable && quotient_contained(q, distance_spectrum(g)) ? 1 : 0;
    }
    for (int t = 1; t <= 20; ++t) {
        const Graph g = t4_graph(t);
        const auto q = quotient_matrix(distance_matrix(g), t4_partition(t));
        named += q.equitable && quotient_contained(q, distance_spectrum(g)) ? 1 : 0;
    }

    int random_partitions = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 10);
        const Graph g = random_connected_graph(n, static_cast<int>(rng() % 3), rng);
        const auto d = distance_matrix(g);
        std::vector<int> color(n);
        for (int& c : color) c = static_cast<int>(rng() % 2);
        color[0] = 0;
        color[n - 1] = 1;
        const auto q = quotient_matrix(d, Partition(equitable_refinement(d, color)));
        random_partitions += q.equitable && quotient_contained(q, distance_spectrum(g)) ? 1 : 0;
    }

    std::vector<Graph> corpus;
    for (int n = 4; n <= 7; ++n) {
        for (Graph& g : enumerate_connected({n, n + 2})) corpus.push_back(std::move(g));
    }
    for (int i = 1; i <= kForbiddenCount; ++i) corpus.push_back(forbidden_graph(i));
    for (int n = 8; n <= 10; ++n) {
        for (const auto& member : enumerate_family_members(n)) corpus.push_back(member.second);
    }
    std::size_t invariant = 0;
    for (const Graph& g : corpus) {
        const std::string form = canonical_form(g);
        bool all = true;
        for (int i = 0; i < 100 && all; ++i) all = canonical_form(g.relabeled(random_permutation(g.n(), rng))) == form;
        invariant += all ? 1 : 0;
    }

    bool monotone = true;
    double previous = lambda2(t4_graph(0));
    for (int t = 1; t <= 20; ++t) {
        const double current = lambda2(t4_graph(t));
        monotone = monotone && previous <= current + 1e-9;
        previous = current;
    }

    const bool pass = interlacing == 1000 && named == 40 && random_partitions == 100 &&
                      invariant == corpus.size() && monotone;
    return {pass, "interlacing " + std::to_string(interlacing) + "/1000, named quotients " + std::to_string(named) +
                      "/40, random equitable " + std::to_string(random_partitions) + "/100, canonical invariance " +
                      std::to_string(invariant) + "/" + std::to_string(corpus.size()) +
                      " graphs x100, T4 lambda2 nondecreasing: " + (monotone ? "yes" : "no")};
}

Outcome criterion8() {
    std::uint64_t positives = 0;
    std::uint64_t violations = 0;
    for (const auto& r : theorem_reports) {
        positives += r.spectral_positive;
        violations += r.chordality_violations.size();
    }
    CheckOptions options;
    options.threads = worker_threads();
    options.allow_large = true;
    std::uint64_t connected = 0;
    for (int n = 2; n <= 8; ++n) {
        const auto report = chordality_check(n, options);
        connected += report.total_graphs;
        positives += report.spectral_positive;
        violations += report.chordality_violations.size();
    }
    return {violations == 0 && !theorem_reports.empty(),
            std::to_string(positives) + " spectral positives (tricyclic n<=8 and all " + std::to_string(connected) +
                " connected graphs n=2..8), " + std::to_string(violations) + " non-chordal"};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"exhaustive tricyclic verification n<=8", criterion1},
        {"forbidden subgraph golden lambda2", criterion2},
        {"exact quotient polynomial identities", criterion3},
        {"spectral placement of T3, T4 and family members", criterion4},
        {"multiplicity and rank claims", criterion5},
        {"block graph characterization n<=7", criterion6},
        {"property suites", criterion7},
        {"chordality necessity", criterion8},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %zu: %s: %s (%.2fs)\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), outcome.detail.c_str(), seconds);
        std::fflush(stdout);
        failed += outcome.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
