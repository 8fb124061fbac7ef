#ifndef TRICYCLIC_FAMILIES_HPP
#define TRICYCLIC_FAMILIES_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tricyclic/graph.hpp"
#include "tricyclic/spectra.hpp"

namespace tricyclic {

enum class Family {
    TGeneral, // T(s,t;h1..h5): params s t h1 h2 h3 h4 h5
    T3,       // k pendant edges at the common vertex of three triangles
    T4,       // t pendant edges at the apex shared by a triangle and a diamond
    T5,
    T6,
    T7,
    T1,  // three triangles in a chain joined by paths of length s and t
    T2,  // triangles x and z joined to triangle y at one vertex by paths p, q
    F,   // forbidden graph F_i, i in 1..13
    BG,  // BG(p,q,3,2,2), p, q >= 2
    BGA,
};

/// A named construction with integer parameters. Text syntax:
///   t-general s t h1 h2 h3 h4 h5 | t3 k | t4 t | t5 | t6 | t7 |
///   t1 s t | t2 p q | f i | bg p q | bga
struct FamilySpec {
    Family family = Family::T7;
    std::vector<int> params;

    /// Throws ParameterError on unknown names, wrong arity or bad values.
    static FamilySpec parse(std::string_view text);
    static FamilySpec parse(const std::vector<std::string>& tokens);

    std::string name() const;
    std::string to_string() const;

    /// Throws ParameterError when params are outside the family's range or
    /// the graph would exceed kMaxVertices.
    void validate() const;
    int vertex_count() const;

    /// True for the four families accepted by the tricyclic characterization.
    bool in_theorem() const;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
    friend auto operator<=>(const FamilySpec&, const FamilySpec&) = default;
};

/// Deterministic labeling, documented per family:
///  - T1/T-general: u1 u2 u3 = 0 1 2, then the s-path out of u3 ending at v1,
///    then v2 v3, the t-path out of v3 ending at w1, then w2 w3, then pendant
///    paths at u1, u2, v2, w2, w3 in that order.
///  - T2: y1 y2 y3 = 0 1 2, the p-path out of y1 ending at x3, then x1 x2,
///    the q-path out of y1 ending at z1, then z2 z3.
///  - T3: centre 0, triangles (0,1,2), (0,3,4), (0,5,6), pendants 7.. at 0.
///  - T4: apex 0, triangles (0,1,2), (0,3,4), (0,4,5), pendants 6.. at 0.
///  - BG: K_p on 0..p-1, K_q on p..p+q-1, bridge (p-1, p), triangle
///    (0, p+q, p+q+1) and pendant p+q+2 at 0.
Graph generate(const FamilySpec& spec);

Graph t1_graph(int s, int t);
Graph t2_graph(int p, int q);
Graph t_general_graph(int s, int t, const std::array<int, 5>& h);
Graph t3_graph(int k);
Graph t4_graph(int t);
Graph t5_graph();
Graph t6_graph();
Graph t7_graph();
Graph bg_graph(int p, int q);
Graph bga_graph();

inline constexpr int kForbiddenCount = 13;

/// F_i for i in 1..13. Throws ParameterError otherwise.
const Graph& forbidden_graph(int i);

/// lambda_2(F_i) rounded to four decimals as tabulated with the drawings.
double forbidden_reference_lambda2(int i);

/// {centre}, {1,3,5}, {2,4,6}, pendants (omitted when k = 0).
Partition t3_partition(int k);
/// {apex}, {1,2}, {3,5}, {4}, pendants (omitted when t = 0).
Partition t4_partition(int t);

/// Members of the four accepted families on exactly n vertices, one per
/// isomorphism class, in spec order (t-general tuples lexicographically,
/// then t3, t4, t5, t6, t7). The first spec of each class is kept.
std::vector<std::pair<FamilySpec, Graph>> enumerate_family_members(int n);

/// Pairs (kept, dropped) of specs from different families that generate
/// isomorphic graphs on n vertices.
std::vector<std::pair<FamilySpec, FamilySpec>> family_overlaps(int n);

/// The spec enumerate_family_members would report for g's class, or nullopt
/// when g is in none of the four families. Searches only parameters
/// compatible with g's base, so it stays cheap for large n.
std::optional<FamilySpec> match_family(const Graph& g);

} // namespace tricyclic

#endif // TRICYCLIC_FAMILIES_HPP
