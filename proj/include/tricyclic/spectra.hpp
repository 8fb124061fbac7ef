#ifndef TRICYCLIC_SPECTRA_HPP
#define TRICYCLIC_SPECTRA_HPP

#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tricyclic/graph.hpp"
#include "tricyclic/matrix.hpp"

namespace tricyclic {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RationalMatrix = SquareMatrix<Rational>;

/// Jacobi stops once every off-diagonal magnitude is below tol * ||A||_F.
inline constexpr double kJacobiTolerance = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;
/// Grouping tolerance for eigenvalue multiplicities.
inline constexpr double kMultiplicityTolerance = 1e-7;
inline constexpr double kInterlacingTolerance = 1e-9;
inline constexpr double kSymmetryTolerance = 1e-12;

/// Eigenvalues sorted descending: values[0] is the spectral radius for a
/// distance matrix, values[1] is lambda_2.
struct Spectrum {
    std::vector<double> values;
    double tol = kMultiplicityTolerance;

    int size() const { return static_cast<int>(values.size()); }
    double operator[](std::size_t i) const { return values[i]; }
    double sum() const;
};

/// Cyclic Jacobi rotations until every off-diagonal entry is at most
/// tol * ||a||_F. Throws ContractViolation on empty, non-symmetric or
/// non-finite input and NumericalError when max_sweeps sweeps do not reach
/// the threshold.
Spectrum eigenvalues_symmetric(const RealMatrix& a, double tol = kJacobiTolerance, int max_sweeps = kJacobiMaxSweeps);

Spectrum distance_spectrum(const Graph& g);

/// Second largest distance eigenvalue. Throws DomainError for n < 2 and
/// ConnectivityError for disconnected input.
double lambda2(const Graph& g);

/// Number of entries within tol of value.
int multiplicity(const Spectrum& s, double value, double tol);
inline int multiplicity(const Spectrum& s, double value) { return multiplicity(s, value, s.tol); }

/// Cauchy interlacing between a symmetric matrix spectrum `outer` (order n)
/// and the spectrum `inner` of one of its principal submatrices (order m).
bool interlaces(const Spectrum& outer, const Spectrum& inner, double tol = kInterlacingTolerance);

/// Interlacing self-test on the principal submatrix of D(g) indexed by
/// `subset`. Throws ContractViolation for an empty or invalid subset.
bool interlacing_holds(const Graph& g, std::span<const int> subset);

/// "3.000000000000, -1.000000000000, ..." (fixed, 12 decimals).
std::string format_spectrum_text(const Spectrum& s);
/// JSON array, 12 significant digits.
std::string format_spectrum_json(const Spectrum& s);

/// Ordered cells covering 0..n-1.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<std::vector<int>> cells) : cells_(std::move(cells)) {}

    static Partition singletons(int n);

    const std::vector<std::vector<int>>& cells() const { return cells_; }
    int size() const { return static_cast<int>(cells_.size()); }

    /// Throws PartitionError on empty, overlapping, out-of-range or
    /// non-covering cells.
    void validate(int n) const;

private:
    std::vector<std::vector<int>> cells_;
};

/// b(i, j) is the average row sum of block (V_i, V_j), exact.
struct QuotientMatrix {
    RationalMatrix b;
    std::vector<int> cell_sizes;
    bool equitable = false;
};

QuotientMatrix quotient_matrix(const IntMatrix& a, const Partition& p);

/// Eigenvalues of a quotient of a symmetric matrix, via the similar symmetric
/// matrix diag(|V_i|)^(1/2) B diag(|V_i|)^(-1/2).
Spectrum quotient_spectrum(const QuotientMatrix& q);

/// Polynomial with exact rational coefficients, highest degree first.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.front() == 1; }
    bool is_integral() const;

    /// Throws DomainError when some coefficient is not an integer.
    std::vector<BigInt> integer_coefficients() const;

    Rational evaluate(const Rational& x) const;
    double evaluate(double x) const;

    /// "x^4 - 8x^3 - 40x^2 - 46x - 15"
    std::string to_string(const std::string& var = "x") const;
    /// "[1, -8, -40, -46, -15]"
    std::string coefficient_list() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// det(xI - A) by the Faddeev-LeVerrier recurrence in exact arithmetic.
Polynomial char_poly(const RationalMatrix& a);
inline Polynomial char_poly(const QuotientMatrix& q) { return char_poly(q.b); }

/// Rank over the rationals (fraction-free Bareiss elimination).
int exact_rank(const IntMatrix& a);

} // namespace tricyclic

#endif // TRICYCLIC_SPECTRA_HPP
