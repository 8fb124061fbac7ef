#include "tricyclic/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>

#include "tricyclic/error.hpp"

namespace tricyclic {

double Spectrum::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

Spectrum eigenvalues_symmetric(const RealMatrix& a, double tol, int max_sweeps) {
    const int n = a.dim();
    if (n < 1) throw ContractViolation("eigenvalues_symmetric needs n >= 1");
    if (!(tol >= 0.0)) throw ContractViolation("Jacobi tolerance must be nonnegative");
    for (double x : a.data()) {
        if (!std::isfinite(x)) throw ContractViolation("matrix has a non-finite entry");
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (std::abs(a(i, j) - a(j, i)) > kSymmetryTolerance) {
                throw ContractViolation("matrix is not symmetric at (" + std::to_string(i) + ", " +
                                        std::to_string(j) + ")");
            }
        }
    }

    RealMatrix w = a;
    double frobenius = 0.0;
    for (double x : a.data()) frobenius += x * x;
    frobenius = std::sqrt(frobenius);
    const double threshold = tol * frobenius;

    auto max_off_diagonal = [&] {
        double off = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) off = std::max(off, std::abs(w(i, j)));
        }
        return off;
    };

    bool converged = max_off_diagonal() <= threshold;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = w(p, q);
                if (apq == 0.0) continue;
                const double theta = (w(q, q) - w(p, p)) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 1.0 / (2.0 * theta);
                } else {
                    t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = w(r, p);
                    const double arq = w(r, q);
                    w(r, p) = w(p, r) = c * arp - s * arq;
                    w(r, q) = w(q, r) = c * arq + s * arp;
                }
                w(p, p) -= t * apq;
                w(q, q) += t * apq;
                w(p, q) = w(q, p) = 0.0;
            }
        }
        converged = max_off_diagonal() <= threshold;
    }
    if (!converged) {
        throw NumericalError("Jacobi iteration did not converge within " + std::to_string(max_sweeps) +
                             " sweeps");
    }

    Spectrum s;
    s.values.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s.values[i] = w(i, i);
    std::sort(s.values.begin(), s.values.end(), std::greater<>());
    return s;
}

Spectrum distance_spectrum(const Graph& g) {
    return eigenvalues_symmetric(distance_matrix(g).cast<double>());
}

double lambda2(const Graph& g) {
    if (g.n() < 2) throw DomainError("lambda_2 is undefined for graphs with fewer than 2 vertices");
    return distance_spectrum(g)[1];
}

int multiplicity(const Spectrum& s, double value, double tol) {
    return static_cast<int>(
        std::count_if(s.values.begin(), s.values.end(), [&](double x) { return std::abs(x - value) <= tol; }));
}

bool interlaces(const Spectrum& outer, const Spectrum& inner, double tol) {
    const int n = outer.size();
    const int m = inner.size();
    if (m > n) return false;
    for (int i = 0; i < m; ++i) {
        if (outer[i] + tol < inner[i]) return false;
        if (inner[i] + tol < outer[n - m + i]) return false;
    }
    return true;
}

bool interlacing_holds(const Graph& g, std::span<const int> subset) {
    if (subset.empty()) throw ContractViolation("interlacing check needs a nonempty subset");
    std::vector<int> rows(subset.begin(), subset.end());
    std::vector<int> sorted = rows;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.front() < 0 ||
        sorted.back() >= g.n()) {
        throw ContractViolation("interlacing subset must hold distinct vertices of g");
    }
    const auto d = distance_matrix(g).cast<double>();
    return interlaces(eigenvalues_symmetric(d), eigenvalues_symmetric(d.principal(rows)));
}

namespace {

double clean_zero(double x, double quantum) { return std::abs(x) < quantum ? 0.0 : x; }

} // namespace

std::string format_spectrum_text(const Spectrum& s) {
    std::string out;
    char buf[64];
    for (int i = 0; i < s.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.12f", clean_zero(s[i], 5e-13));
        if (i > 0) out += ", ";
        out += buf;
    }
    return out;
}

std::string format_spectrum_json(const Spectrum& s) {
    std::string out = "[";
    char buf[64];
    for (int i = 0; i < s.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.12g", clean_zero(s[i], 1e-13));
        if (i > 0) out += ",";
        out += buf;
    }
    return out + "]";
}

Partition Partition::singletons(int n) {
    std::vector<std::vector<int>> cells;
    for (int v = 0; v < n; ++v) cells.push_back({v});
    return Partition(std::move(cells));
}

void Partition::validate(int n) const {
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (int c = 0; c < size(); ++c) {
        if (cells_[c].empty()) throw PartitionError("cell " + std::to_string(c) + " is empty");
        for (int v : cells_[c]) {
            if (v < 0 || v >= n) throw PartitionError("vertex " + std::to_string(v) + " out of range");
            if (owner[v] >= 0) {
                throw PartitionError("vertex " + std::to_string(v) + " lies in cells " + std::to_string(owner[v]) +
                                     " and " + std::to_string(c));
            }
            owner[v] = c;
        }
    }
    for (int v = 0; v < n; ++v) {
        if (owner[v] < 0) throw PartitionError("vertex " + std::to_string(v) + " is not covered");
    }
}

QuotientMatrix quotient_matrix(const IntMatrix& a, const Partition& p) {
    p.validate(a.dim());
    const int k = p.size();
    QuotientMatrix q{RationalMatrix(k), {}, true};
    for (const auto& cell : p.cells()) q.cell_sizes.push_back(static_cast<int>(cell.size()));
    for (int i = 0; i < k; ++i) {
        const auto& rows = p.cells()[i];
        for (int j = 0; j < k; ++j) {
            const auto& cols = p.cells()[j];
            std::int64_t total = 0;
            std::int64_t first_row = 0;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                std::int64_t row_sum = 0;
                for (int c : cols) row_sum += a(rows[r], c);
                if (r == 0) first_row = row_sum;
                else if (row_sum != first_row) q.equitable = false;
                total += row_sum;
            }
            q.b(i, j) = Rational(total, static_cast<std::int64_t>(rows.size()));
        }
    }
    return q;
}

Spectrum quotient_spectrum(const QuotientMatrix& q) {
    const int k = q.b.dim();
    RealMatrix s(k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            const double scale = std::sqrt(static_cast<double>(q.cell_sizes[i]) / q.cell_sizes[j]);
            s(i, j) = q.b(i, j).convert_to<double>() * scale;
        }
    }
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) s(i, j) = s(j, i) = 0.5 * (s(i, j) + s(j, i));
    }
    return eigenvalues_symmetric(s);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (coeffs_.size() > 1 && coeffs_.front() == 0) coeffs_.erase(coeffs_.begin());
}

bool Polynomial::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return boost::multiprecision::denominator(c) == 1; });
}

std::vector<BigInt> Polynomial::integer_coefficients() const {
    if (!is_integral()) throw DomainError("polynomial has non-integer coefficients: " + coefficient_list());
    std::vector<BigInt> out;
    for (const auto& c : coeffs_) out.push_back(boost::multiprecision::numerator(c));
    return out;
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (const auto& c : coeffs_) acc = acc * x + c;
    return acc;
}

double Polynomial::evaluate(double x) const {
    double acc = 0.0;
    for (const auto& c : coeffs_) acc = acc * x + c.convert_to<double>();
    return acc;
}

std::string Polynomial::to_string(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0 && degree() > 0) continue;
        const int power = degree() - i;
        const Rational mag = c < 0 ? Rational(-c) : c;
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        first = false;
        if (mag != 1 || power == 0) os << mag;
        if (power >= 1) os << var;
        if (power >= 2) os << '^' << power;
    }
    return os.str();
}

std::string Polynomial::coefficient_list() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) os << ", ";
        os << coeffs_[i];
    }
    os << ']';
    return os.str();
}

Polynomial char_poly(const RationalMatrix& a) {
    const int n = a.dim();
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    coeffs[0] = 1;
    RationalMatrix m(n);
    for (int k = 1; k <= n; ++k) {
        // m <- A * m + c_{k-1} I
        RationalMatrix next(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                Rational acc = 0;
                for (int l = 0; l < n; ++l) acc += a(i, l) * m(l, j);
                next(i, j) = acc;
            }
            next(i, i) += coeffs[k - 1];
        }
        m = std::move(next);
        Rational trace = 0;
        for (int i = 0; i < n; ++i) {
            for (int l = 0; l < n; ++l) trace += a(i, l) * m(l, i);
        }
        coeffs[k] = -trace / k;
    }
    return Polynomial(std::move(coeffs));
}

int exact_rank(const IntMatrix& a) {
    const int n = a.dim();
    std::vector<std::vector<BigInt>> m(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = a(i, j);
    }
    BigInt previous_pivot = 1;
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (int r = rank; r < n; ++r) {
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[rank]);
        for (int r = rank + 1; r < n; ++r) {
            for (int c = col + 1; c < n; ++c) {
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / previous_pivot;
            }
            m[r][col] = 0;
        }
        previous_pivot = m[rank][col];
        ++rank;
    }
    return rank;
}

} // namespace tricyclic
