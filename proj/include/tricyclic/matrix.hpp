#ifndef TRICYCLIC_MATRIX_HPP
#define TRICYCLIC_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace tricyclic {

/// Dense row-major n x n matrix. The dimensions here never exceed a few
/// hundred, so no attempt is made at blocking or expression templates.
template <typename T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(int n, T fill = T{})
        : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {}

    int dim() const { return n_; }

    T& operator()(int i, int j) {
        assert(i >= 0 && i < n_ && j >= 0 && j < n_);
        return data_[index(i, j)];
    }
    const T& operator()(int i, int j) const {
        assert(i >= 0 && i < n_ && j >= 0 && j < n_);
        return data_[index(i, j)];
    }

    const std::vector<T>& data() const { return data_; }

    SquareMatrix principal(const std::vector<int>& rows) const {
        SquareMatrix out(static_cast<int>(rows.size()));
        for (int i = 0; i < out.n_; ++i) {
            for (int j = 0; j < out.n_; ++j) {
                out(i, j) = (*this)(rows[i], rows[j]);
            }
        }
        return out;
    }

    template <typename U>
    SquareMatrix<U> cast() const {
        SquareMatrix<U> out(n_);
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) {
                out(i, j) = static_cast<U>((*this)(i, j));
            }
        }
        return out;
    }

    static SquareMatrix identity(int n) {
        SquareMatrix out(n);
        for (int i = 0; i < n; ++i) out(i, i) = T{1};
        return out;
    }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }

    int n_ = 0;
    std::vector<T> data_;
};

using IntMatrix = SquareMatrix<std::int64_t>;
using RealMatrix = SquareMatrix<double>;

} // namespace tricyclic

#endif // TRICYCLIC_MATRIX_HPP
