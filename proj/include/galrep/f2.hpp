#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace galrep {

// Dense bit matrix over F_2; rows are vectors of 64-bit blocks.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, Row(blocks(cols), 0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t i, std::size_t j) const {
        return (data_[i][j >> 6] >> (j & 63)) & 1u;
    }
    void set(std::size_t i, std::size_t j, bool v) {
        if (v)
            data_[i][j >> 6] |= std::uint64_t(1) << (j & 63);
        else
            data_[i][j >> 6] &= ~(std::uint64_t(1) << (j & 63));
    }

    // Appends a row given as 0/1 entries; length must equal cols().
    void append_row(const std::vector<std::uint8_t>& bits);

private:
    using Row = std::vector<std::uint64_t>;
    static std::size_t blocks(std::size_t cols) { return (cols + 63) / 64; }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Row> data_;

    friend std::optional<std::vector<std::uint8_t>> f2_solve(
        const F2Matrix& a, const std::vector<std::uint8_t>& b);
};

// Decides solvability of A x = b over F_2 by Gaussian elimination on the
// augmented matrix; returns a witness solution when one exists.
// A zero-column system is consistent exactly when b = 0.
std::optional<std::vector<std::uint8_t>> f2_solve(
    const F2Matrix& a, const std::vector<std::uint8_t>& b);

inline bool f2_is_consistent(const F2Matrix& a,
                             const std::vector<std::uint8_t>& b) {
    return f2_solve(a, b).has_value();
}

}  // namespace galrep
