#include "galrep/f2.hpp"

#include <stdexcept>

namespace galrep {

void F2Matrix::append_row(const std::vector<std::uint8_t>& bits) {
    if (bits.size() != cols_)
        throw std::invalid_argument("F2Matrix::append_row: wrong row length");
    Row row(blocks(cols_), 0);
    for (std::size_t j = 0; j < cols_; ++j)
        if (bits[j] & 1) row[j >> 6] |= std::uint64_t(1) << (j & 63);
    data_.push_back(std::move(row));
    ++rows_;
}

std::optional<std::vector<std::uint8_t>> f2_solve(
    const F2Matrix& a, const std::vector<std::uint8_t>& b) {
    if (b.size() != a.rows())
        throw std::invalid_argument("f2_solve: rhs length mismatch");
    const std::size_t m = a.rows(), d = a.cols();

    // augmented copy, rhs in the last bit position
    F2Matrix aug(m, d + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < d; ++j) aug.set(i, j, a.get(i, j));
        aug.set(i, d, b[i] & 1);
    }

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < d && rank < m; ++col) {
        std::size_t piv = rank;
        while (piv < m && !aug.get(piv, col)) ++piv;
        if (piv == m) continue;
        std::swap(aug.data_[piv], aug.data_[rank]);
        for (std::size_t i = 0; i < m; ++i) {
            if (i != rank && aug.get(i, col))
                for (std::size_t blk = 0; blk < aug.data_[i].size(); ++blk)
                    aug.data_[i][blk] ^= aug.data_[rank][blk];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    // a zero row with rhs 1 is the only obstruction
    for (std::size_t i = rank; i < m; ++i)
        if (aug.get(i, d)) return std::nullopt;

    std::vector<std::uint8_t> x(d, 0);
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = aug.get(r, d);
    return x;
}

}  // namespace galrep
