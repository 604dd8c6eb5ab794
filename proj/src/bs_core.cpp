#include "sunbeam/bs_core.hpp"

#include <stdexcept>

namespace sunbeam {

ExponentMatrix::ExponentMatrix(int order, int rows, int cols)
    : order_(order), rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
    if (order < 1) throw std::invalid_argument("ExponentMatrix: order must be >= 1");
    if (rows < 0 || cols < 0) throw std::invalid_argument("ExponentMatrix: negative dimensions");
}

void ExponentMatrix::set(int r, int c, int value) {
    if (value < 0 || value >= order_)
        throw std::invalid_argument("ExponentMatrix: entry out of 0..N-1");
    entries_[static_cast<size_t>(r) * cols_ + c] = value;
}

nlohmann::json ExponentMatrix::to_json() const {
    nlohmann::json grid = nlohmann::json::array();
    for (int r = 0; r < rows_; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < cols_; ++c) row.push_back((*this)(r, c));
        grid.push_back(row);
    }
    return {{"N", order_}, {"entries", grid}};
}

ExponentMatrix build_sn(int order) {
    ExponentMatrix m(order, order, order);
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) m.set(i, j, (i * j) % order);
    return m;
}

CycloPoly fsr(int order) {
    CycloPoly sum(order);
    for (int p = 0; p < order; ++p) sum.coeff(p) = 1;
    return sum;
}

CycloPoly afsr(int order, int q) {
    if (q < 1 || q > 30) throw std::invalid_argument("afsr: q must be in 1..30");
    long pow2 = 1L << q;
    if (order % pow2 != 0) throw std::invalid_argument("afsr: 2^q does not divide N");
    const long step = 1L << (q - 1);  // exponent stride: powers of w^{2^{q-1}}
    const long terms = order / pow2;
    CycloPoly sum(order);
    for (long i = 0; i < terms; ++i) {
        long p = (i * step) % order;
        sum.coeff(static_cast<int>(p)) += (i % 2 == 0) ? 1 : -1;
    }
    return sum;
}

}  // namespace sunbeam
