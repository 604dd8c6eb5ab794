#pragma once

#include <vector>

#include "sunbeam/cyclo.hpp"

#include "json.hpp"

namespace sunbeam {

/// Grid of w-exponents: entry (i, j) means w^entry, all entries in 0..N-1.
/// The 1/sqrt(N) prefactor of the physical beam splitter is not stored;
/// amplitude-level normalization is applied once in the numeric layer.
class ExponentMatrix {
public:
    ExponentMatrix(int order, int rows, int cols);

    int order() const { return order_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int operator()(int r, int c) const { return entries_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, int value);

    bool operator==(const ExponentMatrix& rhs) const = default;

    nlohmann::json to_json() const;

private:
    int order_;
    int rows_;
    int cols_;
    std::vector<int> entries_;
};

/// The symmetric N-port beam splitter as an exponent grid:
/// entry(i, j) = (i-1)(j-1) mod N in 1-based indexing. First row and
/// column are all zero; the matrix is symmetric.
ExponentMatrix build_sn(int order);

/// Fundamental summation relation Sum_{i=1}^{N} w^{i-1}; zero for N >= 2.
CycloPoly fsr(int order);

/// Alternating variant Sum_{i=1}^{N/2^q} (-1)^{i-1} (w^{2^{q-1}})^{i-1}.
/// Requires 2^q to divide N; zero when 2^q is the full power of two in N.
CycloPoly afsr(int order, int q);

}  // namespace sunbeam
