#include "sunbeam/transition.hpp"

#include <numeric>
#include <stdexcept>

namespace sunbeam {

Transition::Transition(int order_, std::vector<int> input_, std::vector<int> output_)
    : order(order_), input(std::move(input_)), output(std::move(output_)) {
    validate();
}

int Transition::total() const {
    return std::accumulate(input.begin(), input.end(), 0);
}

bool Transition::coincident_output() const {
    for (int m : output)
        if (m != output.front()) return false;
    return true;
}

void Transition::validate() const {
    if (order < 1) throw std::invalid_argument("Transition: order must be >= 1");
    if (static_cast<int>(input.size()) != order || static_cast<int>(output.size()) != order)
        throw std::invalid_argument("Transition: occupation vectors must have length N");
    int in_total = 0, out_total = 0;
    for (int v : input) {
        if (v < 0) throw std::invalid_argument("Transition: negative occupation");
        in_total += v;
    }
    for (int v : output) {
        if (v < 0) throw std::invalid_argument("Transition: negative occupation");
        out_total += v;
    }
    if (in_total != out_total)
        throw std::invalid_argument("Transition: mismatched photon number (sum n_i != sum m_j)");
}

nlohmann::json Transition::to_json() const {
    return {{"N", order}, {"in", input}, {"out", output}};
}

Transition coincident_transition(int order, std::vector<int> input) {
    int n = std::accumulate(input.begin(), input.end(), 0);
    if (order < 1 || n % order != 0)
        throw std::invalid_argument("coincident_transition: N must divide the photon total");
    return Transition(order, std::move(input), std::vector<int>(static_cast<size_t>(order), n / order));
}

namespace {

// Replicated block indices: index r of the n x n matrix -> which S_N
// row/column block it came from (0-based), zero-occupancy blocks skipped.
std::vector<int> expand_blocks(const std::vector<int>& multiplicities) {
    std::vector<int> blocks;
    for (int b = 0; b < static_cast<int>(multiplicities.size()); ++b)
        for (int k = 0; k < multiplicities[static_cast<size_t>(b)]; ++k) blocks.push_back(b);
    return blocks;
}

}  // namespace

ExponentMatrix build_lambda(const Transition& t) {
    t.validate();
    const int n = t.total();
    if (n == 0) throw std::invalid_argument("build_lambda: empty transition (n = 0)");
    const ExponentMatrix s = build_sn(t.order);
    const std::vector<int> row_blocks = expand_blocks(t.output);
    const std::vector<int> col_blocks = expand_blocks(t.input);
    ExponentMatrix lambda(t.order, n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            lambda.set(r, c, s(row_blocks[static_cast<size_t>(r)], col_blocks[static_cast<size_t>(c)]));
    return lambda;
}

ExponentMatrix build_lambda_prime(const Transition& t) {
    const ExponentMatrix lambda = build_lambda(t);
    const std::vector<int> row_blocks = expand_blocks(t.output);
    const std::vector<int> col_blocks = expand_blocks(t.input);
    const int n = lambda.rows();
    ExponentMatrix prime(t.order, n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            prime.set(r, c, (lambda(r, c) + row_blocks[static_cast<size_t>(r)] +
                             col_blocks[static_cast<size_t>(c)]) %
                                t.order);
    return prime;
}

}  // namespace sunbeam
