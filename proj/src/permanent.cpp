#include "sunbeam/permanent.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "sunbeam/errors.hpp"

namespace sunbeam {

namespace {

constexpr int kNaiveLimit = 9;

void require_square(const ExponentMatrix& m, const char* who) {
    if (m.rows() != m.cols()) {
        std::ostringstream os;
        os << who << ": matrix must be square, got " << m.rows() << "x" << m.cols();
        throw std::invalid_argument(os.str());
    }
}

CycloPoly from_int_vector(int order, const std::vector<Int>& v) {
    CycloPoly out(order);
    for (int p = 0; p < order; ++p) out.coeff(p) = Rat(v[static_cast<size_t>(p)]);
    return out;
}

// One contiguous slice [first, last) of the Gray-code walk over column
// subsets. Accumulates sum over subsets g(s) of (-1)^(n-|g(s)|) * prod_i
// (sum_{j in g(s)} w^(m_ij)) into `total`.
void ryser_range(const ExponentMatrix& m, unsigned long first, unsigned long last,
                 std::vector<Int>& total) {
    const int n = m.rows();
    const int order = m.order();
    // Row sums over the current subset: counts of each exponent, always >= 0.
    std::vector<unsigned long> rowsum(static_cast<size_t>(n) * order, 0);
    unsigned long gray = (first - 1) ^ ((first - 1) >> 1);
    for (int j = 0; j < n; ++j)
        if ((gray >> j) & 1UL)
            for (int i = 0; i < n; ++i) ++rowsum[static_cast<size_t>(i) * order + m(i, j)];
    int popcount = std::popcount(gray);

    std::vector<Int> cur(static_cast<size_t>(order)), nxt(static_cast<size_t>(order));
    for (unsigned long s = first; s < last; ++s) {
        const int j = std::countr_zero(s);
        const bool added = !((gray >> j) & 1UL);
        gray ^= 1UL << j;
        popcount += added ? 1 : -1;
        for (int i = 0; i < n; ++i) {
            auto& cell = rowsum[static_cast<size_t>(i) * order + m(i, j)];
            cell += added ? 1 : -1UL;
        }

        // prod_i rowsum_i as a cyclic convolution over Z[w]/(w^N - 1)
        for (int p = 0; p < order; ++p) cur[static_cast<size_t>(p)] = rowsum[static_cast<size_t>(p)];
        for (int i = 1; i < n; ++i) {
            const unsigned long* row = &rowsum[static_cast<size_t>(i) * order];
            for (int p = 0; p < order; ++p) mpz_set_ui(nxt[static_cast<size_t>(p)].get_mpz_t(), 0);
            for (int p = 0; p < order; ++p) {
                const Int& c = cur[static_cast<size_t>(p)];
                if (mpz_sgn(c.get_mpz_t()) == 0) continue;
                for (int q = 0; q < order; ++q) {
                    if (row[q] == 0) continue;
                    mpz_addmul_ui(nxt[static_cast<size_t>((p + q) % order)].get_mpz_t(),
                                  c.get_mpz_t(), row[q]);
                }
            }
            cur.swap(nxt);
        }

        if ((n - popcount) % 2 == 0)
            for (int p = 0; p < order; ++p)
                mpz_add(total[static_cast<size_t>(p)].get_mpz_t(),
                        total[static_cast<size_t>(p)].get_mpz_t(), cur[static_cast<size_t>(p)].get_mpz_t());
        else
            for (int p = 0; p < order; ++p)
                mpz_sub(total[static_cast<size_t>(p)].get_mpz_t(),
                        total[static_cast<size_t>(p)].get_mpz_t(), cur[static_cast<size_t>(p)].get_mpz_t());
    }
}

void naive_rec(const ExponentMatrix& m, int row, unsigned used, int exponent,
               std::vector<Int>& counts) {
    const int n = m.rows();
    if (row == n) {
        ++counts[static_cast<size_t>(exponent)];
        return;
    }
    for (int j = 0; j < n; ++j) {
        if ((used >> j) & 1U) continue;
        naive_rec(m, row + 1, used | (1U << j), (exponent + m(row, j)) % m.order(), counts);
    }
}

}  // namespace

CycloPoly permanent_naive(const ExponentMatrix& m) {
    require_square(m, "permanent_naive");
    const int n = m.rows();
    if (n > kNaiveLimit) {
        std::ostringstream os;
        os << "permanent_naive: side " << n << " exceeds the oracle guard " << kNaiveLimit
           << "; use permanent_ryser";
        throw ResourceGuardError(os.str());
    }
    std::vector<Int> counts(static_cast<size_t>(m.order()));
    if (n == 0) {
        counts[0] = 1;  // empty product
    } else {
        naive_rec(m, 0, 0, 0, counts);
    }
    return from_int_vector(m.order(), counts);
}

CycloPoly permanent_ryser(const ExponentMatrix& m, const RyserOptions& opts) {
    require_square(m, "permanent_ryser");
    const int n = m.rows();
    if (n > opts.max_side || n > 62) {
        std::ostringstream os;
        os << "permanent_ryser: side " << n << " exceeds the configured limit "
           << std::min(opts.max_side, 62)
           << " (2^n subsets); raise RyserOptions::max_side / --ryser-limit if this size is intended";
        throw ResourceGuardError(os.str());
    }
    const int order = m.order();
    if (n == 0) return CycloPoly::constant(order, 1);

    const unsigned long subsets = 1UL << n;
    int jobs = opts.jobs > 0 ? opts.jobs
                             : static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    // Below ~2^14 subsets thread startup dominates.
    if (n < 14 || jobs == 1) {
        std::vector<Int> total(static_cast<size_t>(order));
        ryser_range(m, 1, subsets, total);
        return from_int_vector(order, total);
    }

    std::vector<std::vector<Int>> partial(static_cast<size_t>(jobs),
                                          std::vector<Int>(static_cast<size_t>(order)));
    std::vector<std::thread> workers;
    const unsigned long chunk = (subsets - 1) / static_cast<unsigned long>(jobs) + 1;
    for (int w = 0; w < jobs; ++w) {
        unsigned long first = 1 + static_cast<unsigned long>(w) * chunk;
        unsigned long last = std::min(subsets, first + chunk);
        if (first >= last) break;
        workers.emplace_back(
            [&m, first, last, &out = partial[static_cast<size_t>(w)]] { ryser_range(m, first, last, out); });
    }
    for (auto& t : workers) t.join();

    std::vector<Int> total(static_cast<size_t>(order));
    for (const auto& part : partial)
        for (int p = 0; p < order; ++p) total[static_cast<size_t>(p)] += part[static_cast<size_t>(p)];
    return from_int_vector(order, total);
}

CycloPoly amplitude_unnormalized(const Transition& t, const RyserOptions& opts) {
    return permanent_ryser(build_lambda(t), opts);
}

std::complex<double> amplitude_normalized(const Transition& t, const RyserOptions& opts) {
    const std::complex<double> raw = amplitude_unnormalized(t, opts).reduced().eval_numeric();
    const int n = t.total();
    long double log_norm = -0.5L * n * std::log(static_cast<long double>(t.order));
    for (int v : t.input) log_norm -= 0.5L * std::lgamma(static_cast<long double>(v) + 1);
    for (int v : t.output) log_norm -= 0.5L * std::lgamma(static_cast<long double>(v) + 1);
    const double scale = static_cast<double>(std::exp(log_norm));
    return raw * scale;
}

}  // namespace sunbeam
