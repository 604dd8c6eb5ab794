#include "sunbeam/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace sunbeam {

namespace {

void require_positive_order(int order) {
    if (order < 1) throw std::invalid_argument("cyclo: order must be >= 1");
}

void require_same_order(const CycloPoly& a, const CycloPoly& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("cyclo: mixing elements of different orders");
}

// Exact division of integer polynomials, ascending coefficients.
// Requires the division to be exact (used only for x^N - 1 by Phi_d products).
std::vector<Int> divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
    const size_t nd = den.size();
    std::vector<Int> quot(num.size() - nd + 1);
    for (size_t i = quot.size(); i-- > 0;) {
        Int c = num[i + nd - 1] / den[nd - 1];
        quot[i] = c;
        if (c != 0)
            for (size_t j = 0; j < nd; ++j) num[i + j] -= c * den[j];
    }
    for (const Int& r : num)
        if (r != 0) throw std::logic_error("cyclo: inexact polynomial division");
    return quot;
}

std::vector<Int> cyclotomic_coeffs(int order) {
    // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d, exact integer division.
    std::vector<Int> num(static_cast<size_t>(order) + 1);
    num[0] = -1;
    num[static_cast<size_t>(order)] = 1;
    for (int d = 1; d < order; ++d)
        if (order % d == 0) num = divide_exact(std::move(num), cyclotomic_coeffs(d));
    return num;
}

const CyclotomicPolynomial& cached_cyclotomic(int order) {
    static std::mutex mutex;
    static std::map<int, CyclotomicPolynomial> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, CyclotomicPolynomial(order)).first;
    return it->second;
}

}  // namespace

CyclotomicPolynomial::CyclotomicPolynomial(int order) : order_(order) {
    require_positive_order(order);
    coeffs_ = cyclotomic_coeffs(order);
}

CyclotomicPolynomial cyclotomic_polynomial(int order) { return CyclotomicPolynomial(order); }

CycloPoly::CycloPoly(int order) : order_(order), coeffs_(static_cast<size_t>(order)) {
    require_positive_order(order);
}

CycloPoly CycloPoly::from_power(int order, long p) {
    CycloPoly result(order);
    long r = p % order;
    if (r < 0) r += order;
    result.coeffs_[static_cast<size_t>(r)] = 1;
    return result;
}

CycloPoly CycloPoly::constant(int order, const Rat& value) {
    CycloPoly result(order);
    result.coeffs_[0] = value;
    return result;
}

CycloPoly CycloPoly::operator+(const CycloPoly& rhs) const {
    require_same_order(*this, rhs);
    CycloPoly result(*this);
    for (int p = 0; p < order_; ++p) result.coeffs_[static_cast<size_t>(p)] += rhs.coeffs_[static_cast<size_t>(p)];
    return result;
}

CycloPoly& CycloPoly::operator+=(const CycloPoly& rhs) {
    require_same_order(*this, rhs);
    for (int p = 0; p < order_; ++p) coeffs_[static_cast<size_t>(p)] += rhs.coeffs_[static_cast<size_t>(p)];
    return *this;
}

CycloPoly CycloPoly::operator-(const CycloPoly& rhs) const {
    require_same_order(*this, rhs);
    CycloPoly result(*this);
    for (int p = 0; p < order_; ++p) result.coeffs_[static_cast<size_t>(p)] -= rhs.coeffs_[static_cast<size_t>(p)];
    return result;
}

CycloPoly CycloPoly::operator*(const CycloPoly& rhs) const {
    require_same_order(*this, rhs);
    CycloPoly result(order_);
    for (int p = 0; p < order_; ++p) {
        const Rat& a = coeffs_[static_cast<size_t>(p)];
        if (a == 0) continue;
        for (int q = 0; q < order_; ++q) {
            const Rat& b = rhs.coeffs_[static_cast<size_t>(q)];
            if (b == 0) continue;
            result.coeffs_[static_cast<size_t>((p + q) % order_)] += a * b;
        }
    }
    return result;
}

CycloPoly CycloPoly::scaled(const Rat& factor) const {
    CycloPoly result(*this);
    for (auto& c : result.coeffs_) c *= factor;
    return result;
}

CycloPoly CycloPoly::shifted(long s) const {
    long r = s % order_;
    if (r < 0) r += order_;
    CycloPoly result(order_);
    for (int p = 0; p < order_; ++p)
        result.coeffs_[static_cast<size_t>((p + r) % order_)] = coeffs_[static_cast<size_t>(p)];
    return result;
}

bool CycloPoly::operator==(const CycloPoly& rhs) const {
    return order_ == rhs.order_ && coeffs_ == rhs.coeffs_;
}

CycloPoly CycloPoly::reduced() const {
    const CyclotomicPolynomial& phi = cached_cyclotomic(order_);
    const auto& d = phi.coeffs();
    const int deg = phi.degree();
    CycloPoly result(*this);
    auto& r = result.coeffs_;
    // Phi_N is monic, so plain long division stays exact over Q.
    for (int i = order_ - 1; i >= deg; --i) {
        Rat c = r[static_cast<size_t>(i)];
        if (c == 0) continue;
        for (int j = 0; j <= deg; ++j)
            r[static_cast<size_t>(i - deg + j)] -= c * Rat(d[static_cast<size_t>(j)]);
    }
    return result;
}

bool CycloPoly::is_zero() const {
    CycloPoly r = reduced();
    for (const auto& c : r.coeffs_)
        if (c != 0) return false;
    return true;
}

std::complex<double> CycloPoly::eval_numeric() const {
    std::complex<double> sum{0.0, 0.0};
    for (int p = 0; p < order_; ++p) {
        const Rat& c = coeffs_[static_cast<size_t>(p)];
        if (c == 0) continue;
        double angle = 2.0 * std::numbers::pi * p / order_;
        sum += c.get_d() * std::complex<double>{std::cos(angle), std::sin(angle)};
    }
    return sum;
}

std::optional<Rat> CycloPoly::as_constant() const {
    CycloPoly r = reduced();
    for (int p = 1; p < order_; ++p)
        if (r.coeffs_[static_cast<size_t>(p)] != 0) return std::nullopt;
    return r.coeffs_[0];
}

std::string CycloPoly::to_text() const {
    std::ostringstream os;
    bool first = true;
    for (int p = 0; p < order_; ++p) {
        const Rat& c = coeffs_[static_cast<size_t>(p)];
        if (c == 0) continue;
        if (!first) os << " + ";
        os << to_string(c);
        if (p == 1)
            os << "*w";
        else if (p > 1)
            os << "*w^" << p;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

nlohmann::json CycloPoly::to_json() const {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : coeffs_) coeffs.push_back(to_string(c));
    return {{"order", order_}, {"coeffs", coeffs}};
}

}  // namespace sunbeam
