/**
 * @file scalars.cpp
 * @brief Implementation of exact rational / cyclotomic arithmetic.
 */

#include "scalars.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace twochar {

void ValidationReport::require(const std::string& context) const {
    if (ok()) return;
    std::ostringstream os;
    os << context << ": " << problems.size() << " violation(s);";
    for (const auto& p : problems) os << "\n  - " << p;
    throw validation_error(os.str());
}

// ---------------------------------------------------------------------------
// Rational helpers
// ---------------------------------------------------------------------------

std::string rational_to_string(const Rational& r) {
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational rational_from_string(const std::string& text) {
    auto bad = [&]() -> parse_error {
        return parse_error("invalid rational literal: '" + text + "'");
    };
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty()) throw bad();
    const auto slash = s.find('/');
    const std::string num_s = s.substr(0, slash);
    const std::string den_s = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto parse_int = [&](const std::string& t) -> Integer {
        if (t.empty()) throw bad();
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw bad();
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) throw bad();
        return Integer(t);
    };
    Integer num = parse_int(num_s);
    Integer den = parse_int(den_s);
    if (den == 0) throw bad();
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

long euler_phi(long n) {
    if (n <= 0) throw validation_error("euler_phi: order must be positive");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<long> divisors(long n) {
    std::vector<long> out;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Integer polynomial helpers (ascending coefficients) for Phi_N
// ---------------------------------------------------------------------------

namespace {

// Exact division of integer polynomials, divisor monic. Remainder must be 0.
std::vector<Integer> int_poly_divide_exact(std::vector<Integer> num,
                                           const std::vector<Integer>& den) {
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size()) throw validation_error("polynomial division underflow");
    std::vector<Integer> quot(num.size() - dd, Integer(0));
    for (std::size_t k = num.size(); k-- > den.size() - 1;) {
        if (k < dd) break;
        const Integer c = num[k];
        if (c == 0) continue;
        quot[k - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw validation_error("polynomial division was not exact");
    return quot;
}

std::mutex phi_cache_mutex;
std::map<long, std::vector<Integer>> phi_cache;

} // namespace

const std::vector<Integer>& Cyclotomic::cyclotomic_polynomial(long N) {
    if (N <= 0) throw validation_error("cyclotomic order must be positive");
    std::lock_guard<std::mutex> lock(phi_cache_mutex);
    auto it = phi_cache.find(N);
    if (it != phi_cache.end()) return it->second;

    // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d, computed bottom-up so
    // every divisor is already cached by the recursion order below.
    std::function<const std::vector<Integer>&(long)> get = [&](long n) -> const std::vector<Integer>& {
        auto found = phi_cache.find(n);
        if (found != phi_cache.end()) return found->second;
        std::vector<Integer> poly(static_cast<std::size_t>(n) + 1, Integer(0));
        poly[0] = -1;
        poly.back() = 1; // x^n - 1
        for (long d : divisors(n)) {
            if (d == n) continue;
            poly = int_poly_divide_exact(poly, get(d));
        }
        return phi_cache.emplace(n, std::move(poly)).first->second;
    };
    return get(N);
}

// ---------------------------------------------------------------------------
// Rational polynomial helpers
// ---------------------------------------------------------------------------

namespace {

using RPoly = std::vector<Rational>; // ascending coefficients

void rpoly_trim(RPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly rpoly_mul(const RPoly& a, const RPoly& b) {
    if (a.empty() || b.empty()) return {};
    RPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

RPoly rpoly_sub(RPoly a, const RPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    rpoly_trim(a);
    return a;
}

// Division with remainder; denominator need not be monic (leading != 0).
void rpoly_divmod(RPoly num, const RPoly& den, RPoly& quot, RPoly& rem) {
    rpoly_trim(num);
    quot.assign(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0, Rational(0));
    while (num.size() >= den.size() && !num.empty()) {
        const Rational c = num.back() / den.back();
        const std::size_t shift = num.size() - den.size();
        quot[shift] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
        rpoly_trim(num);
    }
    rem = std::move(num);
}

RPoly phi_as_rpoly(long N) {
    const auto& zp = Cyclotomic::cyclotomic_polynomial(N);
    RPoly out(zp.size());
    for (std::size_t i = 0; i < zp.size(); ++i) out[i] = Rational(zp[i]);
    return out;
}

// Representative of `p` modulo Phi_N, padded to exactly phi(N) entries.
std::vector<Rational> reduce_mod_phi(RPoly p, long N) {
    const RPoly phi = phi_as_rpoly(N);
    RPoly q, r;
    rpoly_divmod(std::move(p), phi, q, r);
    r.resize(static_cast<std::size_t>(euler_phi(N)), Rational(0));
    return r;
}

// Solve A x = b exactly over Q (dense Gaussian elimination).
// Returns false when the system is inconsistent.
bool solve_rational(std::vector<std::vector<Rational>> A, std::vector<Rational> b,
                    std::vector<Rational>& x, std::size_t cols) {
    const std::size_t rows = A.size();
    std::vector<long> pivot_col_of_row(rows, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && A[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(A[piv], A[rank]);
        std::swap(b[piv], b[rank]);
        const Rational inv = Rational(1) / A[rank][col];
        for (std::size_t j = col; j < cols; ++j) A[rank][j] *= inv;
        b[rank] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || A[r][col] == 0) continue;
            const Rational f = A[r][col];
            for (std::size_t j = col; j < cols; ++j) A[r][j] -= f * A[rank][j];
            b[r] -= f * b[rank];
        }
        pivot_col_of_row[rank] = static_cast<long>(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (b[r] != 0) return false;
    x.assign(cols, Rational(0));
    for (std::size_t r = 0; r < rank; ++r) x[static_cast<std::size_t>(pivot_col_of_row[r])] = b[r];
    return true;
}

} // namespace

// ---------------------------------------------------------------------------
// Cyclotomic
// ---------------------------------------------------------------------------

Cyclotomic::Cyclotomic() : order_(1), coeff_(1, Rational(0)) {}

Cyclotomic::Cyclotomic(const Rational& value) : order_(1), coeff_(1, value) {}

Cyclotomic::Cyclotomic(long order, std::vector<Rational> coefficients)
    : order_(order), coeff_(std::move(coefficients)) {
    if (order_ <= 0) throw validation_error("cyclotomic order must be positive");
    const auto expect = static_cast<std::size_t>(euler_phi(order_));
    if (coeff_.size() != expect)
        throw validation_error("cyclotomic coefficient vector must have phi(order) entries");
}

Cyclotomic Cyclotomic::zero() { return Cyclotomic(); }

Cyclotomic Cyclotomic::one() { return Cyclotomic(Rational(1)); }

Cyclotomic Cyclotomic::root_of_unity(long N, long k) {
    if (N <= 0) throw validation_error("root_of_unity: order must be positive");
    k %= N;
    if (k < 0) k += N;
    const long g = std::gcd(N, k == 0 ? N : k);
    const long n = N / g;
    const long e = k / g;
    RPoly p(static_cast<std::size_t>(e) + 1, Rational(0));
    p.back() = 1;
    return Cyclotomic(n, reduce_mod_phi(std::move(p), n));
}

bool Cyclotomic::is_zero() const {
    return std::all_of(coeff_.begin(), coeff_.end(), [](const Rational& c) { return c == 0; });
}

bool Cyclotomic::is_one() const {
    if (coeff_[0] != 1) return false;
    return std::all_of(coeff_.begin() + 1, coeff_.end(), [](const Rational& c) { return c == 0; });
}

bool Cyclotomic::is_rational() const {
    return std::all_of(coeff_.begin() + 1, coeff_.end(), [](const Rational& c) { return c == 0; });
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational())
        throw validation_error("rational_value: " + to_string() + " is not rational");
    return coeff_[0];
}

Cyclotomic Cyclotomic::embedded(long M) const {
    if (M % order_ != 0)
        throw validation_error("cyclotomic embedding requires order | target order");
    if (M == order_) return *this;
    const long stride = M / order_;
    RPoly p(static_cast<std::size_t>((coeff_.size() - 1) * stride) + 1, Rational(0));
    for (std::size_t j = 0; j < coeff_.size(); ++j) p[j * stride] = coeff_[j];
    return Cyclotomic(M, reduce_mod_phi(std::move(p), M));
}

Cyclotomic Cyclotomic::reduced_order() const {
    for (long d : divisors(order_)) {
        if (d == order_) break;
        // Coordinates of *this with respect to the embedded basis of Q(zeta_d).
        const auto cols = static_cast<std::size_t>(euler_phi(d));
        std::vector<std::vector<Rational>> A(coeff_.size(),
                                             std::vector<Rational>(cols, Rational(0)));
        for (std::size_t t = 0; t < cols; ++t) {
            const Cyclotomic basis = root_of_unity(d, static_cast<long>(t)).embedded(order_);
            for (std::size_t r = 0; r < coeff_.size(); ++r) A[r][t] = basis.coefficients()[r];
        }
        std::vector<Rational> x;
        if (solve_rational(A, coeff_, x, cols)) return Cyclotomic(d, std::move(x));
    }
    return *this;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out(*this);
    for (auto& c : out.coeff_) c = -c;
    return out;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    const long M = std::lcm(a.order_, b.order_);
    Cyclotomic x = a.embedded(M), y = b.embedded(M);
    for (std::size_t i = 0; i < x.coeff_.size(); ++i) x.coeff_[i] += y.coeff_[i];
    return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    const long M = std::lcm(a.order_, b.order_);
    if (a.is_zero() || b.is_zero()) return Cyclotomic::zero().embedded(M);
    const Cyclotomic x = a.embedded(M), y = b.embedded(M);
    return Cyclotomic(M, reduce_mod_phi(rpoly_mul(x.coeff_, y.coeff_), M));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& b) { return *this = *this + b; }
Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& b) { return *this = *this - b; }
Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& b) { return *this = *this * b; }

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw validation_error("inverse of zero");
    if (is_rational()) return Cyclotomic(Rational(1) / coeff_[0]);
    // Extended Euclid in Q[x]: u * rep + v * Phi_N = gcd = const, so
    // rep^{-1} = u / const modulo Phi_N.
    RPoly r0 = phi_as_rpoly(order_), r1 = coeff_;
    rpoly_trim(r1);
    RPoly u0{}, u1{Rational(1)}; // coefficients of `rep` in r0, r1
    while (true) {
        RPoly q, r2;
        rpoly_divmod(r0, r1, q, r2);
        if (r2.empty()) break;
        RPoly u2 = rpoly_sub(u0, rpoly_mul(q, u1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r1.size() != 1)
        throw validation_error("inverse: representative shares a factor with Phi_N");
    const Rational scale = Rational(1) / r1[0];
    for (auto& c : u1) c *= scale;
    return Cyclotomic(order_, reduce_mod_phi(std::move(u1), order_));
}

bool Cyclotomic::operator==(const Cyclotomic& b) const {
    const long M = std::lcm(order_, b.order_);
    return embedded(M).coeff_ == b.embedded(M).coeff_;
}

std::pair<double, double> Cyclotomic::approximate() const {
    const double tau = 2.0 * 3.14159265358979323846264338327950288;
    double re = 0.0, im = 0.0;
    for (std::size_t j = 0; j < coeff_.size(); ++j) {
        if (coeff_[j] == 0) continue;
        const double c = coeff_[j].convert_to<double>();
        const double angle = tau * static_cast<double>(j) / static_cast<double>(order_);
        re += c * std::cos(angle);
        im += c * std::sin(angle);
    }
    return {re, im};
}

std::string Cyclotomic::to_string() const {
    const Cyclotomic r = reduced_order();
    if (r.is_rational()) return rational_to_string(r.coeff_[0]);
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < r.coeff_.size(); ++j) {
        const Rational& c = r.coeff_[j];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        std::string term;
        if (j == 0) {
            term = rational_to_string(mag);
        } else {
            term = (mag == 1) ? "" : rational_to_string(mag) + "*";
            term += "z" + std::to_string(r.order_);
            if (j > 1) term += "^" + std::to_string(j);
        }
        os << term;
    }
    return os.str();
}

std::pair<double, double> approximate_complex(const Cyclotomic& x) { return x.approximate(); }

} // namespace twochar
