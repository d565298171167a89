#pragma once

// Dense univariate polynomials over arbitrary-precision integers.

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sgcorona {

using BigInt = boost::multiprecision::cpp_int;

/// Coefficients are stored in ascending degree with no trailing zeros; the
/// zero polynomial has no coefficients and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> ascending) : c_(std::move(ascending)) { trim(); }
    IntPolynomial(std::initializer_list<long long> ascending) {
        for (long long x : ascending) c_.emplace_back(x);
        trim();
    }

    static IntPolynomial constant(const BigInt& value) { return IntPolynomial(std::vector<BigInt>{value}); }
    /// coeff * x^degree
    static IntPolynomial monomial(const BigInt& coeff, std::size_t degree) {
        std::vector<BigInt> c(degree + 1);
        c[degree] = coeff;
        return IntPolynomial(std::move(c));
    }
    static IntPolynomial x() { return monomial(1, 1); }
    /// x - root
    static IntPolynomial linear_factor(const BigInt& root) { return IntPolynomial(std::vector<BigInt>{-root, 1}); }

    bool is_zero() const noexcept { return c_.empty(); }
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const std::vector<BigInt>& coefficients() const noexcept { return c_; }

    /// Coefficient of x^i (zero beyond the degree).
    BigInt operator[](std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
    const BigInt& leading() const {
        if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    BigInt evaluate(const BigInt& t) const {
        BigInt acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    /// p(x + shift)
    IntPolynomial shifted(const BigInt& shift) const {
        // Horner in polynomial arithmetic: acc = acc * (x + shift) + c_i.
        std::vector<BigInt> acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            std::vector<BigInt> next(acc.size() + 1);
            for (std::size_t i = 0; i < acc.size(); ++i) {
                next[i + 1] += acc[i];
                next[i] += acc[i] * shift;
            }
            next[0] += *it;
            acc = std::move(next);
        }
        return IntPolynomial(std::move(acc));
    }

    IntPolynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<BigInt> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long long>(i);
        return IntPolynomial(std::move(d));
    }

    /// Non-negative gcd of the coefficients (0 for the zero polynomial).
    BigInt content() const {
        BigInt g = 0;
        for (const auto& x : c_) g = boost::multiprecision::gcd(g, x);
        return g;
    }

    /// p / content, with positive leading coefficient.
    IntPolynomial primitive_part() const {
        if (is_zero()) return {};
        BigInt g = content();
        if (leading() < 0) g = -g;
        std::vector<BigInt> out(c_);
        for (auto& x : out) x /= g;
        return IntPolynomial(std::move(out));
    }

    IntPolynomial& operator+=(const IntPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    IntPolynomial& operator-=(const IntPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    IntPolynomial& operator*=(const BigInt& s) {
        for (auto& x : c_) x *= s;
        trim();
        return *this;
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator-(IntPolynomial a) { return a *= BigInt(-1); }
    friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
    friend IntPolynomial operator*(const BigInt& s, IntPolynomial a) { return a *= s; }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return IntPolynomial(std::move(out));
    }
    IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

inline IntPolynomial pow(IntPolynomial base, std::size_t e) {
    IntPolynomial r = IntPolynomial::constant(1);
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

/// sum_k g_k a^k b^(deg g - k), i.e. b^deg(g) * g(a / b) with the
/// denominators cleared.
inline IntPolynomial homogeneous_compose(const IntPolynomial& g, const IntPolynomial& a, const IntPolynomial& b) {
    if (g.is_zero()) return {};
    const std::size_t d = static_cast<std::size_t>(g.degree());
    std::vector<IntPolynomial> bpow{IntPolynomial::constant(1)};
    for (std::size_t k = 1; k <= d; ++k) bpow.push_back(bpow.back() * b);
    IntPolynomial out;
    IntPolynomial apow = IntPolynomial::constant(1);
    for (std::size_t k = 0; k <= d; ++k) {
        if (g[k] != 0) out += g[k] * (apow * bpow[d - k]);
        if (k < d) apow *= a;
    }
    return out;
}

struct DivisionResult {
    IntPolynomial quotient;
    IntPolynomial remainder;
};

/// Long division in Z[x]. Throws std::domain_error when some step would need
/// a non-integer quotient coefficient.
inline DivisionResult divide(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<BigInt> r = a.coefficients();
    const long db = b.degree();
    const BigInt& lb = b.leading();
    if (a.degree() < db) return {{}, a};
    std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db + 1));
    for (long k = a.degree() - db; k >= 0; --k) {
        BigInt& top = r[static_cast<std::size_t>(k + db)];
        if (top == 0) continue;
        BigInt rem;
        BigInt coef;
        boost::multiprecision::divide_qr(top, lb, coef, rem);
        if (rem != 0) throw std::domain_error("polynomial division is not exact over the integers");
        q[static_cast<std::size_t>(k)] = coef;
        for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= coef * b[static_cast<std::size_t>(j)];
    }
    return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

/// a / b, which must divide exactly.
inline IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
    auto [q, r] = divide(a, b);
    if (!r.is_zero()) throw std::domain_error("polynomial does not divide exactly");
    return q;
}

/// lc(b)^(deg a - deg b + 1) a  mod  b, computed without fractions.
inline IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
    if (a.degree() < b.degree()) return a;
    std::vector<BigInt> r = a.coefficients();
    const long db = b.degree();
    const BigInt& lb = b.leading();
    for (long k = a.degree(); k >= db; --k) {
        const BigInt top = r[static_cast<std::size_t>(k)];
        for (auto& x : r) x *= lb;
        for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= top * b[static_cast<std::size_t>(j)];
    }
    return IntPolynomial(std::move(r));
}

/// Greatest common divisor in Z[x]: primitive, positive leading coefficient,
/// times the gcd of the contents. gcd(0, 0) = 0.
inline IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero()) return b.is_zero() ? IntPolynomial{} : b.primitive_part() * b.content();
    if (b.is_zero()) return a.primitive_part() * a.content();
    const BigInt cont = boost::multiprecision::gcd(a.content(), b.content());
    IntPolynomial x = a.primitive_part(), y = b.primitive_part();
    if (x.degree() < y.degree()) std::swap(x, y);
    // Primitive PRS: keep every remainder primitive to bound coefficient growth.
    while (!y.is_zero()) {
        IntPolynomial r = pseudo_remainder(x, y);
        x = std::move(y);
        y = r.primitive_part();
    }
    return x * cont;
}

/// Ascending coefficients separated by single spaces; "0" for the zero polynomial.
inline std::string to_coefficient_string(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) os << (i ? " " : "") << p.coefficients()[i];
    return os.str();
}

inline IntPolynomial from_coefficient_string(const std::string& text) {
    std::istringstream is(text);
    std::vector<BigInt> c;
    std::string tok;
    while (is >> tok) {
        try {
            c.emplace_back(tok);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad polynomial coefficient '" + tok + "'");
        }
    }
    return IntPolynomial(std::move(c));
}

/// Conventional rendering, e.g. "x^3 - 3x - 2".
inline std::string to_pretty_string(const IntPolynomial& p, char var = 'x') {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = p.degree(); i >= 0; --i) {
        BigInt c = p[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        first = false;
        if (c != 1 || i == 0) os << c;
        if (i >= 1) os << var;
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << to_pretty_string(p); }

}  // namespace sgcorona
