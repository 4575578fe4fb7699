// Exact arithmetic in Q(A): Laurent polynomials, reduced quotients, and
// truncated Laurent series with the sign/shift-normalized comparison used
// throughout the skein computations.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace skein {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// LaurentPoly: finite map exponent -> nonzero rational coefficient.
// ---------------------------------------------------------------------------
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(Rational c) {
        if (c != 0) terms_[0] = std::move(c);
    }
    static LaurentPoly mono(int exp, Rational c = 1) {
        LaurentPoly p;
        if (c != 0) p.terms_[exp] = std::move(c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    const std::map<int, Rational>& terms() const { return terms_; }

    Rational coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int min_deg() const {
        if (terms_.empty()) throw std::domain_error("degree of zero undefined");
        return terms_.begin()->first;
    }
    int max_deg() const {
        if (terms_.empty()) throw std::domain_error("degree of zero undefined");
        return terms_.rbegin()->first;
    }

    void add_term(int exp, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(exp, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out;
        for (const auto& [e1, c1] : a.terms_)
            for (const auto& [e2, c2] : b.terms_) out.add_term(e1 + e2, c1 * c2);
        return out;
    }
    LaurentPoly operator-() const {
        LaurentPoly out;
        for (const auto& [e, c] : terms_) out.terms_[e] = -c;
        return out;
    }
    LaurentPoly scaled(const Rational& c) const {
        LaurentPoly out;
        if (c == 0) return out;
        for (const auto& [e, k] : terms_) out.terms_[e] = k * c;
        return out;
    }
    LaurentPoly shifted(int s) const {
        LaurentPoly out;
        for (const auto& [e, c] : terms_) out.terms_[e + s] = c;
        return out;
    }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Exact division; throws if the divisor does not divide this exactly.
    LaurentPoly div_exact(const LaurentPoly& q) const {
        if (q.is_zero()) throw std::domain_error("division by zero polynomial");
        LaurentPoly out, rem = *this;
        const int dq = q.min_deg();
        const Rational& cq = q.terms_.begin()->second;
        // The quotient of an exact division cannot exceed this exponent.
        const int e_max = is_zero() ? 0 : max_deg() - q.max_deg();
        while (!rem.is_zero()) {
            int dp = rem.min_deg();
            Rational c = rem.terms_.begin()->second / cq;
            int e = dp - dq;
            if (e > e_max || (!out.terms_.empty() && e <= out.terms_.rbegin()->first))
                throw std::domain_error("inexact polynomial division");
            out.terms_[e] = c;
            rem -= q.shifted(e).scaled(c);
        }
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rational a = c < 0 ? Rational(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (a != 1 || e == 0) os << a.str();
            if (e != 0) {
                if (a != 1) os << "*";
                os << "A^" << e;
            }
        }
        return os.str();
    }

    // Parses the output of str(): sums of c*A^k terms.
    static LaurentPoly parse(const std::string& text);

private:
    std::map<int, Rational> terms_;
};

namespace detail {

// Dense vector form (exponents >= 0) used for gcd computations.
inline std::vector<Rational> to_dense(const LaurentPoly& p) {
    int lo = p.min_deg(), hi = p.max_deg();
    std::vector<Rational> v(static_cast<size_t>(hi - lo) + 1);
    for (const auto& [e, c] : p.terms()) v[static_cast<size_t>(e - lo)] = c;
    return v;
}

inline void poly_mod(std::vector<Rational>& a, const std::vector<Rational>& b) {
    while (a.size() >= b.size()) {
        Rational f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.empty()) return;
    }
}

inline LaurentPoly poly_gcd(const LaurentPoly& p, const LaurentPoly& q) {
    std::vector<Rational> a = to_dense(p), b = to_dense(q);
    while (!b.empty()) {
        poly_mod(a, b);
        std::swap(a, b);
    }
    // Strip any power of A (gcd in the Laurent ring is defined up to units)
    // and make the result monic.
    size_t lo = 0;
    while (lo < a.size() && a[lo] == 0) ++lo;
    LaurentPoly g;
    for (size_t i = lo; i < a.size(); ++i)
        if (a[i] != 0) g.add_term(static_cast<int>(i - lo), a[i] / a.back());
    return g;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// RationalFn: reduced quotient of Laurent polynomials.
// Canonical form: gcd(num, den) a unit, den has min degree 0, and the
// lowest-degree denominator coefficient is positive.
// ---------------------------------------------------------------------------
class RationalFn {
public:
    RationalFn() : num_(), den_(Rational(1)) {}
    RationalFn(LaurentPoly num, LaurentPoly den = LaurentPoly(Rational(1)))
        : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("zero denominator");
        reduce();
    }
    static RationalFn from_int(long v) { return RationalFn(LaurentPoly(Rational(v))); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    int min_degree() const {
        if (is_zero()) throw std::domain_error("degree of zero undefined");
        return num_.min_deg() - den_.min_deg();
    }

    RationalFn& operator+=(const RationalFn& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        reduce();
        return *this;
    }
    RationalFn& operator-=(const RationalFn& o) {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ = den_ * o.den_;
        reduce();
        return *this;
    }
    RationalFn& operator*=(const RationalFn& o) {
        num_ = num_ * o.num_;
        den_ = den_ * o.den_;
        reduce();
        return *this;
    }
    friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
    friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
    friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
    RationalFn operator-() const { return RationalFn(-num_, den_); }

    RationalFn inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        return RationalFn(den_, num_);
    }

    bool operator==(const RationalFn& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFn& o) const { return !(*this == o); }

    // The value as a Laurent polynomial; throws if the denominator does not
    // divide the numerator.
    LaurentPoly as_poly() const {
        if (num_.is_zero()) return LaurentPoly();
        return num_.div_exact(den_);
    }

    std::string str() const {
        if (den_ == LaurentPoly(Rational(1))) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = LaurentPoly(Rational(1));
            return;
        }
        // The gcd is a unit whenever either side is a monomial; skip the
        // Euclidean pass in that common case (crossing-only sweeps).
        if (num_.terms().size() > 1 && den_.terms().size() > 1) {
            LaurentPoly g = detail::poly_gcd(num_, den_);
            if (g != LaurentPoly(Rational(1))) {
                num_ = num_.div_exact(g);
                den_ = den_.div_exact(g);
            }
        }
        int s = den_.min_deg();
        if (s != 0) {
            num_ = num_.shifted(-s);
            den_ = den_.shifted(-s);
        }
        Rational c = den_.terms().begin()->second;
        if (c != 1) {
            num_ = num_.scaled(Rational(1) / c);
            den_ = den_.scaled(Rational(1) / c);
        }
    }

    LaurentPoly num_, den_;
};

// ---------------------------------------------------------------------------
// TruncatedSeries: `order` coefficients starting at exponent `shift`.
// For q-series the exponents are in quarter units (A = q^{-1/4}).
// ---------------------------------------------------------------------------
enum class Var { A, q };

struct TruncatedSeries {
    Var var = Var::A;
    int shift = 0;
    std::vector<Rational> coeffs;  // coeffs[i] multiplies var^(shift+i)

    int order() const { return static_cast<int>(coeffs.size()); }
    bool is_zero() const {
        for (const auto& c : coeffs)
            if (c != 0) return false;
        return true;
    }

    // Drops leading zeros, rescales exponents to start at 0 and flips the
    // global sign so the constant term is positive.
    TruncatedSeries normalized() const {
        TruncatedSeries out;
        out.var = var;
        size_t lead = 0;
        while (lead < coeffs.size() && coeffs[lead] == 0) ++lead;
        if (lead == coeffs.size()) return out;  // zero series
        out.shift = 0;
        bool flip = coeffs[lead] < 0;
        for (size_t i = lead; i < coeffs.size(); ++i)
            out.coeffs.push_back(flip ? Rational(-coeffs[i]) : coeffs[i]);
        return out;
    }

    std::string str(const std::string& sym) const {
        if (coeffs.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < coeffs.size(); ++i) {
            const Rational& c = coeffs[i];
            int e = shift + static_cast<int>(i);
            Rational a = c < 0 ? Rational(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (a != 1 || e == 0) os << a.str();
            if (e != 0) {
                if (a != 1) os << "*";
                os << sym;
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }
};

// First `order` coefficients of the Laurent expansion of f starting at
// its minimum degree.
inline TruncatedSeries series_expand(const RationalFn& f, int order) {
    TruncatedSeries out;
    if (f.is_zero() || order <= 0) return out;
    out.shift = f.min_degree();
    const LaurentPoly& num = f.num();
    const LaurentPoly& den = f.den();
    int n0 = num.min_deg();  // den min degree is 0 in canonical form
    std::map<int, Rational> rem;
    for (const auto& [e, c] : num.terms()) rem[e - n0] = c;
    Rational d0 = den.terms().begin()->second;
    out.coeffs.reserve(static_cast<size_t>(order));
    for (int e = 0; e < order; ++e) {
        auto it = rem.find(e);
        Rational c = it == rem.end() ? Rational(0) : it->second / d0;
        out.coeffs.push_back(c);
        if (c != 0) {
            for (const auto& [k, v] : den.terms()) {
                int kk = e + k;
                auto [jt, fresh] = rem.try_emplace(kk, Rational(0));
                jt->second -= c * v;
                if (jt->second == 0) rem.erase(jt);
            }
        }
    }
    return out;
}

// P1 =.n P2 : equality modulo var^n after shift/sign normalization.
inline bool dot_eq_n(const TruncatedSeries& s1, const TruncatedSeries& s2, int n) {
    TruncatedSeries a = s1.normalized(), b = s2.normalized();
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    if (a.order() < n || b.order() < n)
        throw std::invalid_argument("order too low for comparison");
    for (int i = 0; i < n; ++i)
        if (a.coeffs[static_cast<size_t>(i)] != b.coeffs[static_cast<size_t>(i)]) return false;
    return true;
}

// Delta_n: value of the n-colored circle. Delta_{-1} = 0 by convention.
inline LaurentPoly delta(int n) {
    if (n < -1) throw std::domain_error("delta undefined for n < -1");
    if (n == -1) return LaurentPoly();
    LaurentPoly out;
    for (int j = 0; j <= n; ++j) out.add_term(2 * n - 4 * j, (n % 2 == 0) ? 1 : -1);
    return out;
}

inline LaurentPoly circle_value() { return delta(1); }  // -A^2 - A^-2

// ---------------------------------------------------------------------------
// Parser for the textual polynomial form.
// ---------------------------------------------------------------------------
inline LaurentPoly LaurentPoly::parse(const std::string& text) {
    LaurentPoly out;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i < text.size() && text.compare(i, 1, "0") == 0 && i + 1 == text.size()) return out;
    bool first = true;
    while (i < text.size()) {
        skip_ws();
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in polynomial");
        }
        first = false;
        // coefficient (optional), then optional '*', then optional A^k
        std::string numtok;
        while (i < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
            numtok += text[i++];
        Rational c = numtok.empty() ? Rational(1) : Rational(numtok);
        skip_ws();
        if (i < text.size() && text[i] == '*') {
            ++i;
            skip_ws();
        }
        int exp = 0;
        if (i < text.size() && text[i] == 'A') {
            ++i;
            exp = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                size_t j = i;
                if (j < text.size() && (text[j] == '-' || text[j] == '+')) ++j;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                exp = std::atoi(text.substr(i, j - i).c_str());
                i = j;
            }
        } else if (numtok.empty()) {
            throw std::invalid_argument("expected coefficient or 'A' in polynomial");
        }
        out.add_term(exp, sign > 0 ? c : Rational(-c));
        skip_ws();
    }
    return out;
}

}  // namespace skein
