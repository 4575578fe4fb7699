// Truncated false theta / Ramanujan theta expansions:
//   f(x, y) = sum_{k in Z} x^{k(k+1)/2} y^{k(k-1)/2}
// specialized at monomials x = s_x q^{e_x}, y = s_y q^{e_y} with nonnegative
// half-integer exponents, truncated to a finite q-order. Coefficients are
// exact integers.
#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "skein/laurent.hpp"

namespace skein {

// A signed monomial +-q^e with e a nonnegative multiple of 1/2, given as
// e = num/2.
struct MonomialSpec {
    int sign;      // +1 or -1
    int half_exp;  // exponent numerator over denominator 2

    MonomialSpec(int sign_, int numerator, int denominator = 1)
        : sign(sign_), half_exp(0) {
        if (sign != 1 && sign != -1) throw PreconditionError("sign must be +1 or -1");
        if (denominator == 1)
            half_exp = 2 * numerator;
        else if (denominator == 2)
            half_exp = numerator;
        else
            throw PreconditionError("exponent denominator must be 1 or 2");
        if (half_exp < 0) throw PreconditionError("exponent must be nonnegative");
    }

    std::string str() const {
        std::ostringstream os;
        if (sign < 0) os << "-";
        os << "q^";
        if (half_exp % 2 == 0)
            os << half_exp / 2;
        else
            os << "(" << half_exp << "/2)";
        return os.str();
    }
};

struct ThetaSeries {
    std::vector<long long> coeffs;  // q^0 .. q^{order-1}
    int order = 0;

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (int i = 0; i < order; ++i) {
            long long c = coeffs[static_cast<size_t>(i)];
            if (c == 0 && !(first && i + 1 == order)) continue;
            long long mag = std::llabs(c);
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (i == 0 || mag != 1) os << mag;
            if (i >= 1 && c != 0) {
                os << "q";
                if (i > 1) os << "^" << i;
            }
        }
        if (first) os << 0;
        return os.str();
    }
};

// f(a, b) truncated to q-order `order`. Requires e_a + e_b > 0 so the
// exponent k(k+1)/2 e_a + k(k-1)/2 e_b grows and the sum truncates.
inline ThetaSeries theta(const MonomialSpec& a, const MonomialSpec& b, int order) {
    if (order < 1) throw PreconditionError("order must be >= 1");
    if (a.half_exp + b.half_exp <= 0)
        throw PreconditionError("exponents do not grow; series does not truncate");
    ThetaSeries out;
    out.order = order;
    out.coeffs.assign(static_cast<size_t>(order), 0);
    // |exponent| ~ (e_a + e_b)/2 k^2; generous bound on |k|.
    long long growth = a.half_exp + b.half_exp;  // in halves
    long long kmax = 3 + static_cast<long long>(
                             std::sqrt(static_cast<double>(16LL * order) /
                                       static_cast<double>(growth)));
    for (long long k = -kmax; k <= kmax; ++k) {
        long long ta = k * (k + 1) / 2, tb = k * (k - 1) / 2;  // both nonnegative
        long long half_e = ta * a.half_exp + tb * b.half_exp;
        if (half_e % 2 != 0)
            throw PreconditionError("term exponent " + std::to_string(half_e) +
                                    "/2 is not an integer");
        long long e = half_e / 2;
        if (e >= order) continue;
        int s = ((ta % 2 != 0 && a.sign < 0) ? -1 : 1) *
                ((tb % 2 != 0 && b.sign < 0) ? -1 : 1);
        out.coeffs[static_cast<size_t>(e)] += s;
    }
    return out;
}

inline ThetaSeries series_product(const ThetaSeries& x, const ThetaSeries& y, int order) {
    if (x.order < order || y.order < order)
        throw PreconditionError("factors are too short for the requested order");
    ThetaSeries out;
    out.order = order;
    out.coeffs.assign(static_cast<size_t>(order), 0);
    for (int i = 0; i < order; ++i)
        for (int j = 0; i + j < order; ++j)
            out.coeffs[static_cast<size_t>(i + j)] +=
                x.coeffs[static_cast<size_t>(i)] * y.coeffs[static_cast<size_t>(j)];
    return out;
}

}  // namespace skein
