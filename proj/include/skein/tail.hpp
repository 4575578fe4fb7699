// Stable tail/head extraction: the first `order` q-coefficients of the
// reduced colored Jones polynomial, computed at two consecutive colors and
// verified to agree (stabilization is checked at runtime, never assumed).
#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "skein/cjp.hpp"
#include "skein/states.hpp"

namespace skein {

// Normalizes a quarter-power q-series to integer q-units: shift the lowest
// exponent to 0 (must be a multiple-of-4 lattice), flip the sign so the
// constant term is positive.
inline std::vector<Rational> normalized_q_coeffs(const std::map<int, Rational>& qq) {
    if (qq.empty()) return {};
    int lo = qq.begin()->first, hi = qq.rbegin()->first;
    for (const auto& [e, c] : qq)
        if ((e - lo) % 4 != 0)
            throw PreconditionError("series does not lie on an integer q lattice");
    std::vector<Rational> out(static_cast<size_t>((hi - lo) / 4 + 1), Rational(0));
    for (const auto& [e, c] : qq) out[static_cast<size_t>((e - lo) / 4)] = c;
    if (out[0] < 0)
        for (auto& c : out) c = -c;
    return out;
}

struct TailSeries {
    std::vector<Rational> coeffs;  // integer q-units, constant term positive
    int order = 0;
    std::string source;  // diagram + colors used

    std::string str() const {
        std::ostringstream os;
        for (int i = 0; i < order; ++i) {
            Rational c = i < static_cast<int>(coeffs.size()) ? coeffs[static_cast<size_t>(i)]
                                                             : Rational(0);
            if (i == 0) {
                os << c.str();
                continue;
            }
            Rational a = c < 0 ? Rational(-c) : c;
            os << (c < 0 ? " - " : " + ");
            if (a != 1) os << a.str();
            os << "q";
            if (i > 1) os << "^" << i;
        }
        return os.str();
    }

    bool operator==(const TailSeries& o) const {
        if (order != o.order) return false;
        for (int i = 0; i < order; ++i) {
            Rational a = i < static_cast<int>(coeffs.size()) ? coeffs[static_cast<size_t>(i)]
                                                             : Rational(0);
            Rational b = i < static_cast<int>(o.coeffs.size())
                             ? o.coeffs[static_cast<size_t>(i)]
                             : Rational(0);
            if (a != b) return false;
        }
        return true;
    }
};

namespace detail {

inline std::vector<Rational> truncated(const std::vector<Rational>& v, int order) {
    std::vector<Rational> out(static_cast<size_t>(order), Rational(0));
    for (int i = 0; i < order && i < static_cast<int>(v.size()); ++i)
        out[static_cast<size_t>(i)] = v[static_cast<size_t>(i)];
    return out;
}

inline std::string coeff_list_str(const std::vector<Rational>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + "]";
}

}  // namespace detail

// First `order` normalized q-coefficients of J, verified stable between the
// colors N = order and N = order + 1.
inline TailSeries tail(const PlanarDiagram& d, int order, long long budget = kDefaultBudget,
                       int n_max = kDefaultNMax) {
    if (order < 1) throw PreconditionError("order must be >= 1");
    if (!is_adequate(d, Smoothing::A))
        throw PreconditionError("diagram is not A-adequate; stable tail not guaranteed");
    auto lo = detail::truncated(
        normalized_q_coeffs(reduced_cjp(d, order, budget, n_max).reduced_qq), order);
    auto hi = detail::truncated(
        normalized_q_coeffs(reduced_cjp(d, order + 1, budget, n_max).reduced_qq), order);
    if (lo != hi)
        throw VerificationError("tail did not stabilize at order " + std::to_string(order) +
                                ": N=" + std::to_string(order) + " gives " +
                                detail::coeff_list_str(lo) + " but N=" +
                                std::to_string(order + 1) + " gives " +
                                detail::coeff_list_str(hi));
    TailSeries out;
    out.coeffs = hi;
    out.order = order;
    out.source = d.str() + " at N=" + std::to_string(order) + "," + std::to_string(order + 1);
    return out;
}

// The tail of the mirror image.
inline TailSeries head(const PlanarDiagram& d, int order, long long budget = kDefaultBudget,
                       int n_max = kDefaultNMax) {
    return tail(d.mirror(), order, budget, n_max);
}

struct StabilizationRow {
    int N = 0;
    bool agrees = false;                // with N+1, to N q-coefficients
    std::vector<Rational> prefix;       // the N agreed/observed coefficients
    bool unreduced_window_agrees = false;  // 4(n+1)-window check on the A side
};

// For each N <= N_max - 1: do J_N and J_{N+1} agree to N coefficients?
inline std::vector<StabilizationRow> stabilization_report(const PlanarDiagram& d, int N_max,
                                                          long long budget = kDefaultBudget,
                                                          int n_max = kDefaultNMax) {
    if (!is_adequate(d, Smoothing::A))
        throw PreconditionError("diagram is not A-adequate; stable tail not guaranteed");
    std::vector<StabilizationRow> rows;
    std::vector<Rational> prev;
    LaurentPoly prev_unred;
    for (int N = 2; N <= N_max; ++N) {
        auto r = reduced_cjp(d, N, budget, n_max);
        auto coeffs = normalized_q_coeffs(r.reduced_qq);
        if (N > 2) {
            StabilizationRow row;
            row.N = N - 1;
            row.prefix = detail::truncated(prev, N - 1);
            row.agrees = row.prefix == detail::truncated(coeffs, N - 1);
            int window = 4 * (N - 1);  // 4(n+1) with n = N - 2, the smaller color
            row.unreduced_window_agrees =
                dot_eq_n(series_expand(RationalFn(prev_unred), window),
                         series_expand(RationalFn(r.unreduced), window), window);
            rows.push_back(std::move(row));
        }
        prev = std::move(coeffs);
        prev_unred = r.unreduced;
    }
    return rows;
}

inline bool tails_equal(const PlanarDiagram& d1, const PlanarDiagram& d2, int order,
                        long long budget = kDefaultBudget, int n_max = kDefaultNMax) {
    return tail(d1, order, budget, n_max) == tail(d2, order, budget, n_max);
}

}  // namespace skein
