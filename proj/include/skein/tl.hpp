// Temperley-Lieb monoid and algebra: crossingless matchings, products with
// circle bookkeeping, Jones-Wenzl idempotents via the Wenzl recursion, and
// the hook-cascade identity checker used by the tail machinery.
//
// Points of a matching on 2n points: bottom 0..n-1 (left to right), then top
// n..2n-1 (left to right). A matching is stored as a partner array.
#pragma once

#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "skein/errors.hpp"
#include "skein/laurent.hpp"

namespace skein {

using Matching = std::vector<int>;

inline Matching tl_identity_matching(int n) {
    Matching p(2 * n);
    for (int i = 0; i < n; ++i) {
        p[i] = n + i;
        p[n + i] = i;
    }
    return p;
}

// Hook generator e_i (0-based, 0 <= i <= n-2): cup/cap on strands i, i+1.
inline Matching tl_e_matching(int n, int i) {
    Matching p = tl_identity_matching(n);
    p[i] = i + 1;
    p[i + 1] = i;
    p[n + i] = n + i + 1;
    p[n + i + 1] = n + i;
    return p;
}

// Planarity: points in boundary-cycle order (bottom left-to-right, then top
// right-to-left) must nest like balanced parentheses.
inline bool is_noncrossing(const Matching& m) {
    int n = static_cast<int>(m.size()) / 2;
    auto pos = [&](int i) { return i < n ? i : n + (2 * n - 1 - i); };
    std::vector<int> at(2 * n);
    for (int i = 0; i < 2 * n; ++i) at[static_cast<size_t>(pos(i))] = i;
    std::vector<int> stack;
    for (int p = 0; p < 2 * n; ++p) {
        int i = at[static_cast<size_t>(p)];
        if (!stack.empty() && stack.back() == m[static_cast<size_t>(i)])
            stack.pop_back();
        else
            stack.push_back(i);
    }
    return stack.empty();
}

// Balanced-parentheses rendering along the boundary cycle.
inline std::string matching_parens(const Matching& m) {
    int n = static_cast<int>(m.size()) / 2;
    auto pos = [&](int i) { return i < n ? i : n + (2 * n - 1 - i); };
    std::string out(static_cast<size_t>(2 * n), '?');
    for (int i = 0; i < 2 * n; ++i) {
        int a = pos(i), b = pos(m[static_cast<size_t>(i)]);
        out[static_cast<size_t>(a)] = a < b ? '(' : ')';
    }
    return out;
}

// Stacks m2 on top of m1; returns the composite matching and the number of
// closed circles formed in the middle layer.
inline std::pair<Matching, int> tl_compose(const Matching& m1, const Matching& m2, int n) {
    Matching res(2 * n, -1);
    std::vector<bool> seen_mid(static_cast<size_t>(n), false);
    for (int s = 0; s < 2 * n; ++s) {
        if (res[static_cast<size_t>(s)] != -1) continue;
        // Walk from a free endpoint: bottom points live in m1, top points in m2.
        int layer = s < n ? 1 : 2;
        int pos = s;
        for (;;) {
            int q = layer == 1 ? m1[static_cast<size_t>(pos)] : m2[static_cast<size_t>(pos)];
            if (layer == 1 && q >= n) {
                seen_mid[static_cast<size_t>(q - n)] = true;
                layer = 2;
                pos = q - n;  // m1 top i glues to m2 bottom i
            } else if (layer == 2 && q < n) {
                seen_mid[static_cast<size_t>(q)] = true;
                layer = 1;
                pos = q + n;
            } else {
                res[static_cast<size_t>(s)] = q;
                res[static_cast<size_t>(q)] = s;
                break;
            }
        }
    }
    int nloops = 0;
    std::vector<bool> visited(static_cast<size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        if (seen_mid[static_cast<size_t>(i)] || visited[static_cast<size_t>(i)]) continue;
        ++nloops;
        int j = i;
        while (!visited[static_cast<size_t>(j)]) {
            visited[static_cast<size_t>(j)] = true;
            int q = m2[static_cast<size_t>(j)];       // stays in the middle layer
            visited[static_cast<size_t>(q)] = true;
            j = m1[static_cast<size_t>(q + n)] - n;
        }
    }
    return {res, nloops};
}

// ---------------------------------------------------------------------------
// TLElement: formal combination of matchings with RationalFn coefficients.
// ---------------------------------------------------------------------------
struct TLElement {
    int n = 0;
    std::map<Matching, RationalFn> combo;

    static TLElement identity(int n) {
        TLElement x;
        x.n = n;
        x.combo[tl_identity_matching(n)] = RationalFn(LaurentPoly(Rational(1)));
        return x;
    }
    static TLElement hook(int n, int i) {
        TLElement x;
        x.n = n;
        x.combo[tl_e_matching(n, i)] = RationalFn(LaurentPoly(Rational(1)));
        return x;
    }

    void add(const Matching& m, const RationalFn& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = combo.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) combo.erase(it);
        }
    }

    bool is_zero() const { return combo.empty(); }

    TLElement scaled(const RationalFn& c) const {
        TLElement out;
        out.n = n;
        if (c.is_zero()) return out;
        for (const auto& [m, k] : combo) out.combo[m] = k * c;
        return out;
    }

    TLElement operator+(const TLElement& o) const {
        if (n != o.n) throw PreconditionError("strand count mismatch");
        TLElement out = *this;
        for (const auto& [m, c] : o.combo) out.add(m, c);
        return out;
    }
    TLElement operator-(const TLElement& o) const {
        return *this + o.scaled(RationalFn(LaurentPoly(Rational(-1))));
    }
    bool operator==(const TLElement& o) const { return n == o.n && combo == o.combo; }
};

// Stacked product y.x? Convention: tl_multiply(x, y) stacks y on top of x;
// each closed circle contributes a factor of delta(1) = -A^2 - A^-2.
inline TLElement tl_multiply(const TLElement& x, const TLElement& y) {
    if (x.n != y.n) throw PreconditionError("strand count mismatch");
    const RationalFn loop{delta(1)};
    TLElement out;
    out.n = x.n;
    for (const auto& [m1, c1] : x.combo)
        for (const auto& [m2, c2] : y.combo) {
            auto [m, nloops] = tl_compose(m1, m2, x.n);
            RationalFn c = c1 * c2;
            for (int k = 0; k < nloops; ++k) c *= loop;
            out.add(m, c);
        }
    return out;
}

// Side-by-side juxtaposition (x on the left).
inline Matching matching_tensor(const Matching& m1, const Matching& m2) {
    int n1 = static_cast<int>(m1.size()) / 2, n2 = static_cast<int>(m2.size()) / 2;
    int n = n1 + n2;
    auto re1 = [&](int i) { return i < n1 ? i : i + n2; };
    auto re2 = [&](int j) { return j < n2 ? n1 + j : j + 2 * n1; };
    Matching p(static_cast<size_t>(2 * n), -1);
    for (int i = 0; i < 2 * n1; ++i)
        p[static_cast<size_t>(re1(i))] = re1(m1[static_cast<size_t>(i)]);
    for (int j = 0; j < 2 * n2; ++j)
        p[static_cast<size_t>(re2(j))] = re2(m2[static_cast<size_t>(j)]);
    return p;
}

inline TLElement tl_tensor(const TLElement& x, const TLElement& y) {
    TLElement out;
    out.n = x.n + y.n;
    for (const auto& [m1, c1] : x.combo)
        for (const auto& [m2, c2] : y.combo) out.add(matching_tensor(m1, m2), c1 * c2);
    return out;
}

// Markov trace: close bottom i to top i with nested return arcs; circles
// contribute delta(1) each.
inline RationalFn tl_trace(const TLElement& x) {
    const RationalFn loop{delta(1)};
    RationalFn out;
    for (const auto& [m, c] : x.combo) {
        int n = x.n;
        std::vector<bool> visited(static_cast<size_t>(2 * n), false);
        int circles = 0;
        for (int s = 0; s < 2 * n; ++s) {
            if (visited[static_cast<size_t>(s)]) continue;
            ++circles;
            int cur = s;
            do {  // alternate matching arcs and closure arcs
                visited[static_cast<size_t>(cur)] = true;
                cur = m[static_cast<size_t>(cur)];
                visited[static_cast<size_t>(cur)] = true;
                cur = cur < n ? cur + n : cur - n;
            } while (cur != s);
        }
        RationalFn term = c;
        for (int k = 0; k < circles; ++k) term *= loop;
        out += term;
    }
    return out;
}

// Closes the rightmost strand (bottom n-1 to top n-1); yields an element on
// n-1 strands.
inline TLElement tl_trace_right(const TLElement& x) {
    int n = x.n;
    if (n < 1) throw PreconditionError("no strand to close");
    const RationalFn loop{delta(1)};
    TLElement out;
    out.n = n - 1;
    for (const auto& [m, c] : x.combo) {
        int b = n - 1, t = 2 * n - 1;
        Matching w = m;
        RationalFn coef = c;
        if (w[static_cast<size_t>(b)] == t) {
            coef *= loop;
        } else {
            int pb = w[static_cast<size_t>(b)], pt = w[static_cast<size_t>(t)];
            w[static_cast<size_t>(pb)] = pt;
            w[static_cast<size_t>(pt)] = pb;
        }
        auto re = [&](int i) { return i < n ? i : i - 1; };
        Matching r(static_cast<size_t>(2 * (n - 1)));
        for (int i = 0; i < 2 * n; ++i) {
            if (i == b || i == t) continue;
            r[static_cast<size_t>(re(i))] = re(w[static_cast<size_t>(i)]);
        }
        out.add(r, coef);
    }
    return out;
}

inline long long catalan(int k) {
    long long c = 1;
    for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

// ---------------------------------------------------------------------------
// Jones-Wenzl idempotents, memoized, with a hard strand cap.
// ---------------------------------------------------------------------------
inline constexpr int kDefaultNMax = 8;

inline const TLElement& jones_wenzl(int n, int n_max = kDefaultNMax) {
    if (n < 1) throw PreconditionError("jones_wenzl requires n >= 1");
    if (n > n_max)
        throw ResourceError("jones_wenzl cap exceeded: n = " + std::to_string(n) +
                            " > n_max = " + std::to_string(n_max));
    static std::map<int, TLElement> cache;
    static std::recursive_mutex mu;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    TLElement r;
    if (n == 1) {
        r = TLElement::identity(1);
    } else {
        const TLElement& f = jones_wenzl(n - 1, n_max);
        // Include into TL_n by adding a strand on the right.
        TLElement fi = tl_tensor(f, TLElement::identity(1));
        TLElement mid = tl_multiply(tl_multiply(fi, TLElement::hook(n, n - 2)), fi);
        RationalFn coef =
            RationalFn(delta(n - 2), delta(n - 1)) * RationalFn(LaurentPoly(Rational(-1)));
        r = fi + mid.scaled(coef);
    }
    return cache.emplace(n, std::move(r)).first->second;
}

// ---------------------------------------------------------------------------
// Hook-cascade identity (checkable at small parameters):
//   (f(a) ox 1_b) . f(a+b)
//     = (f(a) ox 1_b) . (1_1 ox f(a+b-1))
//     + (-1)^a (D_{b-1}/D_{a+b-1}) (f(a) ox f(b)) . H_a . (1_1 ox f(a+b-1))
// where H_a = e_a e_{a-1} ... e_1 collapses to the single matching below.
// ---------------------------------------------------------------------------
inline Matching hook_cascade_matching(int a, int m) {
    // On 2m points: bottom i -> top i+2 for i <= a-2; cap(bottom a-1, a);
    // cup(top 0, 1); straight strands above a.
    Matching p(static_cast<size_t>(2 * m), -1);
    for (int i = 0; i + 2 <= a; ++i) {
        p[static_cast<size_t>(i)] = m + i + 2;
        p[static_cast<size_t>(m + i + 2)] = i;
    }
    p[static_cast<size_t>(a - 1)] = a;
    p[static_cast<size_t>(a)] = a - 1;
    p[static_cast<size_t>(m)] = m + 1;
    p[static_cast<size_t>(m + 1)] = m;
    for (int i = a + 1; i < m; ++i) {
        p[static_cast<size_t>(i)] = m + i;
        p[static_cast<size_t>(m + i)] = i;
    }
    return p;
}

inline bool verify_junkterms(int a, int b, int n_max = kDefaultNMax) {
    if (a < 1 || b < 1) throw PreconditionError("require a >= 1 and b >= 1");
    int m = a + b;
    if (m > n_max) throw ResourceError("a + b exceeds the strand cap");
    TLElement fa1b = tl_tensor(jones_wenzl(a, n_max), TLElement::identity(b));
    TLElement tail1 = tl_tensor(TLElement::identity(1), jones_wenzl(m - 1, n_max));
    TLElement lhs = tl_multiply(fa1b, jones_wenzl(m, n_max));
    TLElement t1 = tl_multiply(fa1b, tail1);
    TLElement fafb = tl_tensor(jones_wenzl(a, n_max), jones_wenzl(b, n_max));
    TLElement ha;
    ha.n = m;
    ha.combo[hook_cascade_matching(a, m)] = RationalFn(LaurentPoly(Rational(1)));
    TLElement t2 = tl_multiply(tl_multiply(fafb, ha), tail1);
    RationalFn coef = RationalFn(delta(b - 1), delta(m - 1));
    if (a % 2 != 0) coef *= RationalFn(LaurentPoly(Rational(-1)));
    return lhs == t1 + t2.scaled(coef);
}

}  // namespace skein
