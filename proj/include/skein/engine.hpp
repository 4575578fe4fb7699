// Planar contraction engine: a closed diagram is a list of gadgets (crossing,
// Jones-Wenzl box, fixed arcs, free loop) glued along integer ports. The
// evaluator sweeps the gadgets in a greedy order that keeps the open boundary
// small, maintaining a state map from boundary pairings to coefficients.
//
// The cut width (maximum number of open ports during the sweep) is computed
// up front; jobs whose Catalan bound exceeds the budget fail fast.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "skein/errors.hpp"
#include "skein/laurent.hpp"
#include "skein/tl.hpp"

namespace skein {

struct Gadget {
    enum class Kind { Crossing, Box, Arcs, Loop };
    Kind kind;
    int color = 0;           // Box: strand count (2*color ports, bottom then top)
    std::vector<int> ports;  // Crossing: {a,b,c,d} ccw from incoming under

    static Gadget crossing(int a, int b, int c, int d) {
        return {Kind::Crossing, 0, {a, b, c, d}};
    }
    static Gadget box(int color, std::vector<int> ports) {
        if (static_cast<int>(ports.size()) != 2 * color)
            throw PreconditionError("box needs 2*color ports");
        return {Kind::Box, color, std::move(ports)};
    }
    static Gadget arcs(const std::vector<std::pair<int, int>>& pairs) {
        Gadget g{Kind::Arcs, 0, {}};
        for (const auto& [x, y] : pairs) {
            g.ports.push_back(x);
            g.ports.push_back(y);
        }
        return g;
    }
    static Gadget loop() { return {Kind::Loop, 0, {}}; }
};

inline constexpr long long kDefaultBudget = 1'000'000;

namespace detail {

using Pairing = std::unordered_map<int, int>;
using PairList = std::vector<std::pair<int, int>>;

// Expansion of one gadget into (boundary pairing, coefficient) terms. The
// common denominator of the coefficients (nontrivial only for Jones-Wenzl
// boxes) is factored out once, so the sweep works over polynomials and never
// needs rational-function reduction.
struct GadgetTerms {
    std::vector<std::pair<PairList, LaurentPoly>> terms;
    LaurentPoly den{Rational(1)};
};

inline GadgetTerms gadget_terms(const Gadget& g, int n_max) {
    GadgetTerms out;
    switch (g.kind) {
        case Gadget::Kind::Crossing: {
            int a = g.ports[0], b = g.ports[1], c = g.ports[2], d = g.ports[3];
            out.terms.push_back({{{b, c}, {d, a}}, LaurentPoly::mono(1)});
            out.terms.push_back({{{a, b}, {c, d}}, LaurentPoly::mono(-1)});
            break;
        }
        case Gadget::Kind::Box: {
            const auto& combo = jones_wenzl(g.color, n_max).combo;
            for (const auto& [m, coef] : combo) {
                LaurentPoly q = coef.den().div_exact(poly_gcd(out.den, coef.den()));
                out.den = out.den * q;  // running lcm of the denominators
            }
            for (const auto& [m, coef] : combo) {
                PairList pairs;
                for (int i = 0; i < 2 * g.color; ++i)
                    if (i < m[static_cast<size_t>(i)])
                        pairs.push_back({g.ports[static_cast<size_t>(i)],
                                         g.ports[static_cast<size_t>(m[static_cast<size_t>(i)])]});
                out.terms.push_back(
                    {std::move(pairs), coef.num() * out.den.div_exact(coef.den())});
            }
            break;
        }
        case Gadget::Kind::Arcs: {
            PairList pairs;
            for (size_t i = 0; i + 1 < g.ports.size(); i += 2)
                pairs.push_back({g.ports[i], g.ports[i + 1]});
            out.terms.push_back({std::move(pairs), LaurentPoly(Rational(1))});
            break;
        }
        case Gadget::Kind::Loop:
            out.terms.push_back({{}, delta(1)});
            break;
    }
    return out;
}

// Glues gadget pairs into the current boundary pairing; ports shared between
// the two are consumed, fully closed walks become circles.
inline std::pair<Pairing, int> merge(const Pairing& sigma, const PairList& gpairs) {
    Pairing g;
    for (const auto& [x, y] : gpairs) {
        g[x] = y;
        g[y] = x;
    }
    std::set<int> shared, visited;
    for (const auto& [k, v] : g)
        if (sigma.count(k)) shared.insert(k);
    Pairing out;
    auto walk_from = [&](int s) {
        if (shared.count(s) || out.count(s)) return;
        int cur = s;
        bool in_sigma = sigma.count(s) > 0;
        for (;;) {
            int nxt = in_sigma ? sigma.at(cur) : g.at(cur);
            if (shared.count(nxt)) {
                visited.insert(nxt);
                cur = nxt;
                in_sigma = !in_sigma;
            } else {
                out[s] = nxt;
                out[nxt] = s;
                return;
            }
        }
    };
    for (const auto& [k, v] : sigma) walk_from(k);
    for (const auto& [k, v] : g) walk_from(k);
    int nloops = 0;
    for (int s : shared) {
        if (visited.count(s)) continue;
        ++nloops;
        int cur = s;
        bool in_sigma = true;
        for (;;) {
            visited.insert(cur);
            cur = in_sigma ? sigma.at(cur) : g.at(cur);
            in_sigma = !in_sigma;
            if (cur == s && in_sigma) break;
        }
    }
    return {std::move(out), nloops};
}

inline std::vector<int> key_of(const Pairing& p) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [k, v] : p)
        if (k < v) pairs.push_back({k, v});
    std::sort(pairs.begin(), pairs.end());
    std::vector<int> key;
    key.reserve(pairs.size() * 2);
    for (const auto& [a, b] : pairs) {
        key.push_back(a);
        key.push_back(b);
    }
    return key;
}

}  // namespace detail

struct SweepPlan {
    std::vector<int> order;
    int cut_width = 0;
};

// Greedy ordering minimizing the boundary symmetric difference at each step.
inline SweepPlan plan_sweep(const std::vector<Gadget>& gadgets) {
    SweepPlan plan;
    std::vector<int> rem(gadgets.size());
    std::iota(rem.begin(), rem.end(), 0);
    std::set<int> boundary;
    while (!rem.empty()) {
        size_t best_pos = 0;
        std::pair<long, long> best_key{0, 0};
        bool have = false;
        for (size_t pos = 0; pos < rem.size(); ++pos) {
            std::set<int> es(gadgets[static_cast<size_t>(rem[pos])].ports.begin(),
                             gadgets[static_cast<size_t>(rem[pos])].ports.end());
            long inter = 0, uni = 0;
            for (int e : es)
                boundary.count(e) ? ++inter : ++uni;
            long symdiff = static_cast<long>(boundary.size()) - inter + uni;
            std::pair<long, long> key{symdiff, -inter};
            if (!have || key < best_key) {
                best_key = key;
                best_pos = pos;
                have = true;
            }
        }
        int gi = rem[best_pos];
        rem.erase(rem.begin() + static_cast<long>(best_pos));
        plan.order.push_back(gi);
        for (int e : gadgets[static_cast<size_t>(gi)].ports) {
            auto it = boundary.find(e);
            if (it != boundary.end())
                boundary.erase(it);
            else
                boundary.insert(e);
        }
        plan.cut_width = std::max(plan.cut_width, static_cast<int>(boundary.size()));
    }
    if (!boundary.empty()) throw PreconditionError("diagram not closed");
    return plan;
}

struct EvalResult {
    RationalFn value;
    int cut_width = 0;
};

// Evaluates a closed gadget diagram to a scalar in Q(A).
inline EvalResult evaluate(const std::vector<Gadget>& gadgets,
                           long long budget = kDefaultBudget, int n_max = kDefaultNMax) {
    SweepPlan plan = plan_sweep(gadgets);
    long long bound = catalan(plan.cut_width / 2);
    if (bound > budget)
        throw ResourceError("cut width " + std::to_string(plan.cut_width) +
                            " needs state bound " + std::to_string(bound) +
                            " > budget " + std::to_string(budget));
    const LaurentPoly loop_val = delta(1);
    LaurentPoly total_den{Rational(1)};
    std::map<std::vector<int>, LaurentPoly> state;
    state[{}] = LaurentPoly(Rational(1));
    for (int gi : plan.order) {
        auto gt = detail::gadget_terms(gadgets[static_cast<size_t>(gi)], n_max);
        total_den = total_den * gt.den;
        std::map<std::vector<int>, LaurentPoly> next;
        for (const auto& [key, c0] : state) {
            detail::Pairing sigma;
            for (size_t i = 0; i + 1 < key.size(); i += 2) {
                sigma[key[i]] = key[i + 1];
                sigma[key[i + 1]] = key[i];
            }
            for (const auto& [pairs, gc] : gt.terms) {
                auto [merged, nloops] = detail::merge(sigma, pairs);
                LaurentPoly c = c0 * gc;
                for (int k = 0; k < nloops; ++k) c = c * loop_val;
                std::vector<int> k2 = detail::key_of(merged);
                auto [it, fresh] = next.try_emplace(std::move(k2), std::move(c));
                if (!fresh) it->second += c;
            }
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second.is_zero() ? next.erase(it) : std::next(it);
        state = std::move(next);
    }
    if (state.size() > 1) throw PreconditionError("diagram not closed");
    EvalResult out;
    out.cut_width = plan.cut_width;
    if (!state.empty()) out.value = RationalFn(state.begin()->second, total_den);
    return out;
}

}  // namespace skein
