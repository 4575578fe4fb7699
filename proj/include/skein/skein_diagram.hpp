// Crossingless skein diagrams: colored arcs joining Jones-Wenzl boxes, closed
// in the plane. Provides the scalar evaluation, the circle count of the
// underlying diagram S-bar (boxes replaced by identities), the adequacy test
// (no S-bar circle passes a box region twice), the degree report
// d(S) >= d(S-bar) = -2 * circles(S-bar), and the checkable local identity
//   tr(f(3n)) =.4(n+1) tr((f(2n) ox 1_n) . (1_n ox f(2n)))
// under an adequate closure of the 6n boundary points.
#pragma once

#include <map>
#include <vector>

#include "skein/engine.hpp"

namespace skein {

struct SkeinDiagram {
    std::vector<Gadget> gadgets;  // Box / Arcs / Loop only

    void add(Gadget g) {
        if (g.kind == Gadget::Kind::Crossing)
            throw PreconditionError("skein diagrams are crossingless");
        gadgets.push_back(std::move(g));
    }
};

inline RationalFn evaluate_closed(const SkeinDiagram& s, long long budget = kDefaultBudget,
                                  int n_max = kDefaultNMax) {
    return evaluate(s.gadgets, budget, n_max).value;
}

namespace detail {

struct BarEdge {
    int a, b;
    int gadget;  // index into s.gadgets, -1 if not a box
};

inline std::vector<BarEdge> bar_edges(const SkeinDiagram& s) {
    std::vector<BarEdge> edges;
    for (size_t gi = 0; gi < s.gadgets.size(); ++gi) {
        const Gadget& g = s.gadgets[gi];
        if (g.kind == Gadget::Kind::Box) {
            for (int i = 0; i < g.color; ++i)
                edges.push_back({g.ports[static_cast<size_t>(i)],
                                 g.ports[static_cast<size_t>(g.color + i)],
                                 static_cast<int>(gi)});
        } else if (g.kind == Gadget::Kind::Arcs) {
            for (size_t i = 0; i + 1 < g.ports.size(); i += 2)
                edges.push_back({g.ports[i], g.ports[i + 1], -1});
        }
    }
    return edges;
}

// Walks the circles of S-bar; calls visit(circle_index, edge) for every edge.
template <typename F>
inline int walk_bar_circles(const SkeinDiagram& s, F&& visit) {
    auto edges = bar_edges(s);
    std::map<int, std::vector<size_t>> at;  // port -> incident edge ids
    for (size_t ei = 0; ei < edges.size(); ++ei) {
        at[edges[ei].a].push_back(ei);
        at[edges[ei].b].push_back(ei);
    }
    for (const auto& [p, inc] : at)
        if (inc.size() != 2) throw PreconditionError("diagram not closed at a port");
    std::vector<bool> used(edges.size(), false);
    int circles = 0;
    for (size_t e0 = 0; e0 < edges.size(); ++e0) {
        if (used[e0]) continue;
        int ci = circles++;
        size_t ei = e0;
        int port = edges[e0].a;
        while (!used[ei]) {
            used[ei] = true;
            visit(ci, edges[ei]);
            port = edges[ei].a == port ? edges[ei].b : edges[ei].a;  // cross the edge
            const auto& inc = at[port];
            ei = inc[0] == ei ? inc[1] : inc[0];
        }
    }
    for (const auto& g : s.gadgets)
        if (g.kind == Gadget::Kind::Loop) ++circles;
    return circles;
}

}  // namespace detail

// Number of circles after replacing every box by the identity.
inline int bar_diagram(const SkeinDiagram& s) {
    return detail::walk_bar_circles(s, [](int, const detail::BarEdge&) {});
}

// True iff no circle of S-bar passes through any box region twice.
inline bool is_adequate_skein(const SkeinDiagram& s) {
    std::map<std::pair<int, int>, int> visits;  // (circle, box gadget) -> count
    bool ok = true;
    detail::walk_bar_circles(s, [&](int ci, const detail::BarEdge& e) {
        if (e.gadget >= 0 && ++visits[{ci, e.gadget}] > 1) ok = false;
    });
    return ok;
}

struct DegreeReport {
    bool nonzero = false;
    int d_s = 0;              // d(S), valid when nonzero
    int d_s_bar = 0;          // -2 * circles(S-bar)
    bool adequate = false;
    bool inequality_holds = false;  // d(S) >= d(S-bar)
    bool equality_holds = false;    // checked when adequate
};

inline DegreeReport check_degree_lemma(const SkeinDiagram& s, long long budget = kDefaultBudget,
                                       int n_max = kDefaultNMax) {
    DegreeReport r;
    r.d_s_bar = -2 * bar_diagram(s);
    r.adequate = is_adequate_skein(s);
    RationalFn v = evaluate_closed(s, budget, n_max);
    if (v.is_zero()) return r;  // degree undefined; flagged via nonzero=false
    r.nonzero = true;
    r.d_s = v.min_degree();
    r.inequality_holds = r.d_s >= r.d_s_bar;
    if (r.adequate) r.equality_holds = r.d_s == r.d_s_bar;
    return r;
}

// ---------------------------------------------------------------------------
// Local tail identity at color n, closed by a documented closure family.
// ---------------------------------------------------------------------------
enum class ClosureKind {
    Nested,         // bottom i joined to top i by nested return arcs (adequate)
    CappedAdjacent  // caps the last two strands on each side (inadequate)
};

namespace detail {

inline std::vector<std::pair<int, int>> closure_arcs(ClosureKind kind, int strands,
                                                     int bot0, int top0) {
    std::vector<std::pair<int, int>> arcs;
    if (kind == ClosureKind::Nested) {
        for (int i = 0; i < strands; ++i) arcs.push_back({bot0 + i, top0 + i});
    } else {
        for (int i = 0; i < strands - 2; ++i) arcs.push_back({bot0 + i, top0 + i});
        arcs.push_back({bot0 + strands - 2, bot0 + strands - 1});
        arcs.push_back({top0 + strands - 2, top0 + strands - 1});
    }
    return arcs;
}

}  // namespace detail

inline bool verify_local_tail_identity(int n, ClosureKind closure = ClosureKind::Nested,
                                       long long budget = kDefaultBudget,
                                       int n_max = kDefaultNMax) {
    if (n < 1) throw PreconditionError("require n >= 1");
    const int s3 = 3 * n;
    const int B = 0, T = 1000, M = 2000;  // port id blocks
    auto range = [](int base, int lo, int hi) {
        std::vector<int> v;
        for (int i = lo; i < hi; ++i) v.push_back(base + i);
        return v;
    };
    auto cat = [](std::vector<int> a, const std::vector<int>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    auto arcs_close = detail::closure_arcs(closure, s3, B, T);

    // Left picture: one box spanning all three n-strand bundles.
    SkeinDiagram lhs;
    lhs.add(Gadget::box(s3, cat(range(B, 0, s3), range(T, 0, s3))));
    lhs.add(Gadget::arcs(arcs_close));

    // Right picture: a box on the first two bundles stacked under a box on
    // the last two bundles.
    SkeinDiagram rhs;
    rhs.add(Gadget::box(2 * n, cat(range(B, 0, 2 * n), range(M, 0, 2 * n))));
    {
        std::vector<std::pair<int, int>> bridge;
        for (int i = 2 * n; i < s3; ++i) bridge.push_back({B + i, M + i});
        for (int i = 0; i < n; ++i) bridge.push_back({M + i, T + i});
        rhs.add(Gadget::arcs(bridge));
    }
    rhs.add(Gadget::box(2 * n, cat(range(M, n, s3), range(T, n, s3))));
    rhs.add(Gadget::arcs(arcs_close));

    if (!is_adequate_skein(lhs) || !is_adequate_skein(rhs))
        throw PreconditionError("closure pairing is not adequate");
    RationalFn lv = evaluate_closed(lhs, budget, n_max);
    RationalFn rv = evaluate_closed(rhs, budget, n_max);
    int order = 4 * (n + 1);
    return dot_eq_n(series_expand(lv, order), series_expand(rv, order), order);
}

}  // namespace skein
