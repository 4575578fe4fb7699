// Kauffman states: smoothing diagrams with their planar embedding (sides and
// nesting), state graphs, adequacy, reduced graphs, the fiberedness
// criterion, the local chord-transposition move, link recovery, and the
// normal-form decomposition into alternating pieces.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/errors.hpp"

namespace skein {

enum class Smoothing { A, B };

// ---------------------------------------------------------------------------
// SmoothingDiagram: circles with a cyclic order of chord endpoints, an
// interior/exterior side bit per endpoint, and a nesting forest.
// ---------------------------------------------------------------------------
struct SmoothingDiagram {
    std::vector<std::vector<int>> circle_chords;    // per circle, chord ids in cyclic order
    std::vector<std::vector<bool>> circle_interior; // parallel side bits (true = interior)
    std::vector<int> parent;                        // nesting forest; -1 = top level

    int num_circles() const { return static_cast<int>(circle_chords.size()); }

    struct Endpoint {
        int circle;
        int pos;
    };
    // Endpoints of every chord, in (circle, position) form.
    std::map<int, std::vector<Endpoint>> endpoints() const {
        std::map<int, std::vector<Endpoint>> out;
        for (int c = 0; c < num_circles(); ++c)
            for (int i = 0; i < static_cast<int>(circle_chords[static_cast<size_t>(c)].size()); ++i)
                out[circle_chords[static_cast<size_t>(c)][static_cast<size_t>(i)]].push_back(
                    {c, i});
        return out;
    }

    int depth(int c) const {
        int d = 0;
        for (int p = parent[static_cast<size_t>(c)]; p >= 0; p = parent[static_cast<size_t>(p)])
            ++d;
        return d;
    }

    void validate() const {
        if (circle_interior.size() != circle_chords.size() ||
            parent.size() != circle_chords.size())
            throw PreconditionError("smoothing diagram shape mismatch");
        for (size_t c = 0; c < circle_chords.size(); ++c)
            if (circle_interior[c].size() != circle_chords[c].size())
                throw PreconditionError("side bits do not match slots");
        for (const auto& [ch, ends] : endpoints())
            if (ends.size() != 2)
                throw PreconditionError("chord " + std::to_string(ch) +
                                        " does not have exactly two endpoints");
    }
};

// ---------------------------------------------------------------------------
// State graphs.
// ---------------------------------------------------------------------------
struct StateGraph {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;  // multiset; loops allowed

    bool has_loop() const {
        for (const auto& [a, b] : edges)
            if (a == b) return true;
        return false;
    }
};

struct ReducedGraph {
    int num_vertices = 0;
    std::set<std::pair<int, int>> edges;  // simple graph, a < b
};

inline StateGraph state_graph(const SmoothingDiagram& s) {
    StateGraph g;
    g.num_vertices = s.num_circles();
    for (const auto& [ch, ends] : s.endpoints())
        g.edges.push_back({std::min(ends[0].circle, ends[1].circle),
                           std::max(ends[0].circle, ends[1].circle)});
    return g;
}

inline ReducedGraph reduce_graph(const StateGraph& g) {
    if (g.has_loop()) throw PreconditionError("diagram not adequate");
    ReducedGraph r;
    r.num_vertices = g.num_vertices;
    for (const auto& e : g.edges) r.edges.insert(e);
    return r;
}

namespace detail {

struct UnionFind {
    std::map<int, int> parent;
    int find(int x) {
        if (!parent.count(x)) parent[x] = x;
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

inline std::pair<int, int> smoothing_pairs(Smoothing kind, int slot) {
    // A pairs slots (1,2),(3,0); B pairs (0,1),(2,3). Returns the partner.
    static constexpr int a_pair[4] = {3, 2, 1, 0};
    static constexpr int b_pair[4] = {1, 0, 3, 2};
    return {slot, kind == Smoothing::A ? a_pair[slot] : b_pair[slot]};
}

}  // namespace detail

// Number of connected components of a graph given as vertex count + edges.
inline int graph_components(int nv, const std::vector<std::pair<int, int>>& edges) {
    detail::UnionFind uf;
    for (int v = 0; v < nv; ++v) uf.find(v);
    for (const auto& [a, b] : edges) uf.unite(a, b);
    std::set<int> roots;
    for (int v = 0; v < nv; ++v) roots.insert(uf.find(v));
    return static_cast<int>(roots.size());
}

inline int cycle_rank(const ReducedGraph& g) {
    std::vector<std::pair<int, int>> edges(g.edges.begin(), g.edges.end());
    return static_cast<int>(g.edges.size()) - g.num_vertices +
           graph_components(g.num_vertices, edges);
}

// True iff the chosen state graph has no loop edge.
inline bool is_adequate(const PlanarDiagram& d, Smoothing kind) {
    detail::UnionFind uf;
    for (const auto& t : d.crossings()) {
        if (kind == Smoothing::A) {
            uf.unite(t[1], t[2]);
            uf.unite(t[3], t[0]);
        } else {
            uf.unite(t[0], t[1]);
            uf.unite(t[2], t[3]);
        }
    }
    for (const auto& t : d.crossings()) {
        int c1 = kind == Smoothing::A ? uf.find(t[1]) : uf.find(t[0]);
        int c2 = kind == Smoothing::A ? uf.find(t[3]) : uf.find(t[2]);
        if (c1 == c2) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// all_state: smoothing diagram with embedding data, from the PD rotation
// system. Faces of the 4-valent map are traced by dart cycles; the smoothing
// at each crossing merges the two opposite corner faces into the region that
// hosts the chord. Sides and nesting follow from the face-adjacency tree,
// rooted at a deterministic outer face.
// ---------------------------------------------------------------------------
inline SmoothingDiagram all_state(const PlanarDiagram& d, Smoothing kind) {
    SmoothingDiagram s;
    if (d.empty()) {
        s.circle_chords.push_back({});
        s.circle_interior.push_back({});
        s.parent.push_back(-1);
        return s;
    }
    const auto& pd = d.crossings();
    const int nc = d.num_crossings();
    auto occ = d.occurrences();

    // Faces: darts (ci, si) mean "leave crossing ci along the edge at slot
    // si"; the next dart turns left at the far end.
    std::map<EdgeEnd, int> corner_face;  // corner (ci, s) = region between slots s, s+1
    int nfaces = 0;
    {
        std::set<EdgeEnd> seen;
        for (int ci = 0; ci < nc; ++ci)
            for (int si = 0; si < 4; ++si) {
                EdgeEnd dart{ci, si};
                if (seen.count(dart)) continue;
                int f = nfaces++;
                EdgeEnd cur = dart;
                while (!seen.count(cur)) {
                    seen.insert(cur);
                    auto [cj, tj] = d.other_end(occ, cur.first, cur.second);
                    corner_face[{cj, tj}] = f;  // arrival corner, between slots tj, tj+1
                    cur = {cj, (tj + 1) % 4};
                }
            }
        if (nc - 2 * nc + nfaces != 2)
            throw PreconditionError("PD code is not a spherical diagram");
    }

    // Merge the two chord-corner faces at every crossing.
    std::vector<int> fparent(static_cast<size_t>(nfaces));
    for (int f = 0; f < nfaces; ++f) fparent[static_cast<size_t>(f)] = f;
    auto ffind = [&](int x) {
        while (fparent[static_cast<size_t>(x)] != x) {
            fparent[static_cast<size_t>(x)] = fparent[static_cast<size_t>(fparent[static_cast<size_t>(x)])];
            x = fparent[static_cast<size_t>(x)];
        }
        return x;
    };
    const int cc0 = kind == Smoothing::A ? 0 : 1;  // chord corners: A {0,2}, B {1,3}
    for (int ci = 0; ci < nc; ++ci) {
        int a = ffind(corner_face.at({ci, cc0})), b = ffind(corner_face.at({ci, cc0 + 2}));
        if (a != b) fparent[static_cast<size_t>(a)] = b;
    }
    auto chord_face = [&](int ci) { return ffind(corner_face.at({ci, cc0})); };

    // Walk the state circles, recording chords in traversal order and the
    // face hugged by each smoothing arc (the non-chord side).
    struct Event {
        int chord;
        bool chord_left;  // chord region on the left of the traversal
        int hug_face;     // face on the other side
    };
    std::vector<std::vector<Event>> circles;
    {
        std::set<int> eseen;
        for (int e0 : d.edges()) {
            if (eseen.count(e0)) continue;
            std::vector<Event> cyc;
            auto [ci, si] = occ.at(e0)[0];
            int e = e0;
            while (!eseen.count(e)) {
                eseen.insert(e);
                int p = detail::smoothing_pairs(kind, si).second;
                bool left = p == (si + 1) % 4;
                int hug;
                if (kind == Smoothing::A)
                    hug = (si == 1 || si == 2) ? 1 : 3;
                else
                    hug = (si == 0 || si == 1) ? 0 : 2;
                cyc.push_back({ci, left, ffind(corner_face.at({ci, hug}))});
                e = pd[static_cast<size_t>(ci)][static_cast<size_t>(p)];
                std::tie(ci, si) = d.other_end(occ, ci, p);
            }
            circles.push_back(std::move(cyc));
        }
    }

    const int k = static_cast<int>(circles.size());
    // Left/right faces per circle; degenerate (loop) diagrams fall back to an
    // abstract, non-embedded answer.
    std::vector<int> lface(static_cast<size_t>(k), -1), rface(static_cast<size_t>(k), -1);
    bool embedded = true;
    for (int c = 0; c < k && embedded; ++c) {
        std::set<int> lf, rf;
        for (const auto& ev : circles[static_cast<size_t>(c)]) {
            int cf = chord_face(ev.chord);
            (ev.chord_left ? lf : rf).insert(cf);
            (ev.chord_left ? rf : lf).insert(ev.hug_face);
        }
        if (lf.size() != 1 || rf.size() != 1 || *lf.begin() == *rf.begin()) {
            embedded = false;
            break;
        }
        lface[static_cast<size_t>(c)] = *lf.begin();
        rface[static_cast<size_t>(c)] = *rf.begin();
    }

    std::vector<int> cparent(static_cast<size_t>(k), -1);
    std::vector<std::vector<bool>> interior(static_cast<size_t>(k));
    std::map<int, int> face_depth;
    std::map<int, int> in_circle;  // inner face -> circle it belongs to
    if (embedded) {
        // Face-adjacency tree (one edge per circle); root = outer face with
        // the most incident circles, ties to the smallest id.
        std::map<int, std::vector<std::pair<int, int>>> adj;  // face -> (face, circle)
        for (int c = 0; c < k; ++c) {
            adj[lface[static_cast<size_t>(c)]].push_back({rface[static_cast<size_t>(c)], c});
            adj[rface[static_cast<size_t>(c)]].push_back({lface[static_cast<size_t>(c)], c});
        }
        if (static_cast<int>(adj.size()) != k + 1) {
            embedded = false;
        } else {
            int root = -1, best = -1;
            for (const auto& [f, dg] : adj)
                if (static_cast<int>(dg.size()) > best ||
                    (static_cast<int>(dg.size()) == best && f < root)) {
                    best = static_cast<int>(dg.size());
                    root = f;
                }
            std::queue<int> bfs;
            bfs.push(root);
            face_depth[root] = 0;
            while (!bfs.empty()) {
                int f = bfs.front();
                bfs.pop();
                for (const auto& [g, c] : adj[f])
                    if (!face_depth.count(g)) {
                        face_depth[g] = face_depth[f] + 1;
                        in_circle[g] = c;
                        bfs.push(g);
                    }
            }
            if (face_depth.size() != adj.size()) embedded = false;
        }
    }
    if (embedded) {
        for (int c = 0; c < k; ++c) {
            int lf = lface[static_cast<size_t>(c)], rf = rface[static_cast<size_t>(c)];
            int inf = face_depth[lf] > face_depth[rf] ? lf : rf;
            int outf = inf == lf ? rf : lf;
            cparent[static_cast<size_t>(c)] =
                face_depth[outf] == 0 ? -1 : in_circle.at(outf);
            // Canonical traversal direction: the outer face on the left. The
            // recovery rule depends on this handedness (its side pairing is
            // symmetric, so a flipped circle would silently mirror crossings).
            if (outf == rface[static_cast<size_t>(c)])
                std::reverse(circles[static_cast<size_t>(c)].begin(),
                             circles[static_cast<size_t>(c)].end());
            for (const auto& ev : circles[static_cast<size_t>(c)])
                interior[static_cast<size_t>(c)].push_back(chord_face(ev.chord) == inf);
        }
    } else {
        for (int c = 0; c < k; ++c)
            interior[static_cast<size_t>(c)].assign(circles[static_cast<size_t>(c)].size(),
                                                    false);
    }

    for (int c = 0; c < k; ++c) {
        std::vector<int> chords;
        for (const auto& ev : circles[static_cast<size_t>(c)]) chords.push_back(ev.chord);
        s.circle_chords.push_back(std::move(chords));
    }
    s.circle_interior = std::move(interior);
    s.parent = std::move(cparent);
    s.validate();
    return s;
}

// ---------------------------------------------------------------------------
// Fiberedness criterion: the reduced all-A graph is a tree.
// ---------------------------------------------------------------------------
inline bool is_fibered_criterion(const PlanarDiagram& d) {
    if (!is_adequate(d, Smoothing::A)) throw PreconditionError("diagram is not A-adequate");
    ReducedGraph g = reduce_graph(state_graph(all_state(d, Smoothing::A)));
    std::vector<std::pair<int, int>> edges(g.edges.begin(), g.edges.end());
    return cycle_rank(g) == 0 && graph_components(g.num_vertices, edges) == 1;
}

// ---------------------------------------------------------------------------
// Local move: transpose a chord endpoint with the adjacent endpoint at
// target_pos on the same circle. Legal only when the two endpoints lie on
// opposite sides of the circle and the far endpoints of the two chords lie
// on two further, distinct circles (three distinct circles in total).
// ---------------------------------------------------------------------------
inline SmoothingDiagram main_theorem_move(const SmoothingDiagram& s, int chord, int circle,
                                          int target_pos) {
    s.validate();
    auto ends = s.endpoints();
    if (!ends.count(chord)) throw PreconditionError("no such chord");
    const auto& slots = s.circle_chords[static_cast<size_t>(circle)];
    int len = static_cast<int>(slots.size());
    int pos = -1;
    for (const auto& e : ends.at(chord))
        if (e.circle == circle) pos = e.pos;
    if (pos < 0) throw PreconditionError("chord has no endpoint on that circle");
    if (target_pos < 0 || target_pos >= len ||
        (target_pos != (pos + 1) % len && target_pos != (pos + len - 1) % len))
        throw PreconditionError("target slot is not adjacent");
    int nb = slots[static_cast<size_t>(target_pos)];
    if (nb == chord) throw PreconditionError("cannot transpose a chord with itself");
    if (s.circle_interior[static_cast<size_t>(circle)][static_cast<size_t>(pos)] ==
        s.circle_interior[static_cast<size_t>(circle)][static_cast<size_t>(target_pos)])
        throw PreconditionError("adjacent endpoints lie on the same side");
    auto far = [&](int ch, int skip_pos) {
        for (const auto& e : ends.at(ch))
            if (!(e.circle == circle && e.pos == skip_pos)) return e.circle;
        throw PreconditionError("chord endpoint bookkeeping failed");
    };
    int f1 = far(chord, pos), f2 = far(nb, target_pos);
    if (f1 == circle || f2 == circle || f1 == f2)
        throw PreconditionError("endpoints do not lie on three distinct circles");
    SmoothingDiagram out = s;
    std::swap(out.circle_chords[static_cast<size_t>(circle)][static_cast<size_t>(pos)],
              out.circle_chords[static_cast<size_t>(circle)][static_cast<size_t>(target_pos)]);
    std::vector<bool>& side = out.circle_interior[static_cast<size_t>(circle)];
    bool tmp = side[static_cast<size_t>(pos)];
    side[static_cast<size_t>(pos)] = side[static_cast<size_t>(target_pos)];
    side[static_cast<size_t>(target_pos)] = tmp;
    return out;
}

// Convenience wrapper: transpose `chord` with the adjacent chord `neighbor`
// on the given circle, locating the slots automatically.
inline SmoothingDiagram move_past(const SmoothingDiagram& s, int chord, int circle,
                                  int neighbor) {
    const auto& slots = s.circle_chords.at(static_cast<size_t>(circle));
    int len = static_cast<int>(slots.size());
    int pos = -1;
    for (int i = 0; i < len; ++i)
        if (slots[static_cast<size_t>(i)] == chord) pos = i;
    if (pos < 0) throw PreconditionError("chord has no endpoint on that circle");
    for (int t : {(pos + 1) % len, (pos + len - 1) % len})
        if (slots[static_cast<size_t>(t)] == neighbor)
            return main_theorem_move(s, chord, circle, t);
    throw PreconditionError("chords are not adjacent on that circle");
}

// ---------------------------------------------------------------------------
// Link recovery: reinsert a crossing at every chord. The tuple rotation is
// fixed by requiring the smoothing of the chosen kind to reproduce the two
// circle arcs at the chord.
// ---------------------------------------------------------------------------
inline PlanarDiagram recover_link(const SmoothingDiagram& s, Smoothing kind) {
    s.validate();
    // Arc (circle, i) runs from slot i to slot i+1; each arc is a PD edge.
    std::map<std::pair<int, int>, int> arc_id;
    int next_id = 0;
    for (int c = 0; c < s.num_circles(); ++c)
        for (int i = 0; i < static_cast<int>(s.circle_chords[static_cast<size_t>(c)].size());
             ++i)
            arc_id[{c, i}] = ++next_id;
    if (next_id == 0) {
        if (s.num_circles() != 1)
            throw PreconditionError("chordless smoothing diagram must be a single circle");
        return PlanarDiagram();  // unknot
    }
    auto ends = s.endpoints();
    std::vector<std::array<int, 4>> pd;
    for (const auto& [ch, es] : ends) {
        auto [c1, i1] = es[0];
        auto [c2, i2] = es[1];
        int k1 = static_cast<int>(s.circle_chords[static_cast<size_t>(c1)].size());
        int k2 = static_cast<int>(s.circle_chords[static_cast<size_t>(c2)].size());
        int u1 = arc_id.at({c1, (i1 + k1 - 1) % k1}), v1 = arc_id.at({c1, i1});
        int u2 = arc_id.at({c2, (i2 + k2 - 1) % k2}), v2 = arc_id.at({c2, i2});
        bool in1 = s.circle_interior[static_cast<size_t>(c1)][static_cast<size_t>(i1)];
        bool in2 = s.circle_interior[static_cast<size_t>(c2)][static_cast<size_t>(i2)];
        std::array<int, 4> cyc;
        if (!in1 && !in2)
            cyc = {v1, u1, v2, u2};
        else if (!in1 && in2)
            cyc = {v1, u1, u2, v2};
        else if (in1 && in2)
            cyc = {v1, u2, v2, u1};
        else
            cyc = {v1, v2, u2, u1};
        // Rotate so the requested smoothing pairs are {u1,v1} and {u2,v2}.
        auto want = [&](int x, int y) {
            return (x == u1 && y == v1) || (x == v1 && y == u1) || (x == u2 && y == v2) ||
                   (x == v2 && y == u2);
        };
        bool placed = false;
        for (int r = 0; r < 4 && !placed; ++r) {
            std::array<int, 4> t;
            for (int j = 0; j < 4; ++j) t[static_cast<size_t>(j)] = cyc[static_cast<size_t>((j + r) % 4)];
            bool ok = kind == Smoothing::A ? (want(t[1], t[2]) && want(t[3], t[0]))
                                           : (want(t[0], t[1]) && want(t[2], t[3]));
            if (ok) {
                pd.push_back(t);
                placed = true;
            }
        }
        if (!placed) throw PreconditionError("smoothing diagram is not realizable");
    }
    return PlanarDiagram(pd);
}

// ---------------------------------------------------------------------------
// Normal form: repeatedly pick the deepest circle with chords on both sides,
// slide its interior chords together (legal transpositions only), and split
// the diagram into the piece inside that circle and the piece outside it.
// Returns the reduced graphs of the resulting alternating pieces.
// ---------------------------------------------------------------------------
namespace detail {

// Restricts s to the given circles; keeps chords with both endpoints inside.
inline SmoothingDiagram restrict_to(const SmoothingDiagram& s, const std::set<int>& keep,
                                    int new_root) {
    SmoothingDiagram out;
    std::map<int, int> remap;
    std::set<int> chords_kept;
    auto ends = s.endpoints();
    for (const auto& [ch, es] : ends)
        if (keep.count(es[0].circle) && keep.count(es[1].circle)) chords_kept.insert(ch);
    for (int c = 0; c < s.num_circles(); ++c) {
        if (!keep.count(c)) continue;
        remap[c] = static_cast<int>(out.circle_chords.size());
        std::vector<int> chords;
        std::vector<bool> side;
        for (size_t i = 0; i < s.circle_chords[static_cast<size_t>(c)].size(); ++i) {
            int ch = s.circle_chords[static_cast<size_t>(c)][i];
            if (!chords_kept.count(ch)) continue;
            chords.push_back(ch);
            side.push_back(s.circle_interior[static_cast<size_t>(c)][i]);
        }
        out.circle_chords.push_back(std::move(chords));
        out.circle_interior.push_back(std::move(side));
    }
    for (int c = 0; c < s.num_circles(); ++c) {
        if (!keep.count(c)) continue;
        int p = c == new_root ? -1 : s.parent[static_cast<size_t>(c)];
        out.parent.push_back(p >= 0 && remap.count(p) ? remap[p] : -1);
    }
    return out;
}

}  // namespace detail

inline std::vector<ReducedGraph> tail_normal_form(const SmoothingDiagram& s0) {
    s0.validate();
    if (state_graph(s0).has_loop()) throw PreconditionError("diagram not adequate");
    std::vector<ReducedGraph> pieces;
    std::queue<SmoothingDiagram> work;
    work.push(s0);
    while (!work.empty()) {
        SmoothingDiagram s = work.front();
        work.pop();
        // Deepest circle with chords on both sides; ties to the smallest id.
        int target = -1, best_depth = -1;
        for (int c = 0; c < s.num_circles(); ++c) {
            const auto& side = s.circle_interior[static_cast<size_t>(c)];
            bool has_in = false, has_out = false;
            for (bool b : side) (b ? has_in : has_out) = true;
            if (has_in && has_out && s.depth(c) > best_depth) {
                best_depth = s.depth(c);
                target = c;
            }
        }
        if (target < 0) {
            pieces.push_back(reduce_graph(state_graph(s)));
            continue;
        }
        // Gather interior chords into one contiguous block by bubbling each
        // stray interior endpoint toward the longest interior run.
        for (;;) {
            const auto& side = s.circle_interior[static_cast<size_t>(target)];
            int len = static_cast<int>(side.size());
            int breaks = 0;
            for (int i = 0; i < len; ++i)
                if (side[static_cast<size_t>(i)] != side[static_cast<size_t>((i + 1) % len)])
                    ++breaks;
            if (breaks <= 2) break;
            // Longest interior run (cyclically), starting at the smallest index.
            int run_start = -1, run_len = 0;
            for (int i = 0; i < len; ++i) {
                if (!side[static_cast<size_t>(i)] ||
                    side[static_cast<size_t>((i + len - 1) % len)])
                    continue;
                int l = 0;
                while (side[static_cast<size_t>((i + l) % len)]) ++l;
                if (l > run_len) {
                    run_len = l;
                    run_start = i;
                }
            }
            // Nearest interior endpoint outside the run, bubbled toward it.
            int best_j = -1, best_dist = len + 1, best_dir = 0;
            for (int j = 0; j < len; ++j) {
                if (!side[static_cast<size_t>(j)]) continue;
                int off = (j - run_start + len) % len;
                if (off < run_len) continue;  // inside the run
                int dist_fwd = (run_start - j + len) % len;          // move forward
                int dist_back = (j - (run_start + run_len) + len) % len + 1;  // move backward
                if (dist_fwd < best_dist) {
                    best_dist = dist_fwd;
                    best_j = j;
                    best_dir = +1;
                }
                if (dist_back < best_dist) {
                    best_dist = dist_back;
                    best_j = j;
                    best_dir = -1;
                }
            }
            if (best_j < 0) throw PreconditionError("normal form: no movable chord");
            int pos = best_j;
            int nxt = (pos + best_dir + len) % len;
            s = main_theorem_move(
                s, s.circle_chords[static_cast<size_t>(target)][static_cast<size_t>(pos)],
                target, nxt);
        }
        // Split: the piece inside `target` (descendants) and the rest.
        std::set<int> inside{target};
        bool grew = true;
        while (grew) {
            grew = false;
            for (int c = 0; c < s.num_circles(); ++c)
                if (!inside.count(c) && c != target &&
                    s.parent[static_cast<size_t>(c)] >= 0 &&
                    inside.count(s.parent[static_cast<size_t>(c)])) {
                    inside.insert(c);
                    grew = true;
                }
        }
        std::set<int> outside{target};
        for (int c = 0; c < s.num_circles(); ++c)
            if (!inside.count(c)) outside.insert(c);
        work.push(detail::restrict_to(s, inside, target));
        work.push(detail::restrict_to(s, outside, -2));
    }
    return pieces;
}

}  // namespace skein
