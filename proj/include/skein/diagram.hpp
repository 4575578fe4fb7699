// Link-diagram data model: PD codes with orientation, parser, mirror, writhe,
// connected sum, and the blackboard-framed cable pattern description.
//
// PD convention: each crossing is a 4-tuple of edge labels, counterclockwise
// starting from the incoming under-strand. Orientation of each component is
// fixed by lowest-edge-label-first traversal, direction chosen so that the
// next edge label is the smaller of the two options.
#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "skein/errors.hpp"

namespace skein {

// (crossing index, slot 0..3): one of the two ends of an edge.
using EdgeEnd = std::pair<int, int>;

class PlanarDiagram {
public:
    PlanarDiagram() = default;  // 0-crossing unknot
    explicit PlanarDiagram(std::vector<std::array<int, 4>> crossings)
        : crossings_(std::move(crossings)) {
        validate();
    }

    const std::vector<std::array<int, 4>>& crossings() const { return crossings_; }
    int num_crossings() const { return static_cast<int>(crossings_.size()); }
    bool empty() const { return crossings_.empty(); }

    std::set<int> edges() const {
        std::set<int> out;
        for (const auto& t : crossings_)
            for (int e : t) out.insert(e);
        return out;
    }

    // Both ends of every edge, in crossing order.
    std::map<int, std::vector<EdgeEnd>> occurrences() const {
        std::map<int, std::vector<EdgeEnd>> occ;
        for (int ci = 0; ci < num_crossings(); ++ci)
            for (int si = 0; si < 4; ++si) occ[crossings_[ci][si]].push_back({ci, si});
        return occ;
    }

    // The end of edge `e` other than (ci, si).
    EdgeEnd other_end(const std::map<int, std::vector<EdgeEnd>>& occ, int ci, int si) const {
        const auto& o = occ.at(crossings_[ci][si]);
        return o[0] == EdgeEnd{ci, si} ? o[1] : o[0];
    }

    // Per edge, the crossing end the edge points INTO; also the component count.
    struct Orientation {
        std::map<int, EdgeEnd> head;
        int num_components = 0;
    };
    Orientation orient() const {
        Orientation out;
        auto occ = occurrences();
        std::set<int> visited;
        for (const auto& [start, ends] : occ) {
            if (visited.count(start)) continue;
            ++out.num_components;
            // Entering end chosen so the next edge label is smaller.
            std::vector<std::pair<int, EdgeEnd>> opts;
            for (const auto& [ci, si] : ends)
                opts.push_back({crossings_[ci][(si + 2) % 4], {ci, si}});
            std::sort(opts.begin(), opts.end());
            EdgeEnd head = opts[0].second;
            int e = start;
            while (!visited.count(e)) {
                visited.insert(e);
                out.head[e] = head;
                auto [ci, si] = head;
                int nxt = crossings_[ci][(si + 2) % 4];
                head = other_end(occ, ci, (si + 2) % 4);
                e = nxt;
            }
        }
        return out;
    }

    // Sum of crossing signs. A crossing is +1 iff the over-strand is incoming
    // at slot (under_in + 1) mod 4.
    int writhe() const {
        auto o = orient();
        int w = 0;
        for (int ci = 0; ci < num_crossings(); ++ci) {
            const auto& t = crossings_[ci];
            int u = -1;
            for (int s : {0, 2})
                if (o.head.at(t[s]) == EdgeEnd{ci, s}) u = s;
            if (u < 0) throw PreconditionError("orientation inconsistent at crossing");
            int s1 = (u + 1) % 4;
            w += (o.head.at(t[s1]) == EdgeEnd{ci, s1}) ? 1 : -1;
        }
        return w;
    }

    int num_components() const { return empty() ? 1 : orient().num_components; }

    // Mirror image: X[a,b,c,d] -> X[b,c,d,a].
    PlanarDiagram mirror() const {
        std::vector<std::array<int, 4>> out;
        out.reserve(crossings_.size());
        for (const auto& [a, b, c, d] : crossings_) out.push_back({b, c, d, a});
        return PlanarDiagram(out);
    }

    // Connected sum along edge1 of this and edge2 of d2.
    PlanarDiagram connected_sum(const PlanarDiagram& d2, int edge1, int edge2) const {
        if (empty()) return d2;
        if (d2.empty()) return *this;
        if (!edges().count(edge1)) throw PreconditionError("edge not in first diagram");
        if (!d2.edges().count(edge2)) throw PreconditionError("edge not in second diagram");
        int offset = *edges().rbegin() + 1;
        std::vector<std::array<int, 4>> out = crossings_;
        for (const auto& t : d2.crossings_) {
            std::array<int, 4> s;
            for (int i = 0; i < 4; ++i) s[i] = t[i] + offset;
            out.push_back(s);
        }
        // Splice: cut edge1 (ends X, Y) and edge2' (ends Z, W); rejoin as
        // X-edge1-Z and W-fresh-Y.
        int e2 = edge2 + offset;
        int fresh = e2 + offset;  // beyond every label in `out`
        bool cut1 = false, cut2 = false;
        for (auto& t : out)
            for (int& e : t) {
                if (e == e2 && !cut2) {
                    e = edge1;  // Z end
                    cut2 = true;
                } else if (e == e2) {
                    e = fresh;  // W end
                } else if (e == edge1 && !cut1) {
                    cut1 = true;  // X end keeps its label
                } else if (e == edge1) {
                    e = fresh;  // Y end
                }
            }
        return PlanarDiagram(out);
    }

    std::string str() const {
        std::ostringstream os;
        for (size_t i = 0; i < crossings_.size(); ++i) {
            if (i) os << ", ";
            const auto& t = crossings_[i];
            os << "X[" << t[0] << "," << t[1] << "," << t[2] << "," << t[3] << "]";
        }
        return os.str();
    }

    bool operator==(const PlanarDiagram& o) const { return crossings_ == o.crossings_; }

private:
    void validate() const {
        std::map<int, int> count;
        for (const auto& t : crossings_)
            for (int e : t) {
                if (e <= 0) throw PreconditionError("edge labels must be positive");
                ++count[e];
            }
        for (const auto& [e, c] : count)
            if (c != 2)
                throw PreconditionError("edge " + std::to_string(e) + " appears " +
                                        std::to_string(c) + " times (expected 2)");
    }

    std::vector<std::array<int, 4>> crossings_;
};

// Parses `X[a,b,c,d], X[...]...`; empty/whitespace input is the unknot.
inline PlanarDiagram parse_pd(const std::string& text) {
    std::vector<std::array<int, 4>> crossings;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
    };
    skip();
    while (i < text.size()) {
        if (text[i] != 'X') throw PreconditionError("expected 'X' in PD code");
        ++i;
        skip();
        char open = i < text.size() ? text[i] : '\0';
        if (open != '[' && open != '(') throw PreconditionError("expected '[' after X");
        char close = open == '[' ? ']' : ')';
        ++i;
        std::array<int, 4> t{};
        for (int k = 0; k < 4; ++k) {
            skip();
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i) throw PreconditionError("expected edge label in PD code");
            t[k] = std::stoi(text.substr(i, j - i));
            i = j;
            skip();
            if (k < 3) continue;
        }
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            throw PreconditionError("crossing arity is not 4");
        if (i >= text.size() || text[i] != close)
            throw PreconditionError("crossing arity is not 4");
        ++i;
        crossings.push_back(t);
        skip();
    }
    return PlanarDiagram(crossings);
}

}  // namespace skein
