// Built-in link corpus (planar-diagram codes) plus the worked chord-diagram
// example used by the tail-equivalence demonstrations. External corpus files
// use one `name: X[..],X[..],...` entry per line; blank lines and lines
// starting with '#' are ignored.
#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "skein/diagram.hpp"
#include "skein/states.hpp"

namespace skein {

inline const std::map<std::string, PlanarDiagram>& corpus() {
    static const std::map<std::string, PlanarDiagram> c = [] {
        std::map<std::string, PlanarDiagram> m;
        m.emplace("unknot", parse_pd(""));
        m.emplace("kinked_unknot", parse_pd("X[1,1,2,2]"));
        m.emplace("rtrefoil", parse_pd("X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]"));
        m.emplace("ltrefoil", m.at("rtrefoil").mirror());
        m.emplace("figure8", parse_pd("X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]"));
        m.emplace("5_1",
                  parse_pd("X[1,2,4,3],X[3,4,6,5],X[5,6,8,7],X[7,8,10,9],X[9,10,2,1]"));
        m.emplace("6_2",
                  parse_pd("X[2,5,4,1],X[5,7,6,4],X[7,9,8,6],X[9,3,11,10],"
                           "X[10,13,1,8],X[13,11,3,2]"));
        m.emplace("10_154m",
                  parse_pd("X[1,16,15,2],X[2,15,18,3],X[6,20,19,7],X[16,19,20,17],"
                           "X[9,13,14,10],X[4,14,13,3],X[5,18,17,6],X[5,11,10,4],"
                           "X[1,9,12,8],X[8,12,11,7]"));
        m.emplace("10_154", m.at("10_154m").mirror());
        m.emplace("granny",
                  m.at("ltrefoil").connected_sum(m.at("ltrefoil"), 1, 1));
        m.emplace("moved_10_154m",
                  parse_pd("X[1,16,15,2],X[2,15,18,3],X[4,20,19,5],X[16,19,20,17],"
                           "X[9,13,14,10],X[6,14,13,5],X[3,18,17,4],X[7,11,10,6],"
                           "X[1,9,12,8],X[8,12,11,7]"));
        return m;
    }();
    return c;
}

// The all-A smoothing state of 10_154m as a chord diagram: five circles,
// ten chords, with circle 0 nesting circles 1 and 2.
inline SmoothingDiagram ten154m_state() {
    SmoothingDiagram s;
    s.circle_chords = {
        {9, 1, 2, 6, 8, 7, 3, 10},  // outer circle
        {9, 5, 8, 10},
        {5, 6},
        {2, 1, 4, 7},
        {4, 3},
    };
    s.circle_interior = {
        {true, false, false, true, true, false, false, true},
        {false, false, false, false},
        {false, false},
        {false, false, false, false},
        {false, false},
    };
    s.parent = {-1, 0, 0, -1, -1};
    s.validate();
    return s;
}

// The documented sequence of legal transpositions taking ten154m_state() to
// the state of moved_10_154m: slide chords 8 and 6 past 7 and 3 on circle 0.
inline SmoothingDiagram ten154m_moved_state() {
    SmoothingDiagram s = ten154m_state();
    s = move_past(s, 8, 0, 7);
    s = move_past(s, 8, 0, 3);
    s = move_past(s, 6, 0, 7);
    s = move_past(s, 6, 0, 3);
    return s;
}

// Parses `name: PD` lines; later files may extend or override built-ins.
inline std::map<std::string, PlanarDiagram> parse_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open corpus file: " + path);
    std::map<std::string, PlanarDiagram> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        size_t colon = line.find(':', first);
        if (colon == std::string::npos)
            throw PreconditionError("corpus line " + std::to_string(lineno) +
                                    ": expected `name: PD`");
        std::string name = line.substr(first, colon - first);
        while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
        if (name.empty())
            throw PreconditionError("corpus line " + std::to_string(lineno) + ": empty name");
        out.insert_or_assign(name, parse_pd(line.substr(colon + 1)));
    }
    return out;
}

// Built-ins plus optional extra file entries; file entries win on name clash.
inline PlanarDiagram lookup_knot(const std::string& name, const std::string& corpus_path = "") {
    if (!corpus_path.empty()) {
        auto extra = parse_corpus_file(corpus_path);
        auto it = extra.find(name);
        if (it != extra.end()) return it->second;
    }
    auto it = corpus().find(name);
    if (it == corpus().end()) throw PreconditionError("unknown knot name: " + name);
    return it->second;
}

}  // namespace skein
