#pragma once
// Quivers, paths and linear combinations of parallel paths (relations).
//
// Path arrows are stored in traversal order: arrows[0] is traversed first,
// so src(path) = src(arrows[0]) and tgt(path) = tgt(arrows.back()).
// As linear maps paths compose right-to-left: the algebra product g*f
// means "f first", i.e. g*f corresponds to concat(f, g).

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tubular/matrix.hpp"

namespace tubular {

struct NotAdmissible : std::runtime_error {
    explicit NotAdmissible(const std::string& w) : std::runtime_error("NotAdmissible: " + w) {}
};
struct NotFiniteDimensional : std::runtime_error {
    explicit NotFiniteDimensional(const std::string& w)
        : std::runtime_error("NotFiniteDimensional: " + w) {}
};
struct BadInput : std::runtime_error {
    explicit BadInput(const std::string& w) : std::runtime_error("BadInput: " + w) {}
};

struct Arrow {
    std::string label;
    int src = -1, tgt = -1;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int vertex_id(const std::string& name) const {
        for (int i = 0; i < int(vertices.size()); ++i)
            if (vertices[i] == name) return i;
        throw BadInput("unknown vertex: " + name);
    }

    int arrow_id(const std::string& label) const {
        for (int i = 0; i < int(arrows.size()); ++i)
            if (arrows[i].label == label) return i;
        throw BadInput("unknown arrow: " + label);
    }

    Quiver opposite() const {
        Quiver q;
        q.vertices = vertices;
        for (const auto& a : arrows) q.arrows.push_back({a.label, a.tgt, a.src});
        return q;
    }
};

struct Path {
    int start = -1;            // source vertex (used when arrows is empty)
    std::vector<int> arrows;   // arrow ids in traversal order

    int length() const { return int(arrows.size()); }

    int src(const Quiver& q) const {
        return arrows.empty() ? start : q.arrows[arrows[0]].src;
    }
    int tgt(const Quiver& q) const {
        return arrows.empty() ? start : q.arrows[arrows.back()].tgt;
    }

    bool operator<(const Path& o) const {
        if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
        if (arrows != o.arrows) return arrows < o.arrows;
        int a = arrows.empty() ? start : -1;
        int b = o.arrows.empty() ? o.start : -1;
        return a < b;
    }
    bool operator==(const Path& o) const {
        if (arrows != o.arrows) return false;
        return !arrows.empty() || start == o.start;
    }

    std::string str(const Quiver& q) const {
        if (arrows.empty()) return "e_" + q.vertices[start];
        std::string s;
        for (size_t i = 0; i < arrows.size(); ++i) {
            if (i) s += ".";
            s += q.arrows[arrows[i]].label;
        }
        return s;
    }
};

// Traverse p first, then q.  Requires tgt(p) == src(q).
inline Path concat(const Quiver& quiv, const Path& p, const Path& q) {
    if (p.tgt(quiv) != q.src(quiv)) throw BadInput("non-composable paths");
    Path r;
    r.start = p.src(quiv);
    r.arrows = p.arrows;
    r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
    return r;
}

struct Relation {
    std::vector<std::pair<Q, Path>> terms;
};

// Parse a path from arrow labels given in word order (leftmost applied last),
// i.e. "a.b" denotes a∘b: traverse b first.  This matches the usual notation
// for compositions in relations.
inline Path path_from_word(const Quiver& q, const std::vector<std::string>& word) {
    if (word.empty()) throw BadInput("empty path word");
    Path p;
    p.arrows.reserve(word.size());
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        p.arrows.push_back(q.arrow_id(*it));
    for (size_t i = 0; i + 1 < p.arrows.size(); ++i)
        if (q.arrows[p.arrows[i]].tgt != q.arrows[p.arrows[i + 1]].src)
            throw BadInput("non-composable word");
    p.start = q.arrows[p.arrows[0]].src;
    return p;
}

inline Path reverse_path(const Quiver& qop, const Path& p, const Quiver& q) {
    Path r;
    r.start = p.tgt(q);
    r.arrows.assign(p.arrows.rbegin(), p.arrows.rend());
    return r;
}

}  // namespace tubular
