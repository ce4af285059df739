#ifndef SIEVELAB_POLYGONS_HPP
#define SIEVELAB_POLYGONS_HPP

// Edge systems of the polygon models and enumeration of (multi)dissections.
//
// Vertices of P_m are 0..m-1 clockwise. For the centrally symmetric families
// the labels 1..n, 1bar..nbar of P_2n map to a -> a-1 and abar -> n+a-1, so
// the antipode of vertex v is v+n. Edge descriptors keep the 1-based labels.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <tuple>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace sievelab {

enum class Family : std::uint8_t { A, C, D, ClassicalA, ClassicalBC, ClassicalD };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::ClassicalA: return "classicalA";
        case Family::ClassicalBC: return "classicalBC";
        case Family::ClassicalD: return "classicalD";
    }
    return "?";
}

inline Family parse_family(const std::string& s) {
    for (Family f : {Family::A, Family::C, Family::D, Family::ClassicalA, Family::ClassicalBC,
                     Family::ClassicalD})
        if (s == family_name(f)) return f;
    throw std::invalid_argument("unknown family '" + s + "'");
}

/// The multidissection family whose edge set a classical family draws from.
constexpr Family base_family(Family f) {
    switch (f) {
        case Family::ClassicalA: return Family::A;
        case Family::ClassicalBC: return Family::C;
        case Family::ClassicalD: return Family::D;
        default: return f;
    }
}

constexpr bool is_classical(Family f) { return base_family(f) != f; }

/// Number of polygon vertices: n for type A, 2n for the symmetric families.
constexpr int polygon_size(Family f, int n) { return base_family(f) == Family::A ? n : 2 * n; }

inline void check_polygon_parameter(Family f, int n) {
    const Family b = base_family(f);
    const int lo = b == Family::A ? 3 : (f == Family::D ? 1 : 2);
    if (n < lo)
        throw std::invalid_argument(std::string("family ") + family_name(f) + " needs n >= " +
                                    std::to_string(lo));
}

struct Chord {
    int u = 0;  // u < v
    int v = 0;

    Chord() = default;
    Chord(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
        if (a == b) throw std::invalid_argument("chord endpoints must be distinct");
    }
    friend auto operator<=>(const Chord&, const Chord&) = default;
};

/// Strict interleaving of endpoints around the circle. Chords sharing an
/// endpoint never cross.
inline bool chords_cross(int /*m*/, const Chord& c1, const Chord& c2) {
    auto inside = [&](int x) { return c1.u < x && x < c1.v; };
    if (c1.u == c2.u || c1.u == c2.v || c1.v == c2.u || c1.v == c2.v) return false;
    return inside(c2.u) != inside(c2.v);
}

enum class Color : std::uint8_t { Solid, Dotted };

inline const char* color_name(Color c) { return c == Color::Solid ? "solid" : "dotted"; }
inline Color other(Color c) { return c == Color::Solid ? Color::Dotted : Color::Solid; }

enum class EdgeKind : std::uint8_t {
    Plain,       // type A edge (i, j), i < j
    Diameter,    // a abar; carries a color in type D
    Segregated,  // ab, abar bbar with a < b
    Integrated,  // a bbar, abar b with a < b
};

inline const char* kind_name(EdgeKind k) {
    switch (k) {
        case EdgeKind::Plain: return "edge";
        case EdgeKind::Diameter: return "diameter";
        case EdgeKind::Segregated: return "segregated";
        case EdgeKind::Integrated: return "integrated";
    }
    return "?";
}

/// One edge of a family's edge system, in 1-based labels. The defaulted
/// ordering (kind, a, b, color) is the canonical edge order.
struct Edge {
    EdgeKind kind = EdgeKind::Plain;
    int a = 0;
    int b = 0;
    Color color = Color::Solid;

    static Edge plain(int i, int j) { return {EdgeKind::Plain, std::min(i, j), std::max(i, j), Color::Solid}; }
    static Edge diameter(int a, Color c = Color::Solid) { return {EdgeKind::Diameter, a, 0, c}; }
    static Edge segregated(int a, int b) { return {EdgeKind::Segregated, std::min(a, b), std::max(a, b), Color::Solid}; }
    static Edge integrated(int a, int b) { return {EdgeKind::Integrated, std::min(a, b), std::max(a, b), Color::Solid}; }

    bool is_diameter() const { return kind == EdgeKind::Diameter; }
    bool is_cs_pair() const { return kind == EdgeKind::Segregated || kind == EdgeKind::Integrated; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string vertex_label(Family f, int n, int v) {
    if (base_family(f) == Family::A) return std::to_string(v + 1);
    return v < n ? std::to_string(v + 1) : std::to_string(v - n + 1) + "bar";
}

inline std::string edge_label(Family f, const Edge& e) {
    switch (e.kind) {
        case EdgeKind::Plain: return std::to_string(e.a) + "-" + std::to_string(e.b);
        case EdgeKind::Diameter:
            return base_family(f) == Family::D
                       ? "diam(" + std::to_string(e.a) + "," + color_name(e.color) + ")"
                       : "diam(" + std::to_string(e.a) + ")";
        case EdgeKind::Segregated: return "seg(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
        case EdgeKind::Integrated: return "int(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
    }
    return "?";
}

inline bool is_valid_edge(Family f, int n, const Edge& e) {
    switch (base_family(f)) {
        case Family::A:
            return e.kind == EdgeKind::Plain && 1 <= e.a && e.a < e.b && e.b <= n;
        case Family::C:
            if (e.kind == EdgeKind::Diameter) return 1 <= e.a && e.a <= n && e.color == Color::Solid;
            return e.is_cs_pair() && 1 <= e.a && e.a < e.b && e.b <= n;
        case Family::D:
            if (e.kind == EdgeKind::Diameter) return 1 <= e.a && e.a <= n;
            return e.is_cs_pair() && 1 <= e.a && e.a < e.b && e.b <= n;
        default: return false;
    }
}

/// Constituent chord(s) of an edge: one chord for type A edges and
/// diameters, two for a centrally symmetric pair.
inline std::vector<Chord> edge_chords(Family f, int n, const Edge& e) {
    if (!is_valid_edge(f, n, e)) throw std::invalid_argument("edge not valid for family/n");
    const int a = e.a - 1;
    const int b = e.b - 1;
    switch (e.kind) {
        case EdgeKind::Plain: return {Chord(a, b)};
        case EdgeKind::Diameter: return {Chord(a, a + n)};
        case EdgeKind::Segregated: return {Chord(a, b), Chord(a + n, b + n)};
        case EdgeKind::Integrated: return {Chord(a, b + n), Chord(a + n, b)};
    }
    return {};
}

/// Inverse of edge_chords on a single chord: the edge containing it.
inline Edge edge_from_chord(Family f, int n, const Chord& c, Color color = Color::Solid) {
    if (base_family(f) == Family::A) return Edge::plain(c.u + 1, c.v + 1);
    const int m = 2 * n;
    if (c.u < 0 || c.v >= m) throw std::invalid_argument("chord out of range");
    if (c.v - c.u == n) return Edge::diameter(c.u + 1, base_family(f) == Family::D ? color : Color::Solid);
    const bool ubar = c.u >= n;
    const bool vbar = c.v >= n;
    const int lu = (ubar ? c.u - n : c.u) + 1;
    const int lv = (vbar ? c.v - n : c.v) + 1;
    if (ubar == vbar) return Edge::segregated(lu, lv);
    return Edge::integrated(lu, lv);
}

/// Circular length of the shorter arc spanned by a chord of P_m.
inline int chord_span(int m, const Chord& c) { return std::min(c.v - c.u, m - (c.v - c.u)); }

inline bool is_boundary_edge(Family f, int n, const Edge& e) {
    const int m = polygon_size(f, n);
    for (const Chord& c : edge_chords(f, n, e))
        if (chord_span(m, c) != 1) return false;
    return true;
}

/// Crossing of edges. Type D exempts distinct diameters of the same color
/// and identical diameters of different colors; the digon has no crossings.
/// An edge never crosses itself.
inline bool edges_cross(Family f, int n, const Edge& e1, const Edge& e2) {
    if (e1 == e2) return false;
    if (base_family(f) == Family::D) {
        if (n == 1) return false;
        if (e1.is_diameter() && e2.is_diameter()) return e1.a != e2.a && e1.color != e2.color;
    }
    const int m = polygon_size(f, n);
    for (const Chord& c1 : edge_chords(f, n, e1))
        for (const Chord& c2 : edge_chords(f, n, e2))
            if (chords_cross(m, c1, c2)) return true;
    return false;
}

/// Contribution of one copy of an edge to the edge count. Type D weighs
/// centrally symmetric pairs 2; every other case weighs 1.
inline int edge_weight(Family f, const Edge& e) {
    if (f == Family::D && e.is_cs_pair()) return 2;
    return 1;
}

/// The full edge set of a family in canonical order. Classical families
/// drop boundary edges.
inline std::vector<Edge> all_edges(Family f, int n) {
    check_polygon_parameter(f, n);
    std::vector<Edge> out;
    const Family b = base_family(f);
    if (b == Family::A) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) out.push_back(Edge::plain(i, j));
    } else {
        for (int a = 1; a <= n; ++a) {
            out.push_back(Edge::diameter(a, Color::Solid));
            if (b == Family::D) out.push_back(Edge::diameter(a, Color::Dotted));
        }
        for (int a = 1; a <= n; ++a)
            for (int c = a + 1; c <= n; ++c) out.push_back(Edge::segregated(a, c));
        for (int a = 1; a <= n; ++a)
            for (int c = a + 1; c <= n; ++c) out.push_back(Edge::integrated(a, c));
    }
    if (is_classical(f) && !(b == Family::D && n == 1)) {
        std::erase_if(out, [&](const Edge& e) { return is_boundary_edge(f, n, e); });
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// A family-tagged multiset of pairwise noncrossing edges. Support entries
/// always have positive multiplicity.
class Multidissection {
public:
    using Support = std::map<Edge, int>;

    Multidissection() = default;
    Multidissection(Family f, int n) : family_(f), n_(n) {}
    Multidissection(Family f, int n, Support s) : family_(f), n_(n) {
        for (const auto& [e, m] : s) add(e, m);
    }

    Family family() const { return family_; }
    int n() const { return n_; }
    const Support& support() const { return support_; }
    bool empty() const { return support_.empty(); }

    int multiplicity(const Edge& e) const {
        auto it = support_.find(e);
        return it == support_.end() ? 0 : it->second;
    }

    void add(const Edge& e, int m = 1) {
        if (m < 0) throw std::invalid_argument("negative multiplicity");
        if (m == 0) return;
        if (!is_valid_edge(family_, n_, e)) throw std::invalid_argument("edge not valid for family/n");
        support_[e] += m;
    }

    int edge_count() const {
        int k = 0;
        for (const auto& [e, m] : support_) k += edge_weight(family_, e) * m;
        return k;
    }

    bool is_noncrossing() const {
        for (auto i = support_.begin(); i != support_.end(); ++i)
            for (auto j = std::next(i); j != support_.end(); ++j)
                if (edges_cross(family_, n_, i->first, j->first)) return false;
        return true;
    }

    friend bool operator==(const Multidissection& x, const Multidissection& y) {
        return x.family_ == y.family_ && x.n_ == y.n_ && x.support_ == y.support_;
    }
    friend bool operator<(const Multidissection& x, const Multidissection& y) {
        return std::tie(x.family_, x.n_, x.support_) < std::tie(y.family_, y.n_, y.support_);
    }

private:
    Family family_ = Family::A;
    int n_ = 0;
    Support support_;
};

/// Backtracking over a fixed edge list: every assignment of multiplicities
/// (at most max_mult per edge; 0 means unbounded) with pairwise noncrossing
/// support and total weight exactly `target`. Weights must be positive.
/// Visits solutions in a deterministic order.
inline void for_each_weighted_multiset(
    const std::vector<int>& weights, const std::vector<std::vector<char>>& crosses, int target,
    int max_mult, const std::function<void(const std::vector<int>&)>& visit) {
    const std::size_t count = weights.size();
    std::vector<int> mult(count, 0);
    std::vector<int> blocked(count, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
        if (remaining == 0) {
            visit(mult);
            return;
        }
        if (i == count) return;
        rec(i + 1, remaining);
        if (blocked[i] > 0) return;
        const int cap = max_mult > 0 ? max_mult : remaining / weights[i];
        if (cap < 1 || weights[i] > remaining) return;
        for (std::size_t j = i + 1; j < count; ++j)
            if (crosses[i][j]) ++blocked[j];
        for (int m = 1; m <= cap && m * weights[i] <= remaining; ++m) {
            mult[i] = m;
            rec(i + 1, remaining - m * weights[i]);
        }
        mult[i] = 0;
        for (std::size_t j = i + 1; j < count; ++j)
            if (crosses[i][j]) --blocked[j];
    };
    if (target < 0) return;
    rec(0, target);
}

inline std::vector<std::vector<char>> crossing_matrix(Family f, int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<char>> x(edges.size(), std::vector<char>(edges.size(), 0));
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            x[i][j] = x[j][i] = edges_cross(f, n, edges[i], edges[j]) ? 1 : 0;
    return x;
}

/// All k-edge (multi)dissections of a family. Multidissection families allow
/// any multiplicity; classical families use 0/1 multiplicities, exclude
/// boundary edges and count every edge (including a centrally symmetric
/// pair) once.
inline std::vector<Multidissection> enumerate(Family f, int n, int k) {
    const std::vector<Edge> edges = all_edges(f, n);
    std::vector<int> weights;
    weights.reserve(edges.size());
    for (const Edge& e : edges) weights.push_back(edge_weight(f, e));
    const auto crosses = crossing_matrix(f, n, edges);
    std::vector<Multidissection> out;
    for_each_weighted_multiset(weights, crosses, k, is_classical(f) ? 1 : 0,
                               [&](const std::vector<int>& mult) {
                                   Multidissection md(f, n);
                                   for (std::size_t i = 0; i < mult.size(); ++i)
                                       if (mult[i]) md.add(edges[i], mult[i]);
                                   out.push_back(std::move(md));
                               });
    return out;
}

inline std::vector<Multidissection> enumerate_multidissections(Family f, int n, int k) {
    if (is_classical(f)) throw std::invalid_argument("enumerate_multidissections: use A, C or D");
    return enumerate(f, n, k);
}

inline std::vector<Multidissection> enumerate_classical(Family f, int n, int k) {
    if (!is_classical(f)) throw std::invalid_argument("enumerate_classical: use a classical family");
    return enumerate(f, n, k);
}

inline nlohmann::ordered_json to_json(Family f, const Edge& e) {
    nlohmann::ordered_json j;
    j["kind"] = kind_name(e.kind);
    j["a"] = e.a;
    if (e.kind != EdgeKind::Diameter) j["b"] = e.b;
    if (base_family(f) == Family::D && e.is_diameter()) j["color"] = color_name(e.color);
    j["label"] = edge_label(f, e);
    return j;
}

inline nlohmann::ordered_json to_json(const Multidissection& md) {
    nlohmann::ordered_json j;
    j["family"] = family_name(md.family());
    j["n"] = md.n();
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const auto& [e, m] : md.support()) {
        auto ej = to_json(md.family(), e);
        ej["multiplicity"] = m;
        edges.push_back(std::move(ej));
    }
    j["edges"] = std::move(edges);
    return j;
}

inline std::string to_string(const Multidissection& md) {
    std::string s = "{";
    bool first = true;
    for (const auto& [e, m] : md.support()) {
        if (!first) s += ", ";
        first = false;
        s += edge_label(md.family(), e);
        if (m > 1) s += "^" + std::to_string(m);
    }
    return s + "}";
}

}  // namespace sievelab

#endif  // SIEVELAB_POLYGONS_HPP
