#ifndef SIEVELAB_ACTIONS_HPP
#define SIEVELAB_ACTIONS_HPP

// Rotation actions on edges and multidissections, fixed-point counting, the
// folding bijection for even powers of D-rotation and the diameter-balanced
// correspondence for odd powers.

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polygons.hpp"

namespace sievelab {

/// Cyclic action generated by a rotation. `generator_step` is the number of
/// vertex steps of P_m per application of the generator; it is 1 for every
/// family except classicalBC, where it defaults to 2 (rotation by 2 pi / n).
/// For type D each vertex step also swaps diameter colors.
struct RotationAction {
    Family family = Family::A;
    int n = 3;
    int generator_step = 1;

    static constexpr int kDefaultBcStep = 2;

    static RotationAction standard(Family f, int n, int bc_step = kDefaultBcStep) {
        return {f, n, f == Family::ClassicalBC ? bc_step : 1};
    }

    /// Order of the acting cyclic group: 2n for the D families, n otherwise.
    int declared_order() const { return base_family(family) == Family::D ? 2 * n : n; }

    Edge apply(const Edge& e, long power = 1) const {
        const int m = polygon_size(family, n);
        const long steps = power * generator_step;
        const int shift = static_cast<int>(((steps % m) + m) % m);
        const auto chords = edge_chords(family, n, e);
        const Chord& c = chords.front();
        const Chord moved((c.u + shift) % m, (c.v + shift) % m);
        Color color = e.color;
        if (base_family(family) == Family::D && e.is_diameter() && (steps % 2 != 0)) color = other(color);
        return edge_from_chord(family, n, moved, color);
    }

    Multidissection apply(const Multidissection& md, long power = 1) const {
        Multidissection out(md.family(), md.n());
        for (const auto& [e, mult] : md.support()) out.add(apply(e, power), mult);
        return out;
    }

    bool fixes(const Multidissection& md, long power) const { return apply(md, power) == md; }

    /// Smallest positive power of the generator acting as the identity on
    /// the whole edge set.
    int exact_order() const {
        const auto edges = all_edges(family, n);
        for (int p = 1;; ++p) {
            bool identity = true;
            for (const Edge& e : edges)
                if (apply(e, p) != e) {
                    identity = false;
                    break;
                }
            if (identity) return p;
        }
    }
};

/// One application of the generator to an edge.
inline Edge rotate_edge(Family f, int n, const Edge& e) { return RotationAction::standard(f, n).apply(e); }

inline Multidissection rotate(const Multidissection& md, long power = 1) {
    return RotationAction::standard(md.family(), md.n()).apply(md, power);
}

/// Exact order of the generator on the edge set: n for A and C, and for D
/// n when n is even, 2n when n is odd.
inline int action_order(Family f, int n) { return RotationAction::standard(f, n).exact_order(); }

inline long count_fixed(const RotationAction& action, const std::vector<Multidissection>& xs, long d) {
    return std::count_if(xs.begin(), xs.end(), [&](const Multidissection& md) { return action.fixes(md, d); });
}

/// Number of k-edge objects fixed by the d-th power of the generator, by
/// filtering the full enumeration.
inline long count_fixed(Family f, int n, int k, long d, int bc_step = RotationAction::kDefaultBcStep) {
    const auto xs = enumerate(f, n, k);
    return count_fixed(RotationAction::standard(f, n, bc_step), xs, d);
}

/// Polygon parameter of the folding target: d when d | n (the target is
/// P_2d) and d/2 otherwise (the target is P_d).
inline int fold_target_n(int n, int d) {
    if (d <= 0 || d % 2 != 0 || (2 * n) % d != 0)
        throw std::invalid_argument("fold: d must be an even divisor of 2n");
    return n % d == 0 ? d : d / 2;
}

/// Edge count of the folded image of a k-edge multidissection, or -1 when
/// k * target_n / n is not an integer (the target set is then empty).
inline int folded_edge_count(int n, int d, int k) {
    const int np = fold_target_n(n, d);
    return (k * np) % n == 0 ? k * np / n : -1;
}

namespace detail {

// Image of one orbit of D-edges of P_2n (represented by `e`) under folding
// onto P_2np.
inline std::vector<Edge> fold_orbit_image(int n, int np, const Edge& e) {
    const int m = 2 * n;
    const int target_m = 2 * np;
    if (e.is_diameter()) return {Edge::diameter((e.a - 1) % np + 1, e.color)};
    const Chord c = edge_chords(Family::D, n, e).front();
    const int s = chord_span(m, c);
    const int x = (c.v - c.u == s) ? c.u : c.v;  // chord = {x, x + s mod m}
    if (s < np) {
        const Chord folded(x % target_m, (x + s) % target_m);
        return {edge_from_chord(Family::D, np, folded)};
    }
    if (s == np && np < n) {
        const int idx = x % np + 1;
        return {Edge::diameter(idx, Color::Solid), Edge::diameter(idx, Color::Dotted)};
    }
    throw std::invalid_argument("fold: edge cannot belong to an invariant multidissection");
}

inline std::set<Edge> lift_chords(int n, int np, int x, int s) {
    const int m = 2 * n;
    std::set<Edge> out;
    for (int j = 0; j < m / np; ++j) {
        const int u = (x + j * np) % m;
        const int v = (x + s + j * np) % m;
        out.insert(edge_from_chord(Family::D, n, Chord(u, v)));
    }
    return out;
}

}  // namespace detail

/// Folding map for an r^d-invariant D-multidissection of P_2n with d even.
/// Each orbit of support edges under r^d maps to one D-edge of the smaller
/// polygon, except inscribed polygons of span-np chords, which map to a
/// solid and a dotted copy of one diameter.
inline Multidissection fold(int n, int d, const Multidissection& f) {
    const int np = fold_target_n(n, d);
    if (f.family() != Family::D || f.n() != n) throw std::invalid_argument("fold: expected a type D multidissection of P_2n");
    const RotationAction r = RotationAction::standard(Family::D, n);
    if (!r.fixes(f, d)) throw std::invalid_argument("fold: multidissection is not r^d-invariant");
    Multidissection out(Family::D, np);
    std::set<Edge> seen;
    for (const auto& [e, mult] : f.support()) {
        if (seen.count(e)) continue;
        Edge cur = e;
        do {
            seen.insert(cur);
            cur = r.apply(cur, d);
        } while (cur != e);
        for (const Edge& img : detail::fold_orbit_image(n, np, e)) out.add(img, mult);
    }
    return out;
}

/// Inverse of fold. Diameters of both colors first release
/// min(solid, dotted) copies of the inscribed polygon; every remaining edge
/// lifts to its orbit.
inline Multidissection unfold(int n, int d, const Multidissection& g) {
    const int np = fold_target_n(n, d);
    if (g.family() != Family::D || g.n() != np) throw std::invalid_argument("unfold: multidissection lives on the wrong polygon");
    std::map<Edge, int> rest(g.support().begin(), g.support().end());
    Multidissection out(Family::D, n);
    if (np < n) {
        for (int i = 1; i <= np; ++i) {
            const Edge solid = Edge::diameter(i, Color::Solid);
            const Edge dotted = Edge::diameter(i, Color::Dotted);
            const int t = std::min(rest.count(solid) ? rest[solid] : 0, rest.count(dotted) ? rest[dotted] : 0);
            if (t == 0) continue;
            for (const Edge& e : detail::lift_chords(n, np, i - 1, np)) out.add(e, t);
            if ((rest[solid] -= t) == 0) rest.erase(solid);
            if ((rest[dotted] -= t) == 0) rest.erase(dotted);
        }
    }
    const int target_m = 2 * np;
    for (const auto& [e, mult] : rest) {
        if (e.is_diameter()) {
            for (int p = e.a - 1; p < n; p += np) out.add(Edge::diameter(p + 1, e.color), mult);
            continue;
        }
        const Chord c = edge_chords(Family::D, np, e).front();
        const int s = chord_span(target_m, c);
        const int x = (c.v - c.u == s) ? c.u : c.v;
        for (const Edge& lifted : detail::lift_chords(n, np, x, s)) out.add(lifted, mult);
    }
    return out;
}

struct FoldBijectionReport {
    int n = 0;
    int d = 0;
    int k = 0;
    int target_n = 0;
    int target_edges = -1;  // -1: non-integer edge count, target set empty
    std::size_t invariant_count = 0;
    std::size_t target_count = 0;
    bool images_in_target = true;  // fold lands on target_edges-edge objects of P_{2 target_n}
    bool injective = true;
    bool round_trip = true;        // unfold(fold(f)) == f and fold(unfold(g)) == g
    bool pass = false;
};

/// Checks fold and unfold are inverse bijections between the r^d-invariant
/// k-edge D-multidissections of P_2n and the D-multidissections of the
/// folded polygon with the mapped edge count.
inline FoldBijectionReport fold_bijection_check(int n, int d, int k) {
    FoldBijectionReport r;
    r.n = n;
    r.d = d;
    r.k = k;
    r.target_n = fold_target_n(n, d);
    r.target_edges = folded_edge_count(n, d, k);
    const RotationAction action = RotationAction::standard(Family::D, n);
    std::set<Multidissection> images;
    for (const auto& f : enumerate(Family::D, n, k)) {
        if (!action.fixes(f, d)) continue;
        ++r.invariant_count;
        const Multidissection g = fold(n, d, f);
        if (g.edge_count() != r.target_edges || !g.is_noncrossing()) r.images_in_target = false;
        if (!images.insert(g).second) r.injective = false;
        if (!(unfold(n, d, g) == f)) r.round_trip = false;
    }
    if (r.target_edges >= 0) {
        const auto targets = enumerate(Family::D, r.target_n, r.target_edges);
        r.target_count = targets.size();
        for (const auto& g : targets) {
            const Multidissection f = unfold(n, d, g);
            if (!(fold(n, d, f) == g) || f.edge_count() != k || !f.is_noncrossing()) r.round_trip = false;
        }
    }
    r.pass = r.images_in_target && r.injective && r.round_trip && r.invariant_count == r.target_count &&
             images.size() == r.target_count;
    return r;
}

inline nlohmann::ordered_json to_json(const FoldBijectionReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["d"] = r.d;
    j["k"] = r.k;
    j["target_n"] = r.target_n;
    j["target_edges"] = r.target_edges < 0 ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.target_edges);
    j["invariant_count"] = r.invariant_count;
    j["target_count"] = r.target_count;
    j["images_in_target"] = r.images_in_target;
    j["injective"] = r.injective;
    j["round_trip"] = r.round_trip;
    j["pass"] = r.pass;
    return j;
}

/// A matched pair of the odd-power correspondence.
struct OddPowerPair {
    Multidissection d_side;
    Multidissection c_side;
};

struct OddPowerWitness {
    int n = 0;
    long d = 0;
    int k = 0;
    std::vector<OddPowerPair> pairs;
    std::size_t d_side_count = 0;
    std::size_t c_side_count = 0;
    bool all_balanced = true;  // every invariant D-side object has balanced diameters
    bool is_bijection = false;
};

/// D-multidissection with balanced diameters (equal solid and dotted
/// multiplicity on each diameter) -> C-multidissection with half the edges.
inline Multidissection balanced_to_c(const Multidissection& f) {
    Multidissection out(Family::C, f.n());
    for (const auto& [e, mult] : f.support()) {
        if (e.is_cs_pair()) {
            out.add(e, mult);
        } else if (e.color == Color::Solid) {
            if (f.multiplicity(Edge::diameter(e.a, Color::Dotted)) != mult)
                throw std::invalid_argument("balanced_to_c: unbalanced diameter");
            out.add(Edge::diameter(e.a), mult);
        } else if (f.multiplicity(Edge::diameter(e.a, Color::Solid)) != mult) {
            throw std::invalid_argument("balanced_to_c: unbalanced diameter");
        }
    }
    return out;
}

inline bool is_diameter_balanced(const Multidissection& f) {
    for (const auto& [e, mult] : f.support())
        if (e.is_diameter() && f.multiplicity(Edge::diameter(e.a, other(e.color))) != mult) return false;
    return true;
}

/// For odd d: pairs every r^d-invariant k-edge D-multidissection of P_2n
/// with a rotation^d-invariant (k/2)-edge C-multidissection, and checks
/// the pairing is a bijection. Both sides are empty when k is odd.
inline OddPowerWitness odd_power_correspondence(int n, long d, int k) {
    if (d % 2 == 0) throw std::invalid_argument("odd_power_correspondence: d must be odd");
    OddPowerWitness w{n, d, k, {}, 0, 0, true, false};
    const RotationAction rd = RotationAction::standard(Family::D, n);
    std::vector<Multidissection> d_side;
    for (auto& f : enumerate(Family::D, n, k))
        if (rd.fixes(f, d)) d_side.push_back(std::move(f));
    std::set<Multidissection> c_side;
    if (k % 2 == 0) {
        const RotationAction rc = RotationAction::standard(Family::C, n);
        for (auto& g : enumerate(Family::C, n, k / 2))
            if (rc.fixes(g, d)) c_side.insert(std::move(g));
    }
    w.d_side_count = d_side.size();
    w.c_side_count = c_side.size();
    std::set<Multidissection> image;
    for (const auto& f : d_side) {
        if (!is_diameter_balanced(f)) {
            w.all_balanced = false;
            continue;
        }
        Multidissection g = balanced_to_c(f);
        image.insert(g);
        w.pairs.push_back({f, std::move(g)});
    }
    w.is_bijection = w.all_balanced && image.size() == d_side.size() && image == c_side;
    return w;
}

inline nlohmann::ordered_json to_json(const OddPowerWitness& w) {
    nlohmann::ordered_json j;
    j["n"] = w.n;
    j["d"] = w.d;
    j["k"] = w.k;
    j["d_side_count"] = w.d_side_count;
    j["c_side_count"] = w.c_side_count;
    j["all_balanced"] = w.all_balanced;
    j["is_bijection"] = w.is_bijection;
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    for (const auto& p : w.pairs) pairs.push_back({to_json(p.d_side), to_json(p.c_side)});
    j["pairs"] = std::move(pairs);
    return j;
}

}  // namespace sievelab

#endif  // SIEVELAB_ACTIONS_HPP
