#ifndef SIEVELAB_TABLEAUX_HPP
#define SIEVELAB_TABLEAUX_HPP

// Two-row semistandard and seminoncrossing tableaux.

#include <compare>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

#include "polygons.hpp"

namespace sievelab {

struct TwoRowShape {
    int a = 0;
    int b = 0;

    TwoRowShape() = default;
    TwoRowShape(int first, int second) : a(first), b(second) {
        if (b < 0 || a < b) throw std::invalid_argument("TwoRowShape needs a >= b >= 0");
    }
    int size() const { return a + b; }
    int length() const { return (a > 0) + (b > 0); }
    friend auto operator<=>(const TwoRowShape&, const TwoRowShape&) = default;
};

/// Letter multiplicities; trailing zeros are stripped so equal contents
/// compare equal whatever alphabet produced them.
struct ContentVector {
    std::vector<int> counts;

    static ContentVector of(std::vector<int> c) {
        while (!c.empty() && c.back() == 0) c.pop_back();
        return {std::move(c)};
    }
    friend auto operator<=>(const ContentVector&, const ContentVector&) = default;
};

struct TwoRowTableau {
    TwoRowShape shape;
    std::vector<int> top;
    std::vector<int> bottom;

    bool is_semistandard() const {
        if (static_cast<int>(top.size()) != shape.a || static_cast<int>(bottom.size()) != shape.b) return false;
        for (std::size_t i = 0; i < top.size(); ++i)
            if (top[i] < 1 || (i > 0 && top[i - 1] > top[i])) return false;
        for (std::size_t i = 0; i < bottom.size(); ++i)
            if ((i > 0 && bottom[i - 1] > bottom[i]) || bottom[i] <= top[i]) return false;
        return true;
    }

    ContentVector content() const {
        std::vector<int> c;
        for (const auto* row : {&top, &bottom})
            for (int v : *row) {
                if (static_cast<int>(c.size()) < v) c.resize(v, 0);
                ++c[v - 1];
            }
        return ContentVector::of(std::move(c));
    }
    friend bool operator==(const TwoRowTableau&, const TwoRowTableau&) = default;
};

/// Visits every SSYT of the shape with entries <= n, lexicographically by
/// (top row, bottom row).
inline void for_each_ssyt(TwoRowShape shape, int n, const std::function<void(const TwoRowTableau&)>& visit) {
    TwoRowTableau t{shape, std::vector<int>(shape.a), std::vector<int>(shape.b)};
    std::function<void(int)> fill_bottom = [&](int i) {
        if (i == shape.b) {
            visit(t);
            return;
        }
        const int lo = std::max(i > 0 ? t.bottom[i - 1] : 1, t.top[i] + 1);
        for (int v = lo; v <= n; ++v) {
            t.bottom[i] = v;
            fill_bottom(i + 1);
        }
    };
    std::function<void(int)> fill_top = [&](int i) {
        if (i == shape.a) {
            fill_bottom(0);
            return;
        }
        for (int v = i > 0 ? t.top[i - 1] : 1; v <= n; ++v) {
            t.top[i] = v;
            fill_top(i + 1);
        }
    };
    if (n < shape.length()) return;
    fill_top(0);
}

inline std::vector<TwoRowTableau> enumerate_ssyt(TwoRowShape shape, int n) {
    std::vector<TwoRowTableau> out;
    for_each_ssyt(shape, n, [&](const TwoRowTableau& t) { out.push_back(t); });
    return out;
}

/// Rectangular two-row tableau read as a multiset of columns (a < b) that
/// are pairwise noncrossing as intervals. Columns are kept sorted, which is
/// the canonical representative modulo column permutation.
struct SNCTableau {
    std::vector<std::pair<int, int>> columns;

    static bool intervals_cross(const std::pair<int, int>& x, const std::pair<int, int>& y) {
        const auto [a, b] = x;
        const auto [c, d] = y;
        return (a < c && c < b && b < d) || (c < a && a < d && d < b);
    }

    bool is_valid() const {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (columns[i].first >= columns[i].second || columns[i].first < 1) return false;
            if (i > 0 && columns[i - 1] > columns[i]) return false;
            for (std::size_t j = i + 1; j < columns.size(); ++j)
                if (intervals_cross(columns[i], columns[j])) return false;
        }
        return true;
    }

    ContentVector content() const {
        std::vector<int> c;
        for (const auto& [a, b] : columns) {
            if (static_cast<int>(c.size()) < b) c.resize(b, 0);
            ++c[a - 1];
            ++c[b - 1];
        }
        return ContentVector::of(std::move(c));
    }

    std::vector<int> top() const {
        std::vector<int> r;
        for (const auto& col : columns) r.push_back(col.first);
        return r;
    }
    std::vector<int> bottom() const {
        std::vector<int> r;
        for (const auto& col : columns) r.push_back(col.second);
        return r;
    }
    friend auto operator<=>(const SNCTableau&, const SNCTableau&) = default;
};

/// All seminoncrossing tableaux of shape (k, k) with entries <= n.
inline std::vector<SNCTableau> enumerate_sncr(TwoRowShape shape, int n) {
    if (shape.a != shape.b) throw std::invalid_argument("enumerate_sncr: shape must be rectangular (k,k)");
    const int k = shape.a;
    std::vector<std::pair<int, int>> cols;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) cols.emplace_back(a, b);
    std::vector<SNCTableau> out;
    SNCTableau cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(cur.columns.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < cols.size(); ++i) {
            bool ok = true;
            for (const auto& c : cur.columns)
                if (SNCTableau::intervals_cross(c, cols[i])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.columns.push_back(cols[i]);
            rec(i);
            cur.columns.pop_back();
        }
    };
    rec(0);
    return out;
}

/// Edge (i, j) with multiplicity m becomes m copies of the column i over j.
inline SNCTableau multidissection_to_sncr(const Multidissection& f) {
    if (f.family() != Family::A) throw std::invalid_argument("multidissection_to_sncr: family A only");
    SNCTableau t;
    for (const auto& [e, m] : f.support())
        for (int i = 0; i < m; ++i) t.columns.emplace_back(e.a, e.b);
    return t;
}

inline Multidissection sncr_to_multidissection(const SNCTableau& t, int n) {
    if (!t.is_valid()) throw std::invalid_argument("sncr_to_multidissection: columns cross or are malformed");
    Multidissection f(Family::A, n);
    for (const auto& [a, b] : t.columns) f.add(Edge::plain(a, b));
    return f;
}

struct ContentComparison {
    ContentVector content;
    long ssyt = 0;
    long sncr = 0;
};

struct EquinumerosityTable {
    TwoRowShape shape;
    int n = 0;
    std::vector<ContentComparison> rows;
    long total_ssyt = 0;
    long total_sncr = 0;

    bool pass() const {
        for (const auto& r : rows)
            if (r.ssyt != r.sncr) return false;
        return true;
    }
};

/// Per-content counts of semistandard versus seminoncrossing tableaux of a
/// rectangular two-row shape.
inline EquinumerosityTable content_equinumerosity(TwoRowShape shape, int n) {
    std::map<ContentVector, std::pair<long, long>> table;
    for_each_ssyt(shape, n, [&](const TwoRowTableau& t) { ++table[t.content()].first; });
    for (const auto& t : enumerate_sncr(shape, n)) ++table[t.content()].second;
    EquinumerosityTable out{shape, n, {}, 0, 0};
    for (const auto& [c, counts] : table) {
        out.rows.push_back({c, counts.first, counts.second});
        out.total_ssyt += counts.first;
        out.total_sncr += counts.second;
    }
    return out;
}

/// Every prefix has at least as many i's as (i+1)'s, for every i.
inline bool is_yamanouchi(const std::vector<int>& word) {
    std::vector<int> seen;
    for (int w : word) {
        if (w < 1) return false;
        if (static_cast<int>(seen.size()) < w) seen.resize(w, 0);
        ++seen[w - 1];
        if (w > 1 && seen[w - 1] > seen[w - 2]) return false;
    }
    return true;
}

/// Reading word of a standard two-row tableau: letter v contributes 1 if v
/// sits in the top row and 2 if it sits in the bottom row.
inline std::vector<int> row_word(const TwoRowTableau& t) {
    const int total = t.shape.size();
    std::vector<int> w(total, 0);
    for (int v : t.top)
        if (v >= 1 && v <= total) w[v - 1] = 1;
    for (int v : t.bottom)
        if (v >= 1 && v <= total) w[v - 1] = 2;
    return w;
}

inline nlohmann::ordered_json to_json(const TwoRowTableau& t) { return {t.top, t.bottom}; }
inline nlohmann::ordered_json to_json(const SNCTableau& t) { return {t.top(), t.bottom()}; }

}  // namespace sievelab

#endif  // SIEVELAB_TABLEAUX_HPP
