#ifndef SIEVELAB_XPOLY_HPP
#define SIEVELAB_XPOLY_HPP

// Sparse polynomials in the entries x_{r,c} (1 <= r <= N, c in {1,2}) of an
// N x 2 matrix of variables.

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gaussrat.hpp"

namespace sievelab {

/// Exponent vector over 2N variables; variable x_{r,c} has index
/// 2(r-1) + (c-1). Lexicographic comparison of the vectors is the lex term
/// order with x_{1,1} most significant.
struct Monomial {
    std::vector<std::uint16_t> exps;

    explicit Monomial(int nvars = 0) : exps(nvars, 0) {}

    int total_degree() const {
        int d = 0;
        for (auto e : exps) d += e;
        return d;
    }
    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > o.exps[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial r(static_cast<int>(exps.size()));
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] = exps[i] + o.exps[i];
        return r;
    }
    Monomial operator/(const Monomial& o) const {
        Monomial r(static_cast<int>(exps.size()));
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] = exps[i] - o.exps[i];
        return r;
    }
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

inline int var_index(int row, int col) { return 2 * (row - 1) + (col - 1); }

template <class Coeff>
class MultiPoly {
public:
    using Terms = std::map<Monomial, Coeff>;

    MultiPoly() = default;
    explicit MultiPoly(int rows) : rows_(rows) {}
    MultiPoly(int rows, const Coeff& c) : rows_(rows) { add_term(Monomial(2 * rows), c); }

    static MultiPoly variable(int rows, int r, int c) {
        if (r < 1 || r > rows || c < 1 || c > 2) throw std::invalid_argument("variable out of range");
        Monomial m(2 * rows);
        m.exps[var_index(r, c)] = 1;
        MultiPoly p(rows);
        p.add_term(m, Coeff(1));
        return p;
    }

    int rows() const { return rows_; }
    int nvars() const { return 2 * rows_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Monomial& m, const Coeff& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    /// this += factor * mono * o
    void add_scaled(const MultiPoly& o, const Coeff& factor, const Monomial* mono = nullptr) {
        check_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(mono ? m * *mono : m, c * factor);
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(const MultiPoly& a) {
        MultiPoly r(a.rows_);
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_ring(b);
        MultiPoly r(a.rows_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    friend MultiPoly operator*(const Coeff& s, const MultiPoly& a) {
        MultiPoly r(a.rows_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, s * c);
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.rows_ == b.rows_ && a.terms_ == b.terms_;
    }

    MultiPoly pow(int k) const {
        MultiPoly r(rows_, Coeff(1));
        for (int i = 0; i < k; ++i) r *= *this;
        return r;
    }

    /// Common total degree of all terms, or -1 when inhomogeneous or zero.
    int homogeneous_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) {
            const int md = m.total_degree();
            if (d == -1) d = md;
            else if (d != md) return -1;
        }
        return d;
    }
    int max_total_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    /// Same polynomial viewed in a ring with more rows.
    MultiPoly embedded(int rows) const {
        if (rows < rows_) throw std::invalid_argument("embedded: cannot shrink the ring");
        MultiPoly r(rows);
        for (const auto& [m, c] : terms_) {
            Monomial mm(2 * rows);
            std::copy(m.exps.begin(), m.exps.end(), mm.exps.begin());
            r.terms_.emplace(std::move(mm), c);
        }
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c.to_string();
            for (std::size_t v = 0; v < m.exps.size(); ++v) {
                if (!m.exps[v]) continue;
                os << "*x" << (v / 2 + 1) << (v % 2 + 1);
                if (m.exps[v] > 1) os << "^" << m.exps[v];
            }
        }
        return os.str();
    }

private:
    void check_ring(const MultiPoly& o) const {
        if (o.rows_ != rows_) throw std::invalid_argument("polynomials live in different rings");
    }

    int rows_ = 0;
    Terms terms_;
};

using XPoly = MultiPoly<GaussRat>;

/// Quotient and remainder of p by a single divisor in the lex term order.
/// A single polynomial is a Groebner basis of the ideal it generates, so the
/// remainder vanishes exactly when the divisor divides p.
template <class Coeff>
std::pair<MultiPoly<Coeff>, MultiPoly<Coeff>> divide(const MultiPoly<Coeff>& p, const MultiPoly<Coeff>& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    const auto& [lead_m, lead_c] = *g.terms().rbegin();
    MultiPoly<Coeff> work = p, quot(p.rows()), rem(p.rows());
    while (!work.is_zero()) {
        const auto [m, c] = *work.terms().rbegin();
        if (lead_m.divides(m)) {
            const Monomial qm = m / lead_m;
            const Coeff qc = c / lead_c;
            quot.add_term(qm, qc);
            work.add_scaled(g, -qc, &qm);
        } else {
            rem.add_term(m, c);
            work.add_term(m, -c);
        }
    }
    return {std::move(quot), std::move(rem)};
}

/// Linear substitution x_v -> images[v].
template <class Coeff>
class Substitution {
public:
    Substitution() = default;
    explicit Substitution(std::vector<MultiPoly<Coeff>> images) : images_(std::move(images)) {}

    static Substitution identity(int rows) {
        std::vector<MultiPoly<Coeff>> im;
        for (int r = 1; r <= rows; ++r)
            for (int c = 1; c <= 2; ++c) im.push_back(MultiPoly<Coeff>::variable(rows, r, c));
        return Substitution(std::move(im));
    }

    const std::vector<MultiPoly<Coeff>>& images() const { return images_; }
    const MultiPoly<Coeff>& image(int r, int c) const { return images_.at(var_index(r, c)); }

    MultiPoly<Coeff> apply(const MultiPoly<Coeff>& p) const {
        if (static_cast<int>(images_.size()) != p.nvars()) throw std::invalid_argument("substitution/ring size mismatch");
        MultiPoly<Coeff> out(p.rows());
        std::map<std::pair<int, int>, MultiPoly<Coeff>> powers;
        auto power = [&](int v, int e) -> const MultiPoly<Coeff>& {
            auto it = powers.find({v, 1});
            if (it == powers.end()) it = powers.emplace(std::make_pair(v, 1), images_[v]).first;
            for (int j = 2; j <= e; ++j) {
                auto next = powers.find({v, j});
                if (next == powers.end()) next = powers.emplace(std::make_pair(v, j), it->second * images_[v]).first;
                it = next;
            }
            return it->second;
        };
        for (const auto& [m, c] : p.terms()) {
            MultiPoly<Coeff> term(p.rows(), c);
            for (std::size_t v = 0; v < m.exps.size(); ++v)
                if (m.exps[v]) term = term * power(static_cast<int>(v), m.exps[v]);
            out += term;
        }
        return out;
    }

    /// (this after other): x -> this(other(x))
    Substitution after(const Substitution& other) const {
        std::vector<MultiPoly<Coeff>> im;
        for (const auto& img : other.images_) im.push_back(apply(img));
        return Substitution(std::move(im));
    }

    Substitution power(int k) const {
        Substitution r = identity(static_cast<int>(images_.size()) / 2);
        for (int i = 0; i < k; ++i) r = after(r);
        return r;
    }

    friend bool operator==(const Substitution& a, const Substitution& b) { return a.images_ == b.images_; }

private:
    std::vector<MultiPoly<Coeff>> images_;
};

using VarSubstitution = Substitution<GaussRat>;

}  // namespace sievelab

#endif  // SIEVELAB_XPOLY_HPP
