#ifndef SIEVELAB_LINALG_HPP
#define SIEVELAB_LINALG_HPP

// Exact incremental row echelon form over sparse polynomials, with the
// combination of inserted polynomials behind every pivot row kept so that
// dependencies and coordinates can be reported explicitly.

#include <map>
#include <optional>
#include <vector>

#include "xpoly.hpp"

namespace sievelab {

template <class Coeff>
class EchelonBasis {
public:
    using Poly = MultiPoly<Coeff>;
    using Combination = std::map<std::size_t, Coeff>;  // inserted index -> coefficient

    /// Inserts the next polynomial (index = number of earlier inserts).
    /// Returns nullopt when it is independent of everything inserted so far;
    /// otherwise a nonzero combination of inserted polynomials that vanishes.
    std::optional<Combination> insert(const Poly& p) {
        const std::size_t idx = inserted_++;
        Poly residual = p;
        Combination combo{{idx, Coeff(1)}};
        reduce(residual, combo, true);
        if (residual.is_zero()) return combo;
        const auto [lead, lead_c] = *residual.terms().begin();
        const Coeff inv = Coeff(1) / lead_c;
        Row row{inv * residual, {}};
        for (auto& [i, c] : combo) row.combo[i] = c * inv;
        pivots_.emplace(lead, rows_.size());
        rows_.push_back(std::move(row));
        return std::nullopt;
    }

    std::size_t rank() const { return rows_.size(); }
    std::size_t inserted() const { return inserted_; }

    /// Coefficients expressing p through the inserted polynomials, or
    /// nullopt when p is outside their span.
    std::optional<Combination> coordinates(const Poly& p) const {
        Poly residual = p;
        Combination combo;
        reduce(residual, combo, false);
        if (!residual.is_zero()) return std::nullopt;
        return combo;
    }

private:
    struct Row {
        Poly poly;  // leading (least) coefficient normalized to 1
        Combination combo;
    };

    // Clears pivot monomials from the residual, least monomial first, and
    // stops at the first monomial without a pivot. With `subtract` the
    // combination tracks residual = sum combo * inserted; otherwise it tracks
    // p - residual = sum combo * inserted.
    void reduce(Poly& residual, Combination& combo, bool subtract) const {
        auto it = residual.terms().begin();
        while (it != residual.terms().end()) {
            auto piv = pivots_.find(it->first);
            if (piv == pivots_.end()) return;
            const Row& row = rows_[piv->second];
            const Coeff factor = it->second;
            residual.add_scaled(row.poly, -factor);
            for (const auto& [i, c] : row.combo) {
                auto& slot = combo[i];
                if (subtract) slot -= factor * c;
                else slot += factor * c;
                if (slot.is_zero()) combo.erase(i);
            }
            it = residual.terms().begin();
        }
    }

    std::map<Monomial, std::size_t> pivots_;
    std::vector<Row> rows_;
    std::size_t inserted_ = 0;
};

template <class Coeff>
std::size_t rank(const std::vector<MultiPoly<Coeff>>& polys) {
    EchelonBasis<Coeff> basis;
    for (const auto& p : polys) basis.insert(p);
    return basis.rank();
}

}  // namespace sievelab

#endif  // SIEVELAB_LINALG_HPP
