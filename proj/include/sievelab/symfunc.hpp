#ifndef SIEVELAB_SYMFUNC_HPP
#define SIEVELAB_SYMFUNC_HPP

// Two-row Schur and homogeneous symmetric functions evaluated at exact
// points, and the sieving polynomials built from them.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qseries.hpp"
#include "tableaux.hpp"

namespace sievelab {

/// Evaluation point: one exact Laurent polynomial per variable.
using SpecPoint = std::vector<IntLaurentPoly>;

/// (1, q^step, q^{2 step}, ..., q^{(n-1) step})
inline SpecPoint principal_point(int n, int step = 1) {
    SpecPoint p;
    for (int i = 0; i < n; ++i) p.push_back(IntLaurentPoly::monomial(static_cast<std::int64_t>(i) * step));
    return p;
}

/// (1, 1, ..., 1) with n entries.
inline SpecPoint ones_point(int n) { return SpecPoint(n, IntLaurentPoly(1)); }

inline SpecPoint integer_point(const std::vector<long>& values) {
    SpecPoint p;
    for (long v : values) p.emplace_back(v);
    return p;
}

namespace detail {
inline IntLaurentPoly point_power(const SpecPoint& point, const ContentVector& c) {
    IntLaurentPoly r(1);
    for (std::size_t i = 0; i < c.counts.size(); ++i)
        if (c.counts[i]) r *= point[i].pow(static_cast<unsigned>(c.counts[i]));
    return r;
}
}  // namespace detail

/// s_shape(point) as the content-weighted sum over SSYT with entries
/// bounded by the number of point values.
inline IntLaurentPoly schur_eval(TwoRowShape shape, const SpecPoint& point) {
    std::map<ContentVector, long> by_content;
    for_each_ssyt(shape, static_cast<int>(point.size()),
                  [&](const TwoRowTableau& t) { ++by_content[t.content()]; });
    IntLaurentPoly sum;
    for (const auto& [c, count] : by_content) sum += detail::point_power(point, c) * IntLaurentPoly(count);
    return sum;
}

/// h_k(point): sum over weakly increasing index k-tuples, via the
/// recursion on the last variable.
inline IntLaurentPoly homog_eval(int k, const SpecPoint& point) {
    if (k < 0) return {};
    // table[j] = h_j of the variables processed so far
    std::vector<IntLaurentPoly> table(k + 1);
    table[0] = IntLaurentPoly(1);
    for (const auto& x : point)
        for (int j = 1; j <= k; ++j) table[j] += x * table[j - 1];
    return table[k];
}

/// s_(a,b) = h_a h_b - h_{a+1} h_{b-1}
inline IntLaurentPoly jacobi_trudi(TwoRowShape shape, const SpecPoint& point) {
    return homog_eval(shape.a, point) * homog_eval(shape.b, point) -
           homog_eval(shape.a + 1, point) * homog_eval(shape.b - 1, point);
}

inline bool jacobi_trudi_check(TwoRowShape shape, const SpecPoint& point) {
    return schur_eval(shape, point) == jacobi_trudi(shape, point);
}

/// q^{-k} s_(k,k)(1, q, ..., q^{n-1})
inline IntLaurentPoly build_X_typeA(int n, int k) {
    if (n < 3) throw std::invalid_argument("build_X_typeA: n >= 3 required");
    if (k < 0) throw std::invalid_argument("build_X_typeA: k >= 0 required");
    IntLaurentPoly x = schur_eval({k, k}, principal_point(n)).shifted(-k);
    if (!x.is_polynomial()) throw ArithmeticError("build_X_typeA: negative exponent after shift");
    return x;
}

/// h_(k,k)(1, q, ..., q^{n-1}) = h_k(1, ..., q^{n-1})^2
inline IntLaurentPoly build_X_typeC(int n, int k) {
    if (n < 2) throw std::invalid_argument("build_X_typeC: n >= 2 required");
    if (k < 0) throw std::invalid_argument("build_X_typeC: k >= 0 required");
    const IntLaurentPoly h = homog_eval(k, principal_point(n));
    return h * h;
}

/// sum_l s_(k-l,l)(1, q^2, ..., q^{2(n-1)}) h_{k-2l}(1, q^n)
inline IntLaurentPoly build_X_typeD(int n, int k) {
    if (n < 2) throw std::invalid_argument("build_X_typeD: n >= 2 required");
    if (k < 0) throw std::invalid_argument("build_X_typeD: k >= 0 required");
    const SpecPoint y = principal_point(n, 2);
    const SpecPoint z{IntLaurentPoly(1), IntLaurentPoly::monomial(n)};
    IntLaurentPoly x;
    for (int l = 0; 2 * l <= k; ++l) x += schur_eval({k - l, l}, y) * homog_eval(k - 2 * l, z);
    return x;
}

enum class ClassicalVariant { Printed, Shifted };

inline const char* variant_name(ClassicalVariant v) { return v == ClassicalVariant::Printed ? "printed" : "shifted"; }

inline ClassicalVariant parse_variant(const std::string& s) {
    if (s == "printed") return ClassicalVariant::Printed;
    if (s == "shifted") return ClassicalVariant::Shifted;
    throw std::invalid_argument("unknown variant '" + s + "'");
}

/// Product formulas for the classical dissection sieves.
///  part 1: [n+k]_q^{-1} [n+k, k+1]_q [n-3, k]_q
///  part 2: [n+k+1, k]_{q^2} [n+1, k]_{q^2} as printed, or with the
///          arguments lowered to (n+k-1, n-1) in the shifted variant
///  part 3: the four-term sum in q^2 with q^n factors on terms 2 and 4
/// Binomials with r outside [0, m] are zero. The variant only affects part 2.
inline IntLaurentPoly build_X_classical(int part, int n, int k, ClassicalVariant variant = ClassicalVariant::Printed) {
    if (k < 0) throw std::invalid_argument("build_X_classical: k >= 0 required");
    auto qb2 = [](long m, long r) { return q_binomial_or_zero(m, r).substitute_power(2); };
    switch (part) {
        case 1: {
            if (n < 3) throw std::invalid_argument("build_X_classical part 1: n >= 3 required");
            const IntLaurentPoly num = q_binomial_or_zero(n + k, k + 1) * q_binomial_or_zero(n - 3, k);
            return divide_exact(num, q_int(n + k));
        }
        case 2: {
            if (n < 2) throw std::invalid_argument("build_X_classical part 2: n >= 2 required");
            if (variant == ClassicalVariant::Printed) return qb2(n + k + 1, k) * qb2(n + 1, k);
            return qb2(n + k - 1, k) * qb2(n - 1, k);
        }
        case 3: {
            if (n < 2) throw std::invalid_argument("build_X_classical part 3: n >= 2 required");
            const IntLaurentPoly qn = IntLaurentPoly::monomial(n);
            return qb2(n + k - 1, k) * qb2(n - 1, k) + qb2(n + k - 1, k) * qb2(n - 2, k - 1) * qn +
                   qb2(n + k - 1, k) * qb2(n - 2, k - 2) + qb2(n + k - 2, k) * qb2(n - 2, k - 2) * qn;
        }
        default: throw std::invalid_argument("build_X_classical: part must be 1, 2 or 3");
    }
}

/// Number of k-edge D-multidissections of P_2n as the symmetric-function
/// sum with h_(a,b)(1^n) = h_a(1^n) h_b(1^n); the odd and even k forms
/// differ only in the middle term.
inline BigInt corollary_d_count(int n, int k) {
    const SpecPoint ones = ones_point(n);
    auto h = [&](int j) { return homog_eval(j, ones).eval_at_one(); };
    BigInt total = 0;
    if (k % 2 == 1) {
        for (int l = 0; l <= (k - 1) / 2; ++l) total += 2 * h(k - l) * h(l);
    } else {
        for (int l = 0; l <= k / 2 - 1; ++l) total += 2 * h(k - l) * h(l);
        total += h(k / 2) * h(k / 2);
    }
    return total;
}

/// The same count as sum_l (k - 2l + 1) s_(k-l,l)(1^n).
inline BigInt corollary_d_count_schur(int n, int k) {
    BigInt total = 0;
    for (int l = 0; 2 * l <= k; ++l) total += (k - 2 * l + 1) * schur_eval({k - l, l}, ones_point(n)).eval_at_one();
    return total;
}

}  // namespace sievelab

#endif  // SIEVELAB_SYMFUNC_HPP
