#ifndef SIEVELAB_QSERIES_HPP
#define SIEVELAB_QSERIES_HPP

// Exact q-analogue arithmetic: integer Laurent polynomials in q, Gaussian
// binomials, cyclotomic polynomials and evaluation at roots of unity.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace sievelab {

using BigInt = mpz_class;

/// Raised when an operation that must be exact (a polynomial quotient, a
/// shift that must land in nonnegative degrees) is not.
class ArithmeticError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Integer-coefficient Laurent polynomial in q. Canonical: no zero
/// coefficient is ever stored, so equal polynomials compare equal.
class IntLaurentPoly {
public:
    using Terms = std::map<std::int64_t, BigInt>;

    IntLaurentPoly() = default;
    IntLaurentPoly(long c) { add_term(0, BigInt(c)); }  // NOLINT(implicit)
    IntLaurentPoly(const BigInt& c) { add_term(0, c); }  // NOLINT(implicit)

    static IntLaurentPoly monomial(std::int64_t e, const BigInt& c = 1) {
        IntLaurentPoly p;
        p.add_term(e, c);
        return p;
    }
    static IntLaurentPoly q() { return monomial(1); }

    /// Coefficients listed from q^0 upward.
    static IntLaurentPoly from_coeffs(std::initializer_list<long> coeffs) {
        IntLaurentPoly p;
        std::int64_t e = 0;
        for (long c : coeffs) p.add_term(e++, BigInt(c));
        return p;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }
    BigInt constant_term() const { return coeff(0); }

    BigInt coeff(std::int64_t e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? BigInt(0) : it->second;
    }
    std::int64_t min_degree() const {
        if (is_zero()) throw std::domain_error("min_degree of zero polynomial");
        return terms_.begin()->first;
    }
    std::int64_t degree() const {
        if (is_zero()) throw std::domain_error("degree of zero polynomial");
        return terms_.rbegin()->first;
    }

    void add_term(std::int64_t e, const BigInt& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    IntLaurentPoly& operator+=(const IntLaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    IntLaurentPoly& operator-=(const IntLaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    IntLaurentPoly& operator*=(const IntLaurentPoly& o) { return *this = *this * o; }

    friend IntLaurentPoly operator+(IntLaurentPoly a, const IntLaurentPoly& b) { return a += b; }
    friend IntLaurentPoly operator-(IntLaurentPoly a, const IntLaurentPoly& b) { return a -= b; }
    friend IntLaurentPoly operator-(const IntLaurentPoly& a) {
        IntLaurentPoly r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend IntLaurentPoly operator*(const IntLaurentPoly& a, const IntLaurentPoly& b) {
        IntLaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    friend bool operator==(const IntLaurentPoly& a, const IntLaurentPoly& b) {
        return a.terms_ == b.terms_;
    }

    IntLaurentPoly pow(unsigned k) const {
        IntLaurentPoly result(1), base = *this;
        while (k) {
            if (k & 1u) result *= base;
            base *= base;
            k >>= 1u;
        }
        return result;
    }

    /// q^s * p
    IntLaurentPoly shifted(std::int64_t s) const {
        IntLaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + s, c);
        return r;
    }

    /// p(q^t); t may be negative.
    IntLaurentPoly substitute_power(std::int64_t t) const {
        if (t == 0) return IntLaurentPoly(eval_at_one());
        IntLaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e * t, c);
        return r;
    }

    BigInt eval_at_one() const {
        BigInt s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    BigInt eval_at(long x) const {
        if (x == 0) return coeff(0);
        BigInt s = 0;
        for (const auto& [e, c] : terms_) {
            if (e >= 0) {
                BigInt xp;
                mpz_ui_pow_ui(xp.get_mpz_t(), static_cast<unsigned long>(x < 0 ? -x : x),
                              static_cast<unsigned long>(e));
                if (x < 0 && (e & 1)) xp = -xp;
                s += c * xp;
            } else {
                throw ArithmeticError("integer evaluation of a negative power");
            }
        }
        return s;
    }

    std::complex<double> eval_complex(std::complex<double> z) const {
        std::complex<double> s = 0;
        for (const auto& [e, c] : terms_) s += c.get_d() * std::pow(z, static_cast<double>(e));
        return s;
    }

    bool is_polynomial() const { return is_zero() || min_degree() >= 0; }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            BigInt a = abs(c);
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (e == 0) {
                os << a;
                continue;
            }
            if (a != 1) os << a << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const IntLaurentPoly& p) {
        return os << p.to_string();
    }

private:
    Terms terms_;
};

/// Exact quotient a / b; throws ArithmeticError unless b divides a.
inline IntLaurentPoly divide_exact(const IntLaurentPoly& a, const IntLaurentPoly& b) {
    if (b.is_zero()) throw ArithmeticError("division by zero polynomial");
    if (a.is_zero()) return {};
    const std::int64_t shift = a.min_degree() - b.min_degree();
    IntLaurentPoly rem = a.shifted(-a.min_degree());
    const IntLaurentPoly den = b.shifted(-b.min_degree());
    const std::int64_t dd = den.degree();
    const BigInt lead = den.coeff(dd);
    IntLaurentPoly quot;
    while (!rem.is_zero() && rem.degree() >= dd) {
        const std::int64_t e = rem.degree();
        const BigInt c = rem.coeff(e);
        if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t()))
            throw ArithmeticError("non-exact polynomial division");
        const IntLaurentPoly step = IntLaurentPoly::monomial(e - dd, c / lead);
        quot += step;
        rem -= step * den;
    }
    if (!rem.is_zero()) throw ArithmeticError("non-exact polynomial division");
    return quot.shifted(shift);
}

/// [m]_q = 1 + q + ... + q^{m-1}
inline IntLaurentPoly q_int(long m) {
    if (m < 0) throw std::invalid_argument("q_int: negative argument");
    IntLaurentPoly p;
    for (long e = 0; e < m; ++e) p.add_term(e, 1);
    return p;
}

inline IntLaurentPoly q_factorial(long m) {
    if (m < 0) throw std::invalid_argument("q_factorial: negative argument");
    IntLaurentPoly p(1);
    for (long i = 2; i <= m; ++i) p *= q_int(i);
    return p;
}

/// Gaussian binomial [m choose r]_q, computed as an exact quotient of
/// q-factorials. Requires 0 <= r <= m.
inline IntLaurentPoly q_binomial(long m, long r) {
    if (r < 0 || m < 0 || r > m) throw std::invalid_argument("q_binomial: need 0 <= r <= m");
    return divide_exact(q_factorial(m), q_factorial(r) * q_factorial(m - r));
}

/// Same as q_binomial inside its range and 0 outside it (r < 0, r > m or
/// m < 0), which is the convention the product formulas rely on.
inline IntLaurentPoly q_binomial_or_zero(long m, long r) {
    if (m < 0 || r < 0 || r > m) return {};
    return q_binomial(m, r);
}

namespace detail {
struct CyclotomicCache {
    std::mutex mu;
    std::map<long, IntLaurentPoly> table;
};
inline CyclotomicCache& cyclotomic_cache() {
    static CyclotomicCache cache;
    return cache;
}
}  // namespace detail

/// m-th cyclotomic polynomial, by dividing q^m - 1 by Phi_d for the proper
/// divisors d of m. Memoized.
inline IntLaurentPoly cyclotomic(long m) {
    if (m < 1) throw std::invalid_argument("cyclotomic: m must be positive");
    auto& cache = detail::cyclotomic_cache();
    {
        std::lock_guard lock(cache.mu);
        if (auto it = cache.table.find(m); it != cache.table.end()) return it->second;
    }
    IntLaurentPoly num = IntLaurentPoly::monomial(m) - IntLaurentPoly(1);
    IntLaurentPoly den(1);
    for (long d = 1; d < m; ++d)
        if (m % d == 0) den *= cyclotomic(d);
    IntLaurentPoly phi = divide_exact(num, den);
    std::lock_guard lock(cache.mu);
    cache.table.emplace(m, phi);
    return phi;
}

/// Remainder of a polynomial (nonnegative exponents) modulo a monic divisor.
inline IntLaurentPoly reduce_mod_monic(IntLaurentPoly p, const IntLaurentPoly& monic) {
    const std::int64_t dd = monic.degree();
    if (monic.coeff(dd) != 1) throw std::invalid_argument("reduce_mod_monic: divisor not monic");
    if (!p.is_polynomial()) throw ArithmeticError("reduce_mod_monic: negative exponents");
    while (!p.is_zero() && p.degree() >= dd) {
        const std::int64_t e = p.degree();
        const BigInt c = p.coeff(e);
        p -= monic.shifted(e - dd) * IntLaurentPoly(c);
    }
    return p;
}

/// Value of a polynomial at a root of unity. Either an integer, or the
/// nonconstant residue modulo the relevant cyclotomic polynomial.
struct RootEvaluation {
    struct Integer {
        BigInt value;
        friend bool operator==(const Integer&, const Integer&) = default;
    };
    struct NonRational {
        IntLaurentPoly residue;
        long modulus_order;
        friend bool operator==(const NonRational&, const NonRational&) = default;
    };
    std::variant<Integer, NonRational> kind;

    static RootEvaluation integer(BigInt v) { return {Integer{std::move(v)}}; }

    bool is_integer() const { return std::holds_alternative<Integer>(kind); }
    const BigInt& value() const {
        if (!is_integer()) throw std::logic_error("RootEvaluation is not an integer");
        return std::get<Integer>(kind).value;
    }
    bool equals(const BigInt& v) const { return is_integer() && value() == v; }

    std::string to_string() const {
        if (is_integer()) return value().get_str();
        const auto& nr = std::get<NonRational>(kind);
        return nr.residue.to_string() + " mod Phi_" + std::to_string(nr.modulus_order);
    }
    friend bool operator==(const RootEvaluation&, const RootEvaluation&) = default;
};

/// p(zeta^d) with zeta = exp(2 pi i / m). Reduces exponents modulo
/// m' = m / gcd(m, d) (which also absorbs negative exponents) and then
/// modulo Phi_{m'}.
inline RootEvaluation eval_at_unity_root(const IntLaurentPoly& p, long m, long d) {
    if (m < 1) throw std::invalid_argument("eval_at_unity_root: m must be positive");
    if (d < 0) throw std::invalid_argument("eval_at_unity_root: d must be nonnegative");
    const long g = std::gcd(m, d);
    const long mp = m / g;
    const long dp = d / g;
    IntLaurentPoly folded;
    for (const auto& [e, c] : p.terms()) {
        long long r = static_cast<long long>((e % mp) * (dp % mp)) % mp;
        if (r < 0) r += mp;
        folded.add_term(r, c);
    }
    IntLaurentPoly residue = reduce_mod_monic(folded, cyclotomic(mp));
    if (residue.is_constant()) return {RootEvaluation::Integer{residue.constant_term()}};
    return {RootEvaluation::NonRational{residue, mp}};
}

// JSON: {"exponent": "coefficient"} with decimal-string coefficients.
inline nlohmann::ordered_json to_json(const IntLaurentPoly& p) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.get_str();
    return j;
}

inline IntLaurentPoly laurent_from_json(const nlohmann::ordered_json& j) {
    IntLaurentPoly p;
    for (const auto& [key, value] : j.items())
        p.add_term(std::stoll(key), BigInt(value.get<std::string>()));
    return p;
}

inline nlohmann::ordered_json to_json(const RootEvaluation& r) {
    if (r.is_integer()) return r.value().get_str();
    const auto& nr = std::get<RootEvaluation::NonRational>(r.kind);
    return {{"nonrational", {{"residue", to_json(nr.residue)}, {"order", nr.modulus_order}}}};
}

}  // namespace sievelab

#endif  // SIEVELAB_QSERIES_HPP
