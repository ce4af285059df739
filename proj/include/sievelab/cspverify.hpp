#ifndef SIEVELAB_CSPVERIFY_HPP
#define SIEVELAB_CSPVERIFY_HPP

// Pairs fixed-point counts of a rotation action with evaluations of a
// polynomial at roots of unity.

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "actions.hpp"
#include "polygons.hpp"
#include "qseries.hpp"
#include "symfunc.hpp"

namespace sievelab {

enum class Theorem { TypeA, TypeC, TypeD, ClassicalA, ClassicalBC, ClassicalD, OrbitPoly };

inline const char* theorem_name(Theorem t) {
    switch (t) {
        case Theorem::TypeA: return "thm2.5";
        case Theorem::TypeC: return "thm3.4";
        case Theorem::TypeD: return "thm4.6";
        case Theorem::ClassicalA: return "thm1.1-1";
        case Theorem::ClassicalBC: return "thm1.1-2";
        case Theorem::ClassicalD: return "thm1.1-3";
        case Theorem::OrbitPoly: return "orbit-poly";
    }
    return "?";
}

inline Theorem parse_theorem(const std::string& s) {
    for (Theorem t : {Theorem::TypeA, Theorem::TypeC, Theorem::TypeD, Theorem::ClassicalA, Theorem::ClassicalBC,
                      Theorem::ClassicalD, Theorem::OrbitPoly})
        if (s == theorem_name(t)) return t;
    throw std::invalid_argument("unknown theorem '" + s + "'");
}

/// Family a theorem is about; orbit-poly takes the family from the caller.
inline std::optional<Family> theorem_family(Theorem t) {
    switch (t) {
        case Theorem::TypeA: return Family::A;
        case Theorem::TypeC: return Family::C;
        case Theorem::TypeD: return Family::D;
        case Theorem::ClassicalA: return Family::ClassicalA;
        case Theorem::ClassicalBC: return Family::ClassicalBC;
        case Theorem::ClassicalD: return Family::ClassicalD;
        case Theorem::OrbitPoly: return std::nullopt;
    }
    return std::nullopt;
}

struct CspInstance {
    Theorem theorem = Theorem::OrbitPoly;
    Family family = Family::A;
    int n = 0;
    int k = 0;
    IntLaurentPoly polynomial;
    int group_order = 0;
    std::optional<ClassicalVariant> variant;  // set only for the classicalBC product formula
    int generator_step = 1;
};

struct CspCheck {
    long d = 0;
    long fixed = 0;
    RootEvaluation evaluation;
    bool pass = false;
};

struct CspReport {
    CspInstance instance;
    std::vector<CspCheck> checks;
    bool csp_holds = false;
};

inline int declared_group_order(Family f, int n) { return base_family(f) == Family::D ? 2 * n : n; }

/// Fixed-point counts for every power 1..group_order against exact
/// evaluations at the corresponding roots of unity. Failed checks are
/// collected, never thrown.
inline CspReport verify(const CspInstance& inst) {
    if (inst.group_order != declared_group_order(inst.family, inst.n))
        throw std::invalid_argument("verify: group order does not match the family");
    CspReport report{inst, {}, true};
    const auto xs = enumerate(inst.family, inst.n, inst.k);
    const RotationAction action = RotationAction::standard(inst.family, inst.n, inst.generator_step);
    for (long d = 1; d <= inst.group_order; ++d) {
        CspCheck c{d, count_fixed(action, xs, d), eval_at_unity_root(inst.polynomial, inst.group_order, d), false};
        c.pass = c.evaluation.equals(BigInt(c.fixed));
        report.csp_holds = report.csp_holds && c.pass;
        report.checks.push_back(std::move(c));
    }
    return report;
}

/// sum_i a_i q^i over 0 <= i < group order, a_i = number of orbits whose
/// stabilizer order divides i.
inline IntLaurentPoly orbit_polynomial(Family f, int n, int k, int bc_step = RotationAction::kDefaultBcStep) {
    const RotationAction action = RotationAction::standard(f, n, bc_step);
    const int order = declared_group_order(f, n);
    std::set<Multidissection> seen;
    std::map<int, long> stabilizer_orders;  // stabilizer order -> number of orbits
    for (const auto& x : enumerate(f, n, k)) {
        if (seen.count(x)) continue;
        int size = 0;
        Multidissection cur = x;
        do {
            seen.insert(cur);
            ++size;
            cur = action.apply(cur, 1);
        } while (!(cur == x));
        ++stabilizer_orders[order / size];
    }
    IntLaurentPoly out;
    for (int i = 0; i < order; ++i) {
        long a = 0;
        for (const auto& [stab, count] : stabilizer_orders)
            if (i % stab == 0) a += count;
        out.add_term(i, a);
    }
    return out;
}

/// The sieving polynomial a theorem attaches to (n, k).
inline IntLaurentPoly theorem_polynomial(Theorem t, int n, int k, ClassicalVariant variant = ClassicalVariant::Printed) {
    switch (t) {
        case Theorem::TypeA: return build_X_typeA(n, k);
        case Theorem::TypeC: return build_X_typeC(n, k);
        case Theorem::TypeD: return build_X_typeD(n, k);
        case Theorem::ClassicalA: return build_X_classical(1, n, k);
        case Theorem::ClassicalBC: return build_X_classical(2, n, k, variant);
        case Theorem::ClassicalD: return build_X_classical(3, n, k);
        case Theorem::OrbitPoly: break;
    }
    throw std::invalid_argument("theorem_polynomial: orbit-poly needs a family");
}

inline CspInstance make_instance(Theorem t, int n, int k, std::optional<Family> family = std::nullopt,
                                 ClassicalVariant variant = ClassicalVariant::Printed,
                                 int bc_step = RotationAction::kDefaultBcStep) {
    CspInstance inst;
    inst.theorem = t;
    const auto tf = theorem_family(t);
    if (!tf && !family) throw std::invalid_argument("make_instance: orbit-poly needs a family");
    if (tf && family && *tf != *family) throw std::invalid_argument("make_instance: family does not match theorem");
    inst.family = tf ? *tf : *family;
    check_polygon_parameter(inst.family, n);
    inst.n = n;
    inst.k = k;
    inst.group_order = declared_group_order(inst.family, n);
    inst.generator_step = inst.family == Family::ClassicalBC ? bc_step : 1;
    if (t == Theorem::ClassicalBC) inst.variant = variant;
    inst.polynomial = t == Theorem::OrbitPoly ? orbit_polynomial(inst.family, n, k, bc_step)
                                              : theorem_polynomial(t, n, k, variant);
    return inst;
}

// ---------------------------------------------------------------------------
// Fixed points of D-rotation through folding

struct FoldingCheck {
    long d = 0;
    long fixed = 0;
    long expected = 0;
    std::string target;  // what `expected` counts
    bool pass = false;
};

struct FoldingConsistencyReport {
    int n = 0;
    int k = 0;
    std::vector<FoldingCheck> checks;
    bool pass = false;
};

/// For every divisor d of 2n: even d compares fixed points of r^d with the
/// number of D-multidissections of the folded polygon; odd d compares with
/// the rotation^d-invariant C-multidissections with k/2 edges (0 for odd k).
inline FoldingConsistencyReport verify_folding_consistency(int n, int k) {
    if (n < 2) throw std::invalid_argument("verify_folding_consistency: n >= 2 required");
    FoldingConsistencyReport r{n, k, {}, true};
    const auto xs = enumerate(Family::D, n, k);
    const RotationAction action = RotationAction::standard(Family::D, n);
    for (long d = 1; d <= 2L * n; ++d) {
        if ((2 * n) % d != 0) continue;
        FoldingCheck c;
        c.d = d;
        c.fixed = count_fixed(action, xs, d);
        std::ostringstream target;
        if (d % 2 == 0) {
            const int np = fold_target_n(n, static_cast<int>(d));
            const int m = folded_edge_count(n, static_cast<int>(d), k);
            c.expected = m < 0 ? 0 : static_cast<long>(enumerate(Family::D, np, m).size());
            target << "D-multidissections of P_" << 2 * np << " with ";
            if (m < 0) target << "a non-integer edge count (empty)";
            else target << m << " edges";
        } else if (k % 2 == 1) {
            c.expected = 0;
            target << "none (odd k)";
        } else {
            c.expected = count_fixed(Family::C, n, k / 2, d);
            target << "rotation^" << d << "-invariant C-multidissections of P_" << 2 * n << " with " << k / 2
                   << " edges";
        }
        c.target = target.str();
        c.pass = c.fixed == c.expected;
        r.pass = r.pass && c.pass;
        r.checks.push_back(std::move(c));
    }
    return r;
}

/// h_k(1, q, ..., q^{n-1}) at q = zeta_n^{n/d}, a primitive d-th root of
/// unity, against h_{k/d}(1^{n/d}) when d | k and 0 otherwise.
struct RootOfUnityHomogCheck {
    int n = 0;
    int d = 0;
    int k = 0;
    RootEvaluation lhs;
    BigInt rhs;
    bool pass = false;
};

inline RootOfUnityHomogCheck homog_root_of_unity_check(int n, int d, int k) {
    if (d < 1 || n % d != 0) throw std::invalid_argument("homog_root_of_unity_check: need d | n");
    RootOfUnityHomogCheck c{n, d, k, eval_at_unity_root(homog_eval(k, principal_point(n)), n, n / d), 0, false};
    c.rhs = k % d == 0 ? homog_eval(k / d, ones_point(n / d)).eval_at_one() : BigInt(0);
    c.pass = c.lhs.equals(c.rhs);
    return c;
}

// ---------------------------------------------------------------------------
// Serialization

inline nlohmann::ordered_json to_json(const CspReport& r) {
    const auto& in = r.instance;
    nlohmann::ordered_json j;
    j["family"] = family_name(in.family);
    j["n"] = in.n;
    j["k"] = in.k;
    j["variant"] = in.variant ? nlohmann::ordered_json(variant_name(*in.variant)) : nlohmann::ordered_json(nullptr);
    j["group_order"] = in.group_order;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"d", c.d}, {"fixed", c.fixed}, {"eval", to_json(c.evaluation)}, {"pass", c.pass}});
    j["checks"] = std::move(checks);
    j["csp_holds"] = r.csp_holds;
    j["theorem"] = theorem_name(in.theorem);
    if (in.family == Family::ClassicalBC) j["generator_step"] = in.generator_step;
    j["polynomial"] = in.polynomial.to_string();
    return j;
}

inline const char* csp_csv_header() { return "family,n,k,variant,group_order,d,fixed,eval,pass"; }

inline std::string to_csv_rows(const CspReport& r) {
    const auto& in = r.instance;
    std::ostringstream os;
    for (const auto& c : r.checks) {
        std::string ev = c.evaluation.to_string();
        if (ev.find(',') != std::string::npos || ev.find(' ') != std::string::npos) ev = "\"" + ev + "\"";
        os << family_name(in.family) << ',' << in.n << ',' << in.k << ','
           << (in.variant ? variant_name(*in.variant) : "") << ',' << in.group_order << ',' << c.d << ','
           << c.fixed << ',' << ev << ',' << (c.pass ? "true" : "false") << '\n';
    }
    return os.str();
}

inline nlohmann::ordered_json to_json(const FoldingConsistencyReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["k"] = r.k;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks)
        checks.push_back(
            {{"d", c.d}, {"fixed", c.fixed}, {"expected", c.expected}, {"target", c.target}, {"pass", c.pass}});
    j["checks"] = std::move(checks);
    j["pass"] = r.pass;
    return j;
}

}  // namespace sievelab

#endif  // SIEVELAB_CSPVERIFY_HPP
