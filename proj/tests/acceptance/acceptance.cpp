// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sievelab/sievelab.hpp"

using namespace sievelab;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail << "first failure: " << what << "; ";
            pass = false;
        }
    }
};

bool csp_range(Outcome& o, Theorem t, int n_lo, int n_hi, const std::function<int(int)>& k_hi,
               std::optional<ClassicalVariant> variant = std::nullopt) {
    long instances = 0;
    for (int n = n_lo; n <= n_hi; ++n)
        for (int k = 0; k <= k_hi(n); ++k) {
            const auto r = verify(make_instance(t, n, k, std::nullopt, variant.value_or(ClassicalVariant::Printed)));
            o.require(r.csp_holds, std::string(theorem_name(t)) + " n=" + std::to_string(n) + " k=" + std::to_string(k));
            ++instances;
        }
    o.detail << theorem_name(t) << ": " << instances << " instances; ";
    return o.pass;
}

// Independent brute force over subsets of diagonals of a convex m-gon.
long count_diagonal_sets(int m, int size) {
    std::vector<std::pair<int, int>> diag;
    for (int u = 0; u < m; ++u)
        for (int v = u + 2; v < m; ++v)
            if (!(u == 0 && v == m - 1)) diag.emplace_back(u, v);
    auto cross = [](std::pair<int, int> a, std::pair<int, int> b) {
        return (a.first < b.first && b.first < a.second && a.second < b.second) ||
               (b.first < a.first && a.first < b.second && b.second < a.second);
    };
    long count = 0;
    const std::size_t N = diag.size();
    for (unsigned long mask = 0; mask < (1UL << N); ++mask) {
        if (__builtin_popcountl(mask) != size) continue;
        bool ok = true;
        for (std::size_t i = 0; i < N && ok; ++i)
            for (std::size_t j = i + 1; j < N && ok; ++j)
                if ((mask >> i & 1) && (mask >> j & 1) && cross(diag[i], diag[j])) ok = false;
        count += ok;
    }
    return count;
}

Outcome criterion1() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    csp_range(o, Theorem::TypeA, 3, 8, [](int) { return 4; });
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < 60.0, "runtime " + std::to_string(secs) + " s exceeds 60 s");
    return o;
}

Outcome criterion2() {
    Outcome o;
    csp_range(o, Theorem::TypeC, 2, 6, [](int) { return 4; });
    return o;
}

Outcome criterion3() {
    Outcome o;
    for (int n = 2; n <= 5; ++n)
        for (int k = 0; k <= 5; ++k) {
            const auto r = verify(make_instance(Theorem::TypeD, n, k));
            o.require(r.checks.size() == static_cast<std::size_t>(2 * n), "d range at n=" + std::to_string(n));
            o.require(r.csp_holds, "thm4.6 n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    o.detail << "24 instances, d = 1..2n; ";
    return o;
}

Outcome criterion4() {
    Outcome o;
    csp_range(o, Theorem::ClassicalA, 4, 8, [](int n) { return n - 3; });
    csp_range(o, Theorem::ClassicalD, 2, 4, [](int n) { return n; });
    const auto printed = verify(make_instance(Theorem::ClassicalBC, 2, 1, std::nullopt, ClassicalVariant::Printed));
    const auto& last = printed.checks.back();
    o.require(!printed.csp_holds, "printed type B/C formula unexpectedly holds at (2,1)");
    o.require(last.d == 2 && last.fixed == 2 && last.evaluation.equals(12) && !last.pass,
              "printed type B/C failure is not the 12-vs-2 cardinality mismatch");
    o.detail << "printed B/C at (2,1): X(1)=" << last.evaluation.to_string() << " vs " << last.fixed << " objects; ";
    csp_range(o, Theorem::ClassicalBC, 2, 5, [](int n) { return n - 1; }, ClassicalVariant::Shifted);
    return o;
}

Outcome criterion5() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    for (int n = 3; n <= 5; ++n)
        for (int k = 0; k <= 2; ++k) {
            const auto r = check_basis_A(n, k);
            o.require(r.pass, "basis-A n=" + std::to_string(n) + " k=" + std::to_string(k));
            if (n == 5 && k == 2) {
                o.require(r.expected_dim == 50 && r.rank == 50, "basis-A (5,2) dimension 50");
                o.detail << "basis-A (5,2) rank " << r.rank << "; ";
            }
        }
    for (int n = 2; n <= 3; ++n)
        for (int k = 0; k <= 2; ++k)
            o.require(check_basis_C(n, k).pass, "basis-C n=" + std::to_string(n) + " k=" + std::to_string(k));
    for (int n = 2; n <= 3; ++n)
        for (int k = 0; k <= 3; ++k) {
            const auto r = check_conjecture_D(n, k);
            o.require(r.independent_mod_J && r.spans && r.pass,
                      "conjecture-D n=" + std::to_string(n) + " k=" + std::to_string(k));
            if (n == 3 && k == 3) o.detail << "conjecture-D (3,3) dim " << r.expected_dim << "; ";
        }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < 600.0, "runtime " + std::to_string(secs) + " s exceeds 10 min");
    return o;
}

Outcome criterion6() {
    Outcome o;
    for (int k = 0; k <= 2; ++k) {
        for (int n = 3; n <= 5; ++n) {
            const auto r = verify_equivariance(Family::A, n, k);
            o.require(r.pass && r.exact_count == r.count, "A exact n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
        for (int n = 2; n <= 4; ++n) {
            const auto r = verify_equivariance(Family::C, n, k);
            o.require(r.pass && r.exact_count == r.count, "C exact n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
        for (int n = 2; n <= 4; ++n) {
            const auto r = verify_equivariance(Family::D, n, k);
            o.require(r.pass && r.mod_j_count == r.count, "D mod J n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    }
    int inexact = 0;
    for (int n = 2; n <= 4; ++n)
        for (const Edge& e : all_edges(Family::D, n)) {
            if (!e.is_cs_pair()) continue;
            const auto p = pair_discrepancy(n, e);
            o.require(p.pass, "pair discrepancy for " + edge_label(Family::D, e) + " at n=" + std::to_string(n));
            if (!p.exact) ++inexact;
        }
    o.detail << inexact << " CS pairs differ by a unit times the rotated minor times Delta_{n+1,n+2}; ";
    return o;
}

Outcome criterion7() {
    Outcome o;
    for (int k = 0; k <= 3; ++k)
        for (int n = 1; n <= 6; ++n) {
            const auto t = content_equinumerosity({k, k}, n);
            o.require(t.pass() && t.total_ssyt == t.total_sncr,
                      "contents k=" + std::to_string(k) + " n=" + std::to_string(n));
        }
    return o;
}

Outcome criterion8() {
    Outcome o;
    int divisible = 0, not_divisible = 0;
    for (int n = 1; n <= 12; ++n)
        for (int d = 1; d <= n; ++d) {
            if (n % d) continue;
            for (int k = 0; k <= 8; ++k) {
                o.require(homog_root_of_unity_check(n, d, k).pass,
                          "n=" + std::to_string(n) + " d=" + std::to_string(d) + " k=" + std::to_string(k));
                (k % d == 0 ? divisible : not_divisible)++;
            }
        }
    o.require(divisible > 0 && not_divisible > 0, "both branches exercised");
    o.detail << divisible << " with d|k, " << not_divisible << " with d∤k; ";
    return o;
}

Outcome criterion9() {
    Outcome o;
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= 6; ++k) {
            const BigInt counted(enumerate(Family::D, n, k).size());
            const std::string at = " n=" + std::to_string(n) + " k=" + std::to_string(k);
            o.require(corollary_d_count(n, k) == counted, "parity form" + at);
            o.require(corollary_d_count_schur(n, k) == counted, "Schur form" + at);
        }
    return o;
}

Outcome criterion10() {
    Outcome o;
    int empty_cases = 0;
    for (int n = 1; n <= 5; ++n)
        for (int d = 2; d <= 2 * n; d += 2) {
            if ((2 * n) % d) continue;
            for (int k = 0; k <= 5; ++k) {
                const auto r = fold_bijection_check(n, d, k);
                o.require(r.pass, "fold n=" + std::to_string(n) + " d=" + std::to_string(d) + " k=" + std::to_string(k));
                if (r.target_edges < 0) {
                    ++empty_cases;
                    o.require(r.invariant_count == 0, "non-integer edge count with invariants");
                }
            }
        }
    o.require(empty_cases > 0, "non-integer edge-count case exercised");
    for (int n = 2; n <= 4; ++n)
        for (int d = 1; d <= 2 * n; d += 2)
            for (int k = 0; k <= 4; ++k)
                o.require(odd_power_correspondence(n, d, k).is_bijection,
                          "odd d n=" + std::to_string(n) + " d=" + std::to_string(d) + " k=" + std::to_string(k));
    o.detail << empty_cases << " empty non-integer cases; ";
    return o;
}

Outcome criterion11() {
    Outcome o;
    const long tri = count_diagonal_sets(6, 3);
    const long one = count_diagonal_sets(6, 1);
    o.require(tri == 14 && static_cast<long>(enumerate_classical(Family::ClassicalA, 6, 3).size()) == 14,
              "hexagon triangulations");
    o.require(tri == 8 * 7 * 6 * 5 / (4 * 3 * 2 * 1) / 5, "Catalan formula C_4 = binom(8,4)/5");
    o.require(one == 9 && static_cast<long>(enumerate_classical(Family::ClassicalA, 6, 1).size()) == 6 * 3 / 2,
              "one-diagonal hexagon dissections");
    for (int k = 0; k <= 10; ++k) {
        long brute = 0;
        for (int solid = 0; solid <= k; ++solid) ++brute;  // solid^a dotted^(k-a)
        o.require(brute == k + 1 && static_cast<long>(enumerate(Family::D, 1, k).size()) == k + 1,
                  "digon k=" + std::to_string(k));
    }
    o.detail << "triangulations " << tri << ", one-diagonal " << one << "; ";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"type A multidissection CSP, 3<=n<=8, k<=4, under 60 s", criterion1},
        {"type C multidissection CSP, 2<=n<=6, k<=4", criterion2},
        {"type D multidissection CSP, 2<=n<=5, k<=5, d=1..2n", criterion3},
        {"classical dissections: A and D hold, printed B/C fails at (2,1), shifted B/C holds", criterion4},
        {"basis audits A, C and quotient basis D, under 10 min", criterion5},
        {"rotation equivariance: exact for A and C, modulo J for D", criterion6},
        {"per-content equinumerosity of SSYT and SNCR tableaux", criterion7},
        {"homogeneous polynomial at roots of unity, both branches", criterion8},
        {"D-multidissection count formulas", criterion9},
        {"folding bijection for even powers and odd-power correspondence", criterion10},
        {"sanity constants by brute force", criterion11},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what() << "; ";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failures;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " ("
                  << o.detail.str() << std::fixed << std::setprecision(2) << secs << " s)" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
