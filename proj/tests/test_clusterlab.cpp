#include <gtest/gtest.h>

#include <random>

#include "sievelab/clusterlab.hpp"

using namespace sievelab;

namespace {

XPoly x(int rows, int r, int c) { return xvar(rows, r, c); }
XPoly D(int i, int j, int rows) { return minor(i, j, rows); }
const GaussRat half = GaussRat::fraction(1, 2);

}  // namespace

TEST(GaussRat, FieldArithmetic) {
    const GaussRat i = GaussRat::i();
    EXPECT_EQ(i * i, GaussRat(-1));
    EXPECT_EQ(GaussRat(1) / i, -i);
    EXPECT_EQ((GaussRat(3) + i) / (GaussRat(3) + i), GaussRat(1));
    EXPECT_TRUE((GaussRat(2) - GaussRat(2)).is_zero());
    EXPECT_THROW(GaussRat(1) / GaussRat(0), std::domain_error);
    EXPECT_EQ(GaussRat::fraction(2, 4), half);
}

TEST(Minor, Examples) {
    EXPECT_EQ(D(1, 2, 2), x(2, 1, 1) * x(2, 2, 2) - x(2, 1, 2) * x(2, 2, 1));
    EXPECT_THROW(D(2, 2, 3), std::invalid_argument);
    EXPECT_THROW(D(3, 1, 3), std::invalid_argument);
    EXPECT_TRUE((D(1, 3, 4) * D(2, 4, 4) - D(1, 2, 4) * D(3, 4, 4) - D(1, 4, 4) * D(2, 3, 4)).is_zero());
}

TEST(Minor, PluckerRelations) {
    const int N = 6;
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
            for (int k = j + 1; k <= N; ++k)
                for (int l = k + 1; l <= N; ++l)
                    EXPECT_TRUE((D(i, j, N) * D(k, l, N) - D(i, k, N) * D(j, l, N) + D(i, l, N) * D(j, k, N)).is_zero());
}

TEST(ZPoly, PolygonFigureProduct) {
    Multidissection f(Family::A, 9);
    f.add(Edge::plain(1, 5));
    f.add(Edge::plain(1, 9), 2);
    f.add(Edge::plain(3, 5));
    f.add(Edge::plain(5, 6));
    f.add(Edge::plain(6, 8));
    EXPECT_EQ(z_A(f), D(1, 5, 9) * D(1, 9, 9).pow(2) * D(3, 5, 9) * D(5, 6, 9) * D(6, 8, 9));
}

TEST(ZPoly, TypeCFigureProduct) {
    Multidissection f(Family::C, 4);
    f.add(Edge::integrated(1, 2), 2);
    f.add(Edge::integrated(1, 4));
    f.add(Edge::segregated(2, 4));
    f.add(Edge::diameter(2));
    ASSERT_TRUE(f.is_noncrossing());
    EXPECT_EQ(f.edge_count(), 5);
    const int N = 4;
    const XPoly int12 = half * (x(N, 1, 1) * x(N, 2, 2) + x(N, 1, 2) * x(N, 2, 1));
    const XPoly int14 = half * (x(N, 1, 1) * x(N, 4, 2) + x(N, 1, 2) * x(N, 4, 1));
    const XPoly seg24 = (GaussRat(1) / GaussRat(mpq_class(0), mpq_class(2))) *
                        (x(N, 2, 1) * x(N, 4, 2) - x(N, 2, 2) * x(N, 4, 1));
    const XPoly diam2 = x(N, 2, 1) * x(N, 2, 2);
    EXPECT_EQ(z_C(f), int12.pow(2) * int14 * seg24 * diam2);
}

TEST(ZPoly, TypeDFigureProduct) {
    Multidissection f(Family::D, 4);
    f.add(Edge::segregated(2, 4));
    f.add(Edge::integrated(1, 4), 2);
    f.add(Edge::diameter(2, Color::Solid));
    f.add(Edge::diameter(2, Color::Dotted), 2);
    const int N = 6;
    const XPoly expected = (D(2, 5, N) * D(4, 6, N) + D(2, 4, N)) * (D(1, 5, N) * D(4, 6, N) - D(1, 4, N)).pow(2) *
                           D(2, 5, N) * D(2, 6, N).pow(2);
    EXPECT_EQ(z_D(f), expected);
    EXPECT_EQ(d_degree(z_D(f), 4), 9);
}

TEST(DDegree, Examples) {
    const int n = 3, N = n + 2;
    EXPECT_EQ(d_degree(D(2, n + 1, N), n), 1);
    EXPECT_EQ(d_degree(D(n + 1, n + 2, N), n), 0);
    EXPECT_THROW(d_degree(D(1, 2, N) + D(1, n + 1, N), n), std::invalid_argument);
    EXPECT_THROW(d_degree(XPoly(N), n), std::invalid_argument);
}

TEST(Rank, Examples) {
    EXPECT_EQ(rank(std::vector<XPoly>{D(1, 2, 2)}), 1u);
    std::vector<XPoly> six;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) six.push_back(D(i, j, 4));
    EXPECT_EQ(rank(six), 6u);
    EXPECT_EQ(rank(std::vector<XPoly>{D(1, 2, 2), GaussRat(2) * D(1, 2, 2)}), 1u);
    EXPECT_EQ(rank(std::vector<XPoly>{}), 0u);
}

TEST(Rank, WitnessAndCoordinates) {
    const int N = 4;
    EchelonBasis<GaussRat> b;
    EXPECT_FALSE(b.insert(D(1, 3, N) * D(2, 4, N)));
    EXPECT_FALSE(b.insert(D(1, 2, N) * D(3, 4, N)));
    const auto dep = b.insert(D(1, 4, N) * D(2, 3, N));
    ASSERT_TRUE(dep);
    // The witness combination really vanishes.
    const std::vector<XPoly> inserted{D(1, 3, N) * D(2, 4, N), D(1, 2, N) * D(3, 4, N), D(1, 4, N) * D(2, 3, N)};
    XPoly sum(N);
    for (const auto& [i, c] : *dep) sum += c * inserted[i];
    EXPECT_TRUE(sum.is_zero());
    const auto coords = b.coordinates(GaussRat(3) * inserted[0] - inserted[1]);
    ASSERT_TRUE(coords);
    EXPECT_EQ(coords->at(0), GaussRat(3));
    EXPECT_EQ(coords->at(1), GaussRat(-1));
    EXPECT_FALSE(b.coordinates(x(N, 1, 1)));
}

TEST(Division, QuotientAndRemainder) {
    const int N = 4;
    const XPoly g = D(3, 4, N);
    const XPoly p = g * D(1, 2, N) + x(N, 1, 1);
    auto [q, r] = divide(p, g);
    EXPECT_EQ(q * g + r, p);
    EXPECT_FALSE(r.is_zero());
    auto [q2, r2] = divide(g * D(1, 3, N) * D(1, 2, N), g);
    EXPECT_TRUE(r2.is_zero());
    EXPECT_EQ(q2, D(1, 3, N) * D(1, 2, N));
}

TEST(JMember, Examples) {
    for (int n = 2; n <= 4; ++n) {
        const int N = n + 2;
        EXPECT_TRUE(j_member(D(n + 1, n + 2, N) * D(1, 2, N), n));
        EXPECT_FALSE(j_member(D(1, 2, N), n));
        EXPECT_TRUE(j_member(D(1, n + 1, N) * D(2, n + 2, N) - D(1, n + 2, N) * D(2, n + 1, N), n));
        EXPECT_TRUE(j_member(XPoly(N), n));
    }
    EXPECT_THROW(j_member(D(1, 2, 3), 2), std::invalid_argument);
}

TEST(BasisA, Examples) {
    auto r = check_basis_A(3, 0);
    EXPECT_EQ(std::tie(r.count, r.rank, r.expected_dim), std::make_tuple(1u, 1u, 1u));
    r = check_basis_A(4, 1);
    EXPECT_EQ(std::tie(r.count, r.rank, r.expected_dim), std::make_tuple(6u, 6u, 6u));
    EXPECT_TRUE(r.pass);
    r = check_basis_A(5, 2);
    EXPECT_EQ(std::tie(r.count, r.rank, r.expected_dim), std::make_tuple(50u, 50u, 50u));
    EXPECT_TRUE(r.pass);
}

TEST(BasisA, CrossingMonomialsAreDependent) {
    // Adding the crossing product to a basis gives a witness.
    std::vector<XPoly> polys;
    std::vector<std::string> labels;
    for (const auto& f : enumerate(Family::A, 4, 2)) {
        polys.push_back(z_A(f));
        labels.push_back(to_string(f));
    }
    polys.push_back(D(1, 3, 4) * D(2, 4, 4));
    labels.push_back("13*24");
    std::vector<WitnessTerm> w;
    EXPECT_EQ(detail::rank_with_witness(polys, labels, w), polys.size() - 1);
    ASSERT_FALSE(w.empty());
    EXPECT_EQ(w.back().label, "13*24");
}

TEST(BasisC, Examples) {
    auto r = check_basis_C(3, 0);
    EXPECT_EQ(std::tie(r.count, r.rank, r.expected_dim), std::make_tuple(1u, 1u, 1u));
    r = check_basis_C(2, 1);
    EXPECT_EQ(std::tie(r.count, r.rank, r.expected_dim), std::make_tuple(4u, 4u, 4u));
    r = check_basis_C(2, 2);
    EXPECT_EQ(std::tie(r.count, r.rank, r.expected_dim), std::make_tuple(9u, 9u, 9u));
    EXPECT_TRUE(r.pass);
}

TEST(ConjectureD, Examples) {
    auto r = check_conjecture_D(3, 0);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.count, 1u);
    r = check_conjecture_D(2, 1);
    EXPECT_EQ(r.count, 4u);
    EXPECT_EQ(r.expected_dim, 4u);
    EXPECT_TRUE(r.independent_mod_J);
    EXPECT_TRUE(r.pass);
    r = check_conjecture_D(2, 2);
    EXPECT_EQ(r.count, 10u);
    EXPECT_EQ(r.expected_dim, 10u);
    EXPECT_EQ(r.quotient_count, 10u);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(to_json(r)["note"], "verified for these (n,k) only");
}

TEST(ConjectureD, IdealPartDetectsDependenceModJ) {
    // Delta_{n+1,n+2} Delta_12 is in J; together with B_J it must be dependent.
    const int n = 2, N = 4;
    EchelonBasis<GaussRat> b;
    b.insert(D(n + 1, n + 2, N) * D(1, 2, N));
    EXPECT_TRUE(b.insert(GaussRat(5) * D(n + 1, n + 2, N) * D(1, 2, N)));
}

TEST(Rotation, Examples) {
    const auto gA = rotation_substitution(Family::A, 4);
    EXPECT_EQ(gA.apply(D(1, 4, 4)), D(1, 2, 4));
    const auto gC = rotation_substitution(Family::C, 2);
    EXPECT_EQ(gC.apply(x(2, 2, 1) * x(2, 2, 2)), x(2, 1, 1) * x(2, 1, 2));
    const auto gD = rotation_substitution(Family::D, 2);
    EXPECT_EQ(gD.apply(D(1, 3, 4)), D(2, 4, 4));
}

TEST(Rotation, SubstitutionComposition) {
    const auto g = rotation_substitution(Family::A, 5);
    const XPoly p = D(1, 3, 5) * D(2, 5, 5) + x(5, 4, 1);
    EXPECT_EQ(g.power(2).apply(p), g.apply(g.apply(p)));
    EXPECT_EQ(g.after(g.power(2)), g.power(3));
    EXPECT_EQ(g.apply(p * p), g.apply(p) * g.apply(p));
}

TEST(Rotation, PowerActsAsIdentity) {
    for (int n = 3; n <= 4; ++n)
        for (int k = 0; k <= 2; ++k) {
            EXPECT_TRUE(rotation_power_is_identity(Family::A, n, k));
            EXPECT_TRUE(rotation_power_is_identity(Family::C, n, k));
            EXPECT_TRUE(rotation_power_is_identity(Family::D, n, k));
        }
    // The substitution itself is not the identity on odd-degree polynomials.
    const auto gC = rotation_substitution(Family::C, 3).power(3);
    EXPECT_FALSE(gC.apply(x(3, 1, 1)) == x(3, 1, 1));
}

TEST(Equivariance, Examples) {
    auto r = verify_equivariance(Family::A, 4, 1);
    EXPECT_EQ(r.count, 6u);
    EXPECT_EQ(r.exact_count, 6u);
    EXPECT_TRUE(r.pass);
    r = verify_equivariance(Family::C, 2, 1);
    EXPECT_EQ(r.exact_count, 4u);
    EXPECT_TRUE(r.pass);
    r = verify_equivariance(Family::D, 2, 2);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.mod_j_count, r.count);
}

TEST(Equivariance, TypeDNeedsTheQuotient) {
    // From n = 3 on, non-wrapping CS pairs only match modulo J.
    const auto r = verify_equivariance(Family::D, 3, 2);
    EXPECT_TRUE(r.pass);
    EXPECT_LT(r.exact_count, r.count);
    EXPECT_EQ(r.mod_j_count, r.count);
    bool saw_inexact = false;
    for (const auto& p : r.pair_discrepancies) {
        EXPECT_TRUE(p.pass);
        if (!p.exact) {
            saw_inexact = true;
            ASSERT_TRUE(p.unit);
            EXPECT_EQ(*p.unit, GaussRat(-1));
        }
    }
    EXPECT_TRUE(saw_inexact);
}

TEST(Equivariance, SmallRange) {
    for (int n = 3; n <= 5; ++n)
        for (int k = 0; k <= 2; ++k) EXPECT_TRUE(verify_equivariance(Family::A, n, k).pass);
    for (int n = 2; n <= 3; ++n)
        for (int k = 0; k <= 2; ++k) {
            EXPECT_TRUE(verify_equivariance(Family::C, n, k).pass);
            EXPECT_TRUE(verify_equivariance(Family::D, n, k).pass);
        }
}

TEST(Eigenvectors, DiagonalTorusScalesTypeA) {
    std::mt19937 rng(3);
    for (int n = 3; n <= 5; ++n)
        for (int k = 0; k <= 2; ++k) {
            std::vector<GaussRat> y;
            std::vector<long> yl;
            for (int i = 0; i < n; ++i) {
                yl.push_back(2 + static_cast<long>(rng() % 5));
                y.emplace_back(yl.back());
            }
            const auto t = diagonal_substitution(y);
            for (const auto& f : enumerate(Family::A, n, k)) {
                const XPoly z = z_A(f);
                const BigInt w = weight_A(f, integer_point(yl)).eval_at_one();
                EXPECT_EQ(t.apply(z), GaussRat(mpq_class(w)) * z);
            }
        }
}

TEST(Characters, TypeAExamples) {
    EXPECT_TRUE(character_check_A(4, 0, principal_point(4)));
    EXPECT_EQ(weight_sum_A(3, 1, ones_point(3)), IntLaurentPoly(3));
    EXPECT_TRUE(character_check_A(3, 1, ones_point(3)));
    EXPECT_EQ(weight_sum_A(4, 1, principal_point(4)), IntLaurentPoly::from_coeffs({0, 1, 1, 2, 1, 1}));
    EXPECT_TRUE(character_check_A(4, 1, principal_point(4)));
}

TEST(Characters, TypeDExamples) {
    EXPECT_TRUE(character_check_D(2, 0, ones_point(2), ones_point(2)));
    EXPECT_EQ(weight_sum_D(2, 1, ones_point(2), ones_point(2)), IntLaurentPoly(4));
    EXPECT_TRUE(character_check_D(2, 1, ones_point(2), ones_point(2)));
    EXPECT_EQ(weight_sum_D(2, 2, ones_point(2), ones_point(2)), IntLaurentPoly(10));
    EXPECT_TRUE(character_check_D(2, 2, ones_point(2), ones_point(2)));
}

TEST(Characters, RandomIntegerPoints) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 5; ++trial)
        for (int n = 3; n <= 5; ++n)
            for (int k = 0; k <= 2; ++k) {
                std::vector<long> y;
                for (int i = 0; i < n; ++i) y.push_back(static_cast<long>(rng() % 7) - 3);
                EXPECT_TRUE(character_check_A(n, k, integer_point(y)));
                EXPECT_TRUE(character_check_D(n, k, integer_point(y), integer_point({1 + trial, -2})));
            }
}

TEST(Characters, TypeCTraceThroughCoordinates) {
    for (int n = 2; n <= 3; ++n)
        for (int k = 0; k <= 2; ++k) {
            std::vector<long> y;
            for (int i = 0; i < n; ++i) y.push_back(i + 2);
            const auto r = character_check_C(n, k, y);
            EXPECT_TRUE(r.pass) << n << " " << k << " trace " << r.trace << " expected " << r.expected;
        }
}

TEST(Characters, QuotientCountMatchesCountFormula) {
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= 4; ++k)
            EXPECT_EQ(BigInt(quotient_index_set(n, k).size()), corollary_d_count(n, k));
}

TEST(RepresentationSieve, TraceMatchesFixedPoints) {
    for (int n = 2; n <= 3; ++n)
        for (int k = 0; k <= 2; ++k) {
            const auto r = representation_sieve_D(n, k);
            EXPECT_TRUE(r.pass) << n << " " << k;
            EXPECT_EQ(r.checks.size(), static_cast<std::size_t>(2 * n));
        }
}
