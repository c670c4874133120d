#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "lextrop/polyhedra.hpp"

using namespace lextrop;

namespace {

long draw(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

std::vector<Rational> rats(std::vector<long> v) {
    return std::vector<Rational>(v.begin(), v.end());
}

// brute-force feasibility oracle for bounded systems: enumerate all D x D
// subsystems of tight constraints, solve exactly, and check the candidate
// vertices
bool brute_force_feasible(const RationalPolyhedron& p) {
    std::size_t d = static_cast<std::size_t>(p.ambient_dim());
    std::vector<LinearConstraint> all;
    for (const auto& eq : p.equalities())
        all.push_back(eq);
    for (const auto& c : p.inequalities())
        all.push_back(c);
    std::vector<std::size_t> pick;
    std::function<bool(std::size_t)> rec = [&](std::size_t start) {
        if (pick.size() == d) {
            // solve the square system by elimination
            std::vector<std::vector<Rational>> rows;
            for (std::size_t idx : pick) {
                std::vector<Rational> row(all[idx].normal);
                row.push_back(all[idx].offset);
                rows.push_back(std::move(row));
            }
            std::size_t rank = rational_rref(rows, d, false);
            if (rank < d)
                return false;
            // back out the unique solution
            std::vector<Rational> x(d, Rational(0));
            for (std::size_t i = 0; i < rank; ++i) {
                std::size_t pivot = d;
                for (std::size_t j = 0; j < d; ++j) {
                    if (rows[i][j] != 0) {
                        pivot = j;
                        break;
                    }
                }
                if (pivot == d)
                    continue;
                x[pivot] = rows[i][d] / rows[i][pivot];
            }
            return p.contains_point(x, false);
        }
        for (std::size_t i = start; i < all.size(); ++i) {
            pick.push_back(i);
            if (rec(i + 1))
                return true;
            pick.pop_back();
        }
        return false;
    };
    return rec(0);
}

}  // namespace

TEST_CASE("feasibility with witnesses") {
    RationalPolyhedron p(1);
    p.add_inequality(rats({1}), Rational(0));
    p.add_inequality(rats({-1}), Rational(-1));
    auto w = is_feasible(p, false);
    REQUIRE(w.has_value());
    CHECK(p.contains_point(*w, false));

    RationalPolyhedron q(1);
    q.add_inequality(rats({1}), Rational(1));
    q.add_inequality(rats({-1}), Rational(0));
    CHECK_FALSE(is_feasible(q, false).has_value());

    // only the boundary point x = 0 survives without strictness
    RationalPolyhedron r(1);
    r.add_inequality(rats({1}), Rational(0), true);
    r.add_inequality(rats({-1}), Rational(0), true);
    CHECK_FALSE(is_feasible(r, true).has_value());
    auto wr = is_feasible(r, false);
    REQUIRE(wr.has_value());
    CHECK((*wr)[0] == 0);
}

TEST_CASE("dimension and affine hull") {
    RationalPolyhedron diag(2);
    diag.add_equality(rats({1, -1}), Rational(0));
    CHECK(dimension(diag) == 1);

    RationalPolyhedron full(4);
    CHECK(dimension(full) == 4);
    CHECK(affine_hull(full).empty());

    // segment {(t, 0, t/2, 0) : 1 <= t <= 2} in Q^4
    RationalPolyhedron seg(4);
    seg.add_equality(rats({1, 0, -2, 0}), Rational(0));  // x1 = 2 x3
    seg.add_equality(rats({0, 1, 0, 0}), Rational(0));
    seg.add_equality(rats({0, 0, 0, 1}), Rational(0));
    seg.add_inequality(rats({1, 0, 0, 0}), Rational(1));
    seg.add_inequality(rats({-1, 0, 0, 0}), Rational(-2));
    CHECK(dimension(seg) == 1);

    auto hull = affine_hull(seg);
    CHECK(hull.size() == 3);
    // the hull is {x1 = 2 x3, x2 = 0, x4 = 0}: check set equality
    RationalPolyhedron hull_poly(4);
    for (const auto& eq : hull)
        hull_poly.add_equality(eq.normal, eq.offset);
    RationalPolyhedron expected(4);
    expected.add_equality(rats({1, 0, -2, 0}), Rational(0));
    expected.add_equality(rats({0, 1, 0, 0}), Rational(0));
    expected.add_equality(rats({0, 0, 0, 1}), Rational(0));
    CHECK(equal_as_sets(hull_poly, expected));

    RationalPolyhedron pt(3);
    pt.add_equality(rats({1, 0, 0}), Rational(2));
    pt.add_equality(rats({0, 1, 0}), Rational(3));
    pt.add_equality(rats({0, 0, 1}), Rational(4));
    CHECK(dimension(pt) == 0);
    CHECK(affine_hull(pt).size() == 3);

    RationalPolyhedron empty(2);
    empty.add_inequality(rats({1, 0}), Rational(1));
    empty.add_inequality(rats({-1, 0}), Rational(0));
    CHECK(dimension(empty) == -1);
    CHECK_THROWS_AS(affine_hull(empty), std::invalid_argument);
}

TEST_CASE("implied equalities are detected through inequalities") {
    // x >= 0 and -x >= 0 force x = 0
    RationalPolyhedron p(2);
    p.add_inequality(rats({1, 0}), Rational(0));
    p.add_inequality(rats({-1, 0}), Rational(0));
    CHECK(dimension(p) == 1);
    auto interior = relative_interior_point(p);
    REQUIRE(interior.has_value());
    CHECK((*interior)[0] == 0);
}

TEST_CASE("relative interior points satisfy non-implied inequalities strictly") {
    RationalPolyhedron p(2);
    p.add_inequality(rats({1, 0}), Rational(0));
    p.add_inequality(rats({0, 1}), Rational(0));
    p.add_inequality(rats({-1, -1}), Rational(-10));
    auto w = relative_interior_point(p);
    REQUIRE(w.has_value());
    CHECK((*w)[0] > 0);
    CHECK((*w)[1] > 0);
    CHECK((*w)[0] + (*w)[1] < 10);
}

TEST_CASE("optimize reports optima and unboundedness") {
    RationalPolyhedron p(2);
    p.add_inequality(rats({1, 0}), Rational(0));
    p.add_inequality(rats({0, 1}), Rational(0));
    p.add_inequality(rats({-1, -2}), Rational(-4));  // x + 2y <= 4

    auto mx = optimize(p, rats({1, 1}), true);
    REQUIRE(mx.status == LpStatus::optimal);
    CHECK(mx.value == 4);

    auto unb = optimize(p, rats({1, 0}), false);
    CHECK(unb.status == LpStatus::optimal);
    CHECK(unb.value == 0);
    auto unb2 = optimize(p, rats({1, 1}), false);
    CHECK(unb2.status == LpStatus::optimal);

    RationalPolyhedron line(2);
    line.add_equality(rats({0, 1}), Rational(0));
    CHECK(optimize(line, rats({1, 0}), true).status == LpStatus::unbounded);
}

TEST_CASE("containment and set equality") {
    RationalPolyhedron ray(2);
    ray.add_equality(rats({1, -1}), Rational(0));
    ray.add_inequality(rats({-1, 0}), Rational(0));

    RationalPolyhedron origin(2);
    origin.add_equality(rats({1, 0}), Rational(0));
    origin.add_equality(rats({0, 1}), Rational(0));

    CHECK(contains(ray, origin));
    CHECK_FALSE(contains(origin, ray));
    CHECK(equal_as_sets(ray, ray));
}

TEST_CASE("complex dimension, purity and maximal cells") {
    // three rays from the origin in Q^2
    PolyhedralComplex tripod;
    tripod.ambient_dim = 2;
    {
        RationalPolyhedron r1(2);
        r1.add_equality(rats({1, -1}), Rational(0));
        r1.add_inequality(rats({-1, 0}), Rational(0));
        RationalPolyhedron r2(2);
        r2.add_equality(rats({0, 1}), Rational(0));
        r2.add_inequality(rats({1, 0}), Rational(0));
        RationalPolyhedron r3(2);
        r3.add_equality(rats({1, 0}), Rational(0));
        r3.add_inequality(rats({0, 1}), Rational(0));
        tripod.cells = {r1, r2, r3};
    }
    auto report = complex_dimension_and_purity(tripod);
    CHECK(report.dim == 1);
    CHECK(report.pure);
    CHECK(report.maximal == std::vector<int>{0, 1, 2});
    CHECK(complex_intersections_are_faces(tripod));

    // a 2-cell plus a segment hanging off it: impure
    PolyhedralComplex impure;
    impure.ambient_dim = 2;
    {
        RationalPolyhedron square(2);
        square.add_inequality(rats({1, 0}), Rational(0));
        square.add_inequality(rats({-1, 0}), Rational(-1));
        square.add_inequality(rats({0, 1}), Rational(0));
        square.add_inequality(rats({0, -1}), Rational(-1));
        RationalPolyhedron seg(2);
        seg.add_equality(rats({0, 1}), Rational(0));
        seg.add_inequality(rats({1, 0}), Rational(1));
        seg.add_inequality(rats({-1, 0}), Rational(-3));
        impure.cells = {square, seg};
    }
    auto rep2 = complex_dimension_and_purity(impure);
    CHECK(rep2.dim == 2);
    CHECK_FALSE(rep2.pure);
    CHECK(rep2.maximal == std::vector<int>{0, 1});

    PolyhedralComplex single;
    single.ambient_dim = 1;
    RationalPolyhedron pt(1);
    pt.add_equality(rats({1}), Rational(5));
    single.cells = {pt};
    auto rep3 = complex_dimension_and_purity(single);
    CHECK(rep3.dim == 0);
    CHECK(rep3.pure);
}

TEST_CASE("purity is invariant under cell order and redundant constraints") {
    RationalPolyhedron a(2);
    a.add_inequality(rats({1, 0}), Rational(0));
    a.add_inequality(rats({0, 1}), Rational(0));
    RationalPolyhedron b(2);
    b.add_equality(rats({0, 1}), Rational(0));
    b.add_inequality(rats({-1, 0}), Rational(0));

    RationalPolyhedron a_redundant = a;
    a_redundant.add_inequality(rats({1, 1}), Rational(0));  // implied by the others
    a_redundant.add_inequality(rats({1, 0}), Rational(-5));

    PolyhedralComplex c1{2, {a, b}, {}};
    PolyhedralComplex c2{2, {b, a_redundant}, {}};
    auto r1 = complex_dimension_and_purity(c1);
    auto r2 = complex_dimension_and_purity(c2);
    CHECK(r1.dim == r2.dim);
    CHECK(r1.pure == r2.pure);
    CHECK(r1.maximal.size() == r2.maximal.size());
}

TEST_CASE("simplex agrees with brute-force vertex enumeration on bounded systems") {
    std::mt19937_64 rng(61);
    int feasible_count = 0, infeasible_count = 0;
    for (int iter = 0; iter < 150; ++iter) {
        int d = 1 + static_cast<int>(draw(rng, 0, 2));
        RationalPolyhedron p(d);
        // a bounding box keeps the brute-force oracle complete
        for (int j = 0; j < d; ++j) {
            std::vector<Rational> e(static_cast<std::size_t>(d), Rational(0));
            e[static_cast<std::size_t>(j)] = 1;
            p.add_inequality(e, Rational(-6));
            for (auto& q : e)
                q = -q;
            p.add_inequality(e, Rational(-6));
        }
        long extra = draw(rng, 1, 4);
        for (long k = 0; k < extra; ++k) {
            std::vector<Rational> normal;
            bool zero = true;
            for (int j = 0; j < d; ++j) {
                normal.push_back(Rational(draw(rng, -3, 3)));
                zero = zero && normal.back() == 0;
            }
            if (zero)
                normal[0] = 1;
            p.add_inequality(normal, Rational(draw(rng, -4, 4)));
        }
        bool lp = is_feasible(p, false).has_value();
        bool brute = brute_force_feasible(p);
        CHECK(lp == brute);
        (lp ? feasible_count : infeasible_count)++;

        if (lp) {
            auto w = is_feasible(p, false);
            CHECK(p.contains_point(*w, false));
            // dimension equals the dimension of the affine hull's solution set
            RationalPolyhedron hull_poly(d);
            for (const auto& eq : affine_hull(p))
                hull_poly.add_equality(eq.normal, eq.offset);
            CHECK(dimension(hull_poly) == dimension(p));
            auto ri = relative_interior_point(p);
            REQUIRE(ri.has_value());
            CHECK(p.contains_point(*ri, false));
        }
    }
    // the generator must exercise both outcomes
    CHECK(feasible_count > 10);
    CHECK(infeasible_count > 10);
}

TEST_CASE("skeleton pieces of low-dimensional cells") {
    RationalPolyhedron seg(2);
    seg.add_equality(rats({0, 1}), Rational(0));
    seg.add_inequality(rats({1, 0}), Rational(0));
    seg.add_inequality(rats({-1, 0}), Rational(-2));
    auto piece = skeleton_piece(seg);
    REQUIRE(piece.has_value());
    CHECK(piece->kind == SkeletonPiece::Kind::segment);
    REQUIRE(piece->vertices.size() == 2);
    CHECK(piece->vertices[0] == rats({0, 0}));
    CHECK(piece->vertices[1] == rats({2, 0}));

    RationalPolyhedron ray(2);
    ray.add_equality(rats({1, -1}), Rational(0));
    ray.add_inequality(rats({1, 0}), Rational(0));
    auto rp = skeleton_piece(ray);
    REQUIRE(rp.has_value());
    CHECK(rp->kind == SkeletonPiece::Kind::ray);
    CHECK(rp->vertices[0] == rats({0, 0}));
    REQUIRE(rp->direction.has_value());
    CHECK(*rp->direction == rats({1, 1}));

    RationalPolyhedron line(2);
    line.add_equality(rats({0, 1}), Rational(3));
    auto lp = skeleton_piece(line);
    REQUIRE(lp.has_value());
    CHECK(lp->kind == SkeletonPiece::Kind::line);

    RationalPolyhedron pt(1);
    pt.add_equality(rats({2}), Rational(1));
    auto pp = skeleton_piece(pt);
    REQUIRE(pp.has_value());
    CHECK(pp->kind == SkeletonPiece::Kind::point);
    CHECK(pp->vertices[0] == std::vector<Rational>{Rational(1, 2)});
}

TEST_CASE("pivot seed changes only the witness, never the answers") {
    RationalPolyhedron p(2);
    p.add_inequality(rats({1, 0}), Rational(0));
    p.add_inequality(rats({0, 1}), Rational(0));
    p.add_inequality(rats({-1, -1}), Rational(-7));

    auto canonical = relative_interior_point(p);
    set_pivot_seed(12345u);
    auto seeded = relative_interior_point(p);
    set_pivot_seed(std::nullopt);
    REQUIRE(canonical.has_value());
    REQUIRE(seeded.has_value());
    CHECK(p.contains_point(*canonical, false));
    CHECK(p.contains_point(*seeded, false));
    CHECK(dimension(p) == 2);
}
