#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gec/cochain.hpp"
#include "gec/complex.hpp"

using namespace gec;

namespace {

Point pt(std::initializer_list<int> xs) {
    Point p;
    for (int x : xs) p.push_back(Rat(x));
    return p;
}

// Full 3-simplex on the standard basis, all faces present.
ComplexPtr tetra() {
    return SimplicialComplex::build(
        3, {pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})}, {{0, 1, 2, 3}});
}

// Unit square split along the diagonal, both triangles positively oriented.
ComplexPtr square() {
    return SimplicialComplex::build(2, {pt({0, 0}), pt({1, 0}), pt({1, 1}), pt({0, 1})},
                                    {{0, 1, 2}, {0, 2, 3}});
}

Rat rnd(std::mt19937_64& rng) {
    int num = static_cast<int>(rng() % 19) - 9;
    int den = 1 + static_cast<int>(rng() % 7);
    return frac(num, den);
}

}  // namespace

TEST_CASE("simplex orientation parity") {
    CHECK(Simplex({0, 1, 2}).sign == 1);
    CHECK(Simplex({1, 0, 2}).sign == -1);
    CHECK(Simplex({2, 0, 1}).sign == 1);
    CHECK(Simplex({2, 0, 1}).vertices == VertexList{0, 1, 2});
    CHECK_THROWS(Simplex({0, 1, 1}));
}

TEST_CASE("complex construction and face closure") {
    auto K = tetra();
    CHECK(K->top_dim() == 3);
    CHECK(K->count(0) == 4);
    CHECK(K->count(1) == 6);
    CHECK(K->count(2) == 4);
    CHECK(K->count(3) == 1);
    CHECK(K->has_simplex({0, 2}));
    CHECK(K->has_simplex({1, 2, 3}));
    CHECK(!K->has_simplex({0, 1, 4}));

    auto Q = square();
    CHECK(Q->count(2) == 2);
    CHECK(Q->count(1) == 5);
}

TEST_CASE("construction rejects invalid input") {
    // Vertex index out of range.
    CHECK_THROWS(SimplicialComplex::build(2, {pt({0, 0}), pt({1, 0})}, {{0, 1, 2}}));
    // Repeated vertex.
    CHECK_THROWS(SimplicialComplex::build(2, {pt({0, 0}), pt({1, 0}), pt({1, 1})}, {{0, 1, 1}}));
    // Collinear triangle: zero affine volume.
    CHECK_THROWS(SimplicialComplex::build(2, {pt({0, 0}), pt({1, 0}), pt({2, 0})}, {{0, 1, 2}}));
    // Coordinate width mismatch.
    CHECK_THROWS(SimplicialComplex::build(2, {pt({0, 0}), pt({1}), pt({1, 1})}, {{0, 1, 2}}));
}

TEST_CASE("affine rank") {
    CHECK(affine_rank({pt({0, 0}), pt({1, 0}), pt({2, 0})}) == 1);
    CHECK(affine_rank({pt({0, 0}), pt({1, 0}), pt({1, 1})}) == 2);
    CHECK(affine_rank({pt({5, 7})}) == 0);
}

TEST_CASE("boundary of boundary vanishes") {
    auto K = tetra();
    std::mt19937_64 rng(7);
    Chain c(K, 3);
    c.add_canonical({0, 1, 2, 3}, rnd(rng) + Rat(1));
    Chain dc = boundary_chain(c);
    CHECK(!dc.is_zero());
    CHECK(boundary_chain(dc).is_zero());

    Chain c2(square(), 2);
    c2.add_canonical({0, 1, 2}, Rat(3, 2));
    c2.add_canonical({0, 2, 3}, Rat(-2, 5));
    CHECK(boundary_chain(boundary_chain(c2)).is_zero());
}

TEST_CASE("chain algebra folds orientation signs") {
    auto K = tetra();
    Chain c(K, 1);
    c.add(Simplex({2, 0}), Rat(1));  // reversed edge
    CHECK(c.coefficient({0, 2}) == Rat(-1));
    c.add_canonical({0, 2}, Rat(1));
    CHECK(c.is_zero());
    CHECK_THROWS(c.add_canonical({0, 4}, Rat(1)));
}

TEST_CASE("square boundary has four edges with coherent orientation") {
    auto Q = square();
    Chain bd = boundary_chain(region_chain(Q));
    CHECK(bd.coefficient({0, 1}) == Rat(1));
    CHECK(bd.coefficient({1, 2}) == Rat(1));
    CHECK(bd.coefficient({2, 3}) == Rat(1));
    CHECK(bd.coefficient({0, 3}) == Rat(-1));
    CHECK(bd.coefficient({0, 2}) == Rat(0));  // interior diagonal cancels
}

TEST_CASE("boundary subcomplex carries the induced orientation") {
    auto K = tetra();
    auto B = boundary_subcomplex(K);
    CHECK(B.surface->top_dim() == 2);
    CHECK(B.surface->count(2) == 4);
    CHECK(B.parent == K);
    // Region chain of the surface reproduces the boundary chain coefficients.
    Chain bd = boundary_chain(region_chain(K));
    Chain surf = region_chain(B.surface);
    for (const auto& [s, c] : bd.coefficients()) CHECK(surf.coefficient(s) == c);
    CHECK(surf.coefficient({0, 1, 2}) == Rat(-1));
    CHECK(surf.coefficient({1, 2, 3}) == Rat(1));
}

TEST_CASE("discrete Stokes identity is exact") {
    auto K = tetra();
    std::mt19937_64 rng(99);
    for (int deg = 0; deg < 3; ++deg) {
        Cochain w(K, deg);
        for (const auto& s : K->simplices(deg)) w.set(s, rnd(rng));
        Chain c(K, deg + 1);
        for (const auto& s : K->simplices(deg + 1)) c.add_canonical(s, rnd(rng));
        CHECK(pair_chain(coboundary(w), c) == pair_chain(w, boundary_chain(c)));
    }
}

TEST_CASE("coboundary squares to zero") {
    auto K = tetra();
    std::mt19937_64 rng(3);
    Cochain w(K, 0);
    for (const auto& s : K->simplices(0)) w.set(s, rnd(rng));
    CHECK(coboundary(coboundary(w)).is_zero());
    Cochain w1(K, 1);
    for (const auto& s : K->simplices(1)) w1.set(s, rnd(rng));
    CHECK(coboundary(coboundary(w1)).is_zero());
}

TEST_CASE("cup product satisfies the Leibniz rule") {
    auto K = tetra();
    std::mt19937_64 rng(17);
    for (auto [p, q] : {std::pair{0, 1}, {1, 1}, {0, 2}, {1, 0}}) {
        Cochain a(K, p), b(K, q);
        for (const auto& s : K->simplices(p)) a.set(s, rnd(rng));
        for (const auto& s : K->simplices(q)) b.set(s, rnd(rng));
        Cochain lhs = coboundary(cup(a, b));
        Cochain rhs = cup(coboundary(a), b);
        Cochain mixed = cup(a, coboundary(b));
        if (p % 2 == 1) mixed *= Rat(-1);
        rhs += mixed;
        CHECK(lhs == rhs);
    }
    Cochain a(K, 2), b(K, 2);
    CHECK_THROWS(cup(a, b));  // degree overflow
}

TEST_CASE("cup product with the constant unit cochain is the identity") {
    auto K = tetra();
    std::mt19937_64 rng(23);
    Cochain one(K, 0);
    for (const auto& s : K->simplices(0)) one.set(s, Rat(1));
    Cochain w(K, 2);
    for (const auto& s : K->simplices(2)) w.set(s, rnd(rng));
    CHECK(cup(one, w) == w);
    CHECK(cup(w, one) == w);
}

TEST_CASE("restriction to the boundary keeps values") {
    auto K = tetra();
    auto B = boundary_subcomplex(K);
    std::mt19937_64 rng(31);
    Cochain w(K, 1);
    for (const auto& s : K->simplices(1)) w.set(s, rnd(rng));
    Cochain r = restrict_to(w, B);
    CHECK(r.complex() == B.surface);
    for (const auto& s : B.surface->simplices(1)) CHECK(r.value(s) == w.value(s));
}
