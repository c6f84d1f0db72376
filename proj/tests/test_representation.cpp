#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tubular/representation.hpp"

using namespace tubular;

static Quiver kronecker_quiver() {
    Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {{"a", 1, 0}, {"b", 1, 0}};
    return q;
}

// Regular Kronecker module R_lambda = (k ⇉ k; a ↦ lambda, b ↦ 1)
static Rep R_lambda(const BoundQuiverAlgebra& A, const Q& lam) {
    Rep r = zero_rep(A);
    r.dims = {1, 1};
    r.maps[0] = Mat(1, 1);
    r.maps[0].at(0, 0) = lam;
    r.maps[1] = Mat(1, 1);
    r.maps[1].at(0, 0) = 1;
    return r;
}

TEST_CASE("Kronecker hom spaces of regular modules") {
    auto A = build_algebra(kronecker_quiver(), {});
    auto R2 = R_lambda(A, 2), R3 = R_lambda(A, 3);
    CHECK(hom_space(R2, R3).empty());
    CHECK(hom_space(R2, R2).size() == 1);
    CHECK(is_indecomposable(R2));
    CHECK(indec_verdict(direct_sum(R2, R2)) == IndecVerdict::Decomposable);
    CHECK(indec_verdict(direct_sum(R2, R3)) == IndecVerdict::Decomposable);
}

TEST_CASE("simple modules are indecomposable, zero module rejected") {
    auto A = build_algebra(kronecker_quiver(), {});
    CHECK(is_indecomposable(simple_rep(A, 0)));
    CHECK(is_indecomposable(simple_rep(A, 1)));
    CHECK_THROWS_AS(is_indecomposable(zero_rep(A)), ZeroModule);
    CHECK(hom_space(simple_rep(A, 0), simple_rep(A, 1)).empty());
}

TEST_CASE("projectives: dim vectors and Yoneda hom dimensions") {
    auto A = build_algebra(kronecker_quiver(), {});
    auto P1 = indec_projective(A, 0), P2 = indec_projective(A, 1);
    CHECK(P1.dims == std::vector<int>{1, 0});
    CHECK(P2.dims == std::vector<int>{2, 1});
    // dim hom(P(v), M) = dim M(v)
    auto R2 = R_lambda(A, 2);
    CHECK(hom_space(P1, R2).size() == 1);
    CHECK(hom_space(P2, R2).size() == 1);
    CHECK(hom_space(P2, P2).size() == 1);
    CHECK(hom_space(P2, P1).size() == 2);
    CHECK(rep_satisfies_relations(P2));
}

TEST_CASE("injectives and duality") {
    auto A = build_algebra(kronecker_quiver(), {});
    auto I1 = indec_injective(A, 0), I2 = indec_injective(A, 1);
    CHECK(I1.dims == std::vector<int>{1, 2});
    CHECK(I2.dims == std::vector<int>{0, 1});
    auto R2 = R_lambda(A, 2);
    Rep D = dual(R2);
    CHECK(D.dims == std::vector<int>{1, 1});
    // dual of dual is the original (after rebinding along the double opposite)
    Rep DD = rebind(dual(D), A);
    CHECK(is_isomorphic(DD, R2));
    // hom dimension symmetric under duality
    auto P2 = indec_projective(A, 1);
    CHECK(hom_space(P2, R2).size() == hom_space(dual(R2), dual(P2)).size());
}

TEST_CASE("AR translate on the Kronecker algebra") {
    auto A = build_algebra(kronecker_quiver(), {});
    SECTION("tau of projectives vanishes") {
        CHECK(ar_translate(indec_projective(A, 0)).is_zero());
        CHECK(ar_translate(indec_projective(A, 1)).is_zero());
    }
    SECTION("tau fixes the regular modules R_lambda") {
        auto R2 = R_lambda(A, 2);
        Rep t = ar_translate(R2);
        REQUIRE(t.dims == std::vector<int>{1, 1});
        CHECK(is_isomorphic(t, R2));
    }
    SECTION("tau of the injective I(2) = S(2)-ish preradical: dim via Coxeter") {
        // Coxeter matrix from the Cartan matrix: columns are projective
        // dimension vectors; Phi = -C^T C^{-1} acts on dimension vectors.
        Mat C(2, 2);
        auto P1 = indec_projective(A, 0), P2 = indec_projective(A, 1);
        for (int v = 0; v < 2; ++v) {
            C.at(v, 0) = P1.dims[v];
            C.at(v, 1) = P2.dims[v];
        }
        Mat Phi = C.transpose().scaled(Q(-1)) * *inverse(C);
        CHECK(Phi.apply({Q(1), Q(1)}) == Vec{Q(1), Q(1)});
        // preprojective (0,1) = S(2): tau^{-} direction; preinjective (3,2) -> (1,0)
        CHECK(Phi.apply({Q(3), Q(2)}) == Vec{Q(1), Q(0)});
        // tau of a preinjective module matches
        Rep N = zero_rep(A);
        N.dims = {3, 2};
        // generic maps give the preinjective indecomposable of dim (3,2)
        N.maps[0] = Mat(3, 2);
        N.maps[1] = Mat(3, 2);
        N.maps[0].at(0, 0) = 1;
        N.maps[0].at(1, 1) = 1;
        N.maps[1].at(1, 0) = 1;
        N.maps[1].at(2, 1) = 1;
        REQUIRE(is_indecomposable(N));
        Rep t = ar_translate(N);
        CHECK(t.dims == std::vector<int>{1, 0});
    }
    SECTION("tau-inverse then tau is the identity on non-projectives") {
        auto R2 = R_lambda(A, 2);
        Rep u = ar_translate_inverse(R2);
        REQUIRE(u.dims == R2.dims);
        CHECK(is_isomorphic(ar_translate(u), R2));
    }
}

TEST_CASE("Coxeter oracle on random hereditary A3 modules") {
    Quiver q;
    q.vertices = {"1", "2", "3"};
    q.arrows = {{"a", 1, 0}, {"b", 2, 1}};
    auto A = build_algebra(q, {});
    Mat C(3, 3);
    for (int j = 0; j < 3; ++j) {
        auto P = indec_projective(A, j);
        for (int v = 0; v < 3; ++v) C.at(v, j) = P.dims[v];
    }
    Mat Phi = C.transpose().scaled(Q(-1)) * *inverse(C);
    // the 6 indecomposables of A3: interval modules [i..j]
    auto interval = [&](int lo, int hi) {
        Rep r = zero_rep(A);
        for (int v = lo; v <= hi; ++v) r.dims[v] = 1;
        for (int a = 0; a < 2; ++a) {
            int s = q.arrows[a].src, t = q.arrows[a].tgt;
            r.maps[a] = Mat(r.dims[t], r.dims[s]);
            if (r.dims[s] && r.dims[t]) r.maps[a].at(0, 0) = 1;
        }
        return r;
    };
    for (int lo = 0; lo < 3; ++lo)
        for (int hi = lo; hi < 3; ++hi) {
            Rep M = interval(lo, hi);
            bool projective = (lo == 0);  // intervals [0..j] are the projectives
            Rep t = ar_translate(M);
            if (projective) {
                CHECK(t.is_zero());
            } else {
                Vec dm(3);
                for (int v = 0; v < 3; ++v) dm[v] = M.dims[v];
                Vec want = Phi.apply(dm);
                for (int v = 0; v < 3; ++v) CHECK(Q(t.dims[v]) == want[v]);
                CHECK(is_isomorphic(ar_translate_inverse(t), M));
            }
        }
}

TEST_CASE("projective covers are minimal: top of P0 equals top of M") {
    auto A = build_algebra(kronecker_quiver(), {});
    auto R2 = R_lambda(A, 2);
    auto tops = top_basis(R2);
    Cover c = projective_cover(R2);
    // top of R_lambda is S(2) (one generator at vertex 2)
    CHECK(tops[0].size() + tops[1].size() == c.blocks.size());
    REQUIRE(c.verts == std::vector<int>{1});
}
