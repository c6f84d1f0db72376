#include <catch2/catch_amalgamated.hpp>

#include "tubular/algebra.hpp"
#include "tubular/path_algebra.hpp"
#include "tubular/quiver.hpp"

using namespace tubular;

static Quiver kronecker() {
    Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {{"a", 1, 0}, {"b", 1, 0}};  // two arrows 2 -> 1
    return q;
}

TEST_CASE("Kronecker algebra: dim 4, nilpotency 2") {
    auto A = build_algebra(kronecker(), {});
    CHECK(A.dim() == 4);
    CHECK(A.nilpotency == 2);
    // basis: e_1, e_2, a, b
    int a = A.arrow_basis(A.quiver.arrow_id("a"));
    int b = A.arrow_basis(A.quiver.arrow_id("b"));
    CHECK(A.mult(a, b).empty());   // paths don't compose (both 2 -> 1)
    CHECK(A.mult(a, A.idempotent(1)) == SVec{{a, Q(1)}});
    CHECK(A.mult(A.idempotent(0), a) == SVec{{a, Q(1)}});
    CHECK(A.mult(A.idempotent(1), a).empty());
    CHECK(b != a);
}

TEST_CASE("loop with x^2 = 0: dual numbers") {
    Quiver q;
    q.vertices = {"v"};
    q.arrows = {{"x", 0, 0}};
    Relation r;
    r.terms.emplace_back(Q(1), path_from_word(q, {"x", "x"}));
    auto A = build_algebra(q, {r});
    CHECK(A.dim() == 2);
    CHECK(A.nilpotency == 2);
}

TEST_CASE("loop without relations is infinite dimensional") {
    Quiver q;
    q.vertices = {"v"};
    q.arrows = {{"x", 0, 0}};
    CHECK_THROWS_AS(build_algebra(q, {}, 16), NotFiniteDimensional);
}

TEST_CASE("relations of length < 2 are rejected") {
    Quiver q;
    q.vertices = {"v"};
    q.arrows = {{"x", 0, 0}};
    Relation r;
    r.terms.emplace_back(Q(1), path_from_word(q, {"x"}));
    CHECK_THROWS_AS(build_algebra(q, {r}), NotAdmissible);
}

TEST_CASE("A3 with zero relation") {
    // 3 --b--> 2 --a--> 1, relation a.b = 0
    Quiver q;
    q.vertices = {"1", "2", "3"};
    q.arrows = {{"a", 1, 0}, {"b", 2, 1}};
    Relation r;
    r.terms.emplace_back(Q(1), path_from_word(q, {"a", "b"}));
    auto A = build_algebra(q, {r});
    CHECK(A.dim() == 5);  // e1, e2, e3, a, b
    CHECK(A.nilpotency == 2);
    int a = A.arrow_basis(0), b = A.arrow_basis(1);
    CHECK(A.mult(a, b).empty());
}

TEST_CASE("commutative square with commutativity relation") {
    //   4 -> 3 -> 1, 4 -> 2 -> 1, relation: top path = bottom path
    Quiver q;
    q.vertices = {"1", "2", "3", "4"};
    q.arrows = {{"a", 2, 0}, {"b", 3, 2}, {"c", 1, 0}, {"d", 3, 1}};
    Relation r;
    r.terms.emplace_back(Q(1), path_from_word(q, {"a", "b"}));
    r.terms.emplace_back(Q(-1), path_from_word(q, {"c", "d"}));
    auto A = build_algebra(q, {r});
    // basis: 4 idempotents + 4 arrows + one path of length 2
    CHECK(A.dim() == 9);
    int a = A.arrow_basis(0), b = A.arrow_basis(1);
    int c = A.arrow_basis(2), d = A.arrow_basis(3);
    CHECK(A.mult(a, b) == A.mult(c, d));
}

TEST_CASE("associativity of the product (property)") {
    Quiver q;
    q.vertices = {"1", "2", "3"};
    q.arrows = {{"a", 1, 0}, {"b", 2, 1}, {"x", 0, 0}};
    Relation r;
    r.terms.emplace_back(Q(1), path_from_word(q, {"x", "x"}));
    auto A = build_algebra(q, {r});
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < A.dim(); ++j)
            for (int k = 0; k < A.dim(); ++k) {
                SVec ij = A.mult(SVec{{i, Q(1)}}, SVec{{j, Q(1)}});
                SVec jk = A.mult(SVec{{j, Q(1)}}, SVec{{k, Q(1)}});
                CHECK(A.mult(ij, SVec{{k, Q(1)}}) == A.mult(SVec{{i, Q(1)}}, jk));
            }
}

TEST_CASE("opposite algebra has the same dimension and reversed products") {
    Quiver q;
    q.vertices = {"1", "2", "3"};
    q.arrows = {{"a", 1, 0}, {"b", 2, 1}};
    auto A = build_algebra(q, {});
    const auto& B = A.op();
    CHECK(B.dim() == A.dim());
    // a.b nonzero in A means reversed composition nonzero in B
    int a = A.arrow_basis(0), b = A.arrow_basis(1);
    CHECK_FALSE(A.mult(a, b).empty());
    int ao = B.arrow_basis(B.quiver.arrow_id("a"));
    int bo = B.arrow_basis(B.quiver.arrow_id("b"));
    CHECK_FALSE(B.mult(bo, ao).empty());
    CHECK(B.mult(ao, bo).empty());
}

TEST_CASE("radical and ext quiver recover the Kronecker quiver") {
    auto A = build_algebra(kronecker(), {});
    auto S = to_structure(A);
    auto rad = radical_basis(S);
    CHECK(rad.size() == 2);
    auto q = ext_quiver(S);
    REQUIRE(q.arrows.size() == 2);
    CHECK(q.arrows[0].src == 1);
    CHECK(q.arrows[0].tgt == 0);
    CHECK(q.arrows[1].src == 1);
    CHECK(q.arrows[1].tgt == 0);
}

TEST_CASE("non-basic algebras are detected") {
    // 2x2 matrix algebra over Q with basis the matrix units
    StructureAlgebra M;
    M.labels = {"E11", "E12", "E21", "E22"};
    auto unit = [](int i, int j) { return i * 2 + j; };
    M.table.assign(4, std::vector<SVec>(4));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    if (j == k) M.table[unit(i, j)][unit(k, l)] = {{unit(i, l), Q(1)}};
    Vec e(4, Q(0));
    e[0] = 1;
    e[3] = 1;
    M.unit_vec = e;
    Vec e1(4, Q(0)), e2(4, Q(0));
    e1[0] = 1;
    e2[3] = 1;
    M.idempotents = {e1, e2};
    M.idem_names = {"1", "2"};
    CHECK(radical_basis(M).empty());  // semisimple
    CHECK_THROWS_AS(ext_quiver(M), NotBasic);
}

TEST_CASE("verify_relations accepts the defining relations and rejects others") {
    Quiver q;
    q.vertices = {"1", "2", "3"};
    q.arrows = {{"a", 1, 0}, {"b", 2, 1}};
    Relation r;
    r.terms.emplace_back(Q(1), path_from_word(q, {"a", "b"}));
    auto A = build_algebra(q, {r});
    auto S = to_structure(A);
    std::map<std::string, Vec> assign;
    for (const auto& ar : q.arrows) {
        Vec v(S.dim(), Q(0));
        v[A.arrow_basis(q.arrow_id(ar.label))] = 1;
        assign[ar.label] = v;
    }
    CHECK(verify_relations(S, q, {r}, assign, S.idempotents));
    // a.b is nonzero in the hereditary A3, so the same relation must fail there
    Quiver q2 = q;
    auto H = build_algebra(q2, {});
    auto SH = to_structure(H);
    std::map<std::string, Vec> assign2;
    for (const auto& ar : q2.arrows) {
        Vec v(SH.dim(), Q(0));
        v[H.arrow_basis(q2.arrow_id(ar.label))] = 1;
        assign2[ar.label] = v;
    }
    CHECK_FALSE(verify_relations(SH, q2, {r}, assign2, SH.idempotents));
    // dropping an arrow from the assignment's span must raise BadAssignment
    std::map<std::string, Vec> degenerate = assign2;
    degenerate["b"] = degenerate["a"];
    CHECK_THROWS_AS(verify_relations(SH, q2, {r}, degenerate, SH.idempotents),
                    BadAssignment);
}

TEST_CASE("socle of the dual numbers and its quotient") {
    Quiver q;
    q.vertices = {"v"};
    q.arrows = {{"x", 0, 0}};
    Relation r;
    r.terms.emplace_back(Q(1), path_from_word(q, {"x", "x"}));
    auto S = to_structure(build_algebra(q, {r}));
    auto soc = socle_basis(S);
    REQUIRE(soc.size() == 1);
    CHECK(soc[0][1] != 0);  // spanned by x
    auto B = socle_quotient(S);
    CHECK(B.dim() == 1);
}
