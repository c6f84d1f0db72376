#pragma once
// Structure-constant algebras over Q: a basis with a multiplication table,
// optionally a distinguished complete set of orthogonal local idempotents.
// Supplies the Jacobson radical (trace-form criterion), the Ext quiver of a
// basic algebra, socle and socle quotients, and relation verification.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tubular/matrix.hpp"
#include "tubular/path_algebra.hpp"
#include "tubular/quiver.hpp"

namespace tubular {

struct NotBasic : std::runtime_error {
    explicit NotBasic(const std::string& w) : std::runtime_error("NotBasic: " + w) {}
};
struct BadAssignment : std::runtime_error {
    explicit BadAssignment(const std::string& w) : std::runtime_error("BadAssignment: " + w) {}
};
struct SocleNotTwoSided : std::runtime_error {
    explicit SocleNotTwoSided(const std::string& w)
        : std::runtime_error("SocleNotTwoSided: " + w) {}
};

class StructureAlgebra {
public:
    std::vector<std::string> labels;
    // table[i][j] = b_i * b_j (b_j acts first under map composition)
    std::vector<std::vector<SVec>> table;
    // Distinguished idempotents as dense coordinate vectors (may be empty
    // for algebras like endomorphism rings without an aligned idempotent
    // basis).  When present they are orthogonal, local and sum to 1.
    std::vector<Vec> idempotents;
    std::vector<std::string> idem_names;

    int dim() const { return int(labels.size()); }

    Vec unit_vec;  // coordinates of 1 (sum of idempotents, or supplied)

    Vec basis_vec(int i) const {
        Vec v(dim(), Q(0));
        v[i] = 1;
        return v;
    }

    Vec mult(const Vec& x, const Vec& y) const {
        Vec r(dim(), Q(0));
        for (int i = 0; i < dim(); ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < dim(); ++j) {
                if (y[j] == 0) continue;
                for (const auto& [k, c] : table[i][j]) r[k] += x[i] * y[j] * c;
            }
        }
        return r;
    }

    // Matrix of left multiplication by x.
    Mat left_mult(const Vec& x) const {
        Mat m(dim(), dim());
        for (int j = 0; j < dim(); ++j) {
            Vec col = mult(x, basis_vec(j));
            for (int i = 0; i < dim(); ++i) m.at(i, j) = col[i];
        }
        return m;
    }

    Mat right_mult(const Vec& x) const {
        Mat m(dim(), dim());
        for (int j = 0; j < dim(); ++j) {
            Vec col = mult(basis_vec(j), x);
            for (int i = 0; i < dim(); ++i) m.at(i, j) = col[i];
        }
        return m;
    }

    StructureAlgebra opposite() const {
        StructureAlgebra o = *this;
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j) o.table[i][j] = table[j][i];
        return o;
    }
};

// The Jacobson radical, via the trace form of the regular representation
// (characteristic zero): rad A = {x : tr(L_x L_y) = 0 for all y}.
inline std::vector<Vec> radical_basis(const StructureAlgebra& A) {
    int n = A.dim();
    std::vector<Mat> L(n);
    for (int i = 0; i < n; ++i) L[i] = A.left_mult(A.basis_vec(i));
    Mat T(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) T.at(i, j) = (L[i] * L[j]).trace();
    return kernel_basis(T);
}

// Span of pairwise products of two families of vectors.
inline std::vector<Vec> product_span(const StructureAlgebra& A, const std::vector<Vec>& xs,
                                     const std::vector<Vec>& ys) {
    RowSpace rs(A.dim());
    std::vector<Vec> out;
    for (const auto& x : xs)
        for (const auto& y : ys) {
            Vec p = A.mult(x, y);
            if (rs.insert(p)) out.push_back(std::move(p));
        }
    return out;
}

inline StructureAlgebra to_structure(const BoundQuiverAlgebra& A) {
    StructureAlgebra S;
    for (int i = 0; i < A.dim(); ++i) S.labels.push_back(A.basis[i].str(A.quiver));
    S.table = A.mult_table;
    int nv = int(A.quiver.vertices.size());
    for (int v = 0; v < nv; ++v) {
        Vec e(A.dim(), Q(0));
        e[v] = 1;
        S.idempotents.push_back(std::move(e));
        S.idem_names.push_back(A.quiver.vertices[v]);
    }
    S.unit_vec.assign(A.dim(), Q(0));
    for (int v = 0; v < nv; ++v) S.unit_vec[v] = 1;
    return S;
}

// dim of e_j (rad/rad^2) e_i for each pair, i.e. the arrow multiplicities
// i -> j of the Ext quiver of a basic algebra.
inline Quiver ext_quiver(const StructureAlgebra& A) {
    if (A.idempotents.empty()) throw BadInput("algebra without distinguished idempotents");
    auto rad = radical_basis(A);
    auto rad2 = product_span(A, rad, rad);

    // basicness: e_j (A/rad) e_i must be k for i == j and 0 otherwise
    int nv = int(A.idempotents.size());
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j) {
            RowSpace corner(A.dim()), rcorner(A.dim());
            for (int b = 0; b < A.dim(); ++b)
                corner.insert(A.mult(A.idempotents[j], A.mult(A.basis_vec(b), A.idempotents[i])));
            for (const auto& r : rad)
                rcorner.insert(A.mult(A.idempotents[j], A.mult(r, A.idempotents[i])));
            int quot = corner.dim() - rcorner.dim();
            if (quot != (i == j ? 1 : 0))
                throw NotBasic("semisimple quotient has a corner of dimension " +
                               std::to_string(quot) + " at (" + A.idem_names[i] + "," +
                               A.idem_names[j] + ")");
        }

    Quiver q;
    q.vertices = A.idem_names;
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j) {
            RowSpace low(A.dim());
            for (const auto& r : rad2) low.insert(A.mult(A.idempotents[j], A.mult(r, A.idempotents[i])));
            int base = low.dim();
            RowSpace both(A.dim());
            for (const auto& r : rad2) both.insert(A.mult(A.idempotents[j], A.mult(r, A.idempotents[i])));
            for (const auto& r : rad) both.insert(A.mult(A.idempotents[j], A.mult(r, A.idempotents[i])));
            int mult = both.dim() - base;
            for (int k = 0; k < mult; ++k) {
                std::string lbl = "a_" + A.idem_names[i] + "_" + A.idem_names[j];
                if (mult > 1) lbl += "_" + std::to_string(k);
                q.arrows.push_back({lbl, i, j});
            }
        }
    return q;
}

// Evaluate a path word under an assignment of arrows to algebra elements.
inline Vec eval_path(const StructureAlgebra& A, const Quiver& q, const Path& p,
                     const std::map<std::string, Vec>& assign, const std::vector<Vec>& vert_idem) {
    if (p.arrows.empty()) return vert_idem[p.start];
    Vec acc = assign.at(q.arrows[p.arrows[0]].label);
    for (size_t i = 1; i < p.arrows.size(); ++i)
        acc = A.mult(assign.at(q.arrows[p.arrows[i]].label), acc);
    return acc;
}

// Check that an assignment of quiver data into A kills the given relations.
// vert_idem maps quiver vertices to idempotents of A; assign maps arrow
// labels to elements of A.  Throws BadAssignment when the assigned arrow
// residues fail to span rad/rad^2.
inline bool verify_relations(const StructureAlgebra& A, const Quiver& q,
                             const std::vector<Relation>& rels,
                             const std::map<std::string, Vec>& assign,
                             const std::vector<Vec>& vert_idem) {
    auto rad = radical_basis(A);
    auto rad2 = product_span(A, rad, rad);
    RowSpace span(A.dim());
    for (const auto& r : rad2) span.insert(r);
    int base = span.dim();
    for (const auto& a : q.arrows) span.insert(assign.at(a.label));
    int with_arrows = span.dim();
    RowSpace full(A.dim());
    for (const auto& r : rad2) full.insert(r);
    for (const auto& r : rad) full.insert(r);
    if (with_arrows != full.dim() || with_arrows - base != int(q.arrows.size()))
        throw BadAssignment("arrow residues do not freely span rad/rad^2");
    for (const auto& a : q.arrows) {
        // arrows must respect endpoints: e_tgt x e_src = x
        Vec x = assign.at(a.label);
        Vec y = A.mult(vert_idem[a.tgt], A.mult(x, vert_idem[a.src]));
        if (y != x) throw BadAssignment("arrow " + a.label + " violates its endpoints");
    }
    for (const auto& r : rels) {
        Vec acc(A.dim(), Q(0));
        for (const auto& [c, p] : r.terms)
            acc = vec_add(acc, vec_scale(c, eval_path(A, q, p, assign, vert_idem)));
        if (!is_zero(acc)) return false;
    }
    return true;
}

// Socle as a two-sided ideal: the intersection of the left and right
// annihilators of the radical.  Throws when these differ.
inline std::vector<Vec> socle_basis(const StructureAlgebra& A) {
    auto rad = radical_basis(A);
    int n = A.dim();
    // right annihilator of rad: {x : r x = 0 for all r in rad}
    Mat R(int(rad.size()) * n, n), L(int(rad.size()) * n, n);
    for (int k = 0; k < int(rad.size()); ++k) {
        Mat lm = A.left_mult(rad[k]);
        Mat rm = A.right_mult(rad[k]);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                R.at(k * n + i, j) = lm.at(i, j);
                L.at(k * n + i, j) = rm.at(i, j);
            }
    }
    auto rann = kernel_basis(R);
    auto lann = kernel_basis(L);
    RowSpace rs(n);
    for (const auto& v : rann) rs.insert(v);
    std::vector<Vec> inter;
    RowSpace ls(n);
    for (const auto& v : lann) ls.insert(v);
    // intersection via kernel of stacked quotient maps: solve dims by
    // rank formula dim(U∩W) = dim U + dim W - dim(U+W)
    RowSpace sum(n);
    for (const auto& v : rann) sum.insert(v);
    for (const auto& v : lann) sum.insert(v);
    int want = rs.dim() + ls.dim() - sum.dim();
    // compute intersection: x ∈ U with ls.contains(x): solve in U-coords
    Mat U(n, rs.dim());
    for (int j = 0; j < rs.dim(); ++j)
        for (int i = 0; i < n; ++i) U.at(i, j) = rs.rows()[j][i];
    // constraints: reduce U columns by ls rows; kernel of residue map
    Mat res(n, rs.dim());
    for (int j = 0; j < rs.dim(); ++j) {
        Vec col(n);
        for (int i = 0; i < n; ++i) col[i] = U.at(i, j);
        Vec red = ls.reduce(col);
        for (int i = 0; i < n; ++i) res.at(i, j) = red[i];
    }
    for (const auto& coeff : kernel_basis(res)) inter.push_back(U.apply(coeff));
    if (int(inter.size()) != want) throw std::logic_error("intersection dimension mismatch");
    if (rs.dim() != want || ls.dim() != want)
        throw SocleNotTwoSided("left and right socles differ");
    return inter;
}

// Quotient of A by a two-sided ideal spanned by `ideal`.  The quotient
// basis is the residues of the basis elements outside the ideal's pivot
// set; idempotents are carried along.
inline StructureAlgebra quotient_algebra(const StructureAlgebra& A, const std::vector<Vec>& ideal) {
    int n = A.dim();
    RowSpace I(n);
    for (const auto& v : ideal) I.insert(v);
    std::vector<int> keep;            // basis elements surviving
    std::vector<int> coord_of(n, -1);  // old basis -> new coord (if kept)
    for (int b = 0; b < n; ++b)
        if (!I.is_pivot(b)) {
            coord_of[b] = int(keep.size());
            keep.push_back(b);
        }
    int m = int(keep.size());
    auto project = [&](Vec v) {
        v = I.reduce(std::move(v));
        Vec w(m, Q(0));
        for (int b = 0; b < n; ++b)
            if (v[b] != 0) {
                if (coord_of[b] < 0) throw std::logic_error("bad ideal reduction");
                w[coord_of[b]] = v[b];
            }
        return w;
    };
    StructureAlgebra B;
    for (int b : keep) B.labels.push_back(A.labels[b]);
    B.table.assign(m, std::vector<SVec>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Vec p = project(A.mult(A.basis_vec(keep[i]), A.basis_vec(keep[j])));
            SVec s;
            for (int k = 0; k < m; ++k)
                if (p[k] != 0) s.emplace_back(k, p[k]);
            B.table[i][j] = std::move(s);
        }
    for (const auto& e : A.idempotents) B.idempotents.push_back(project(e));
    B.idem_names = A.idem_names;
    if (!A.unit_vec.empty()) B.unit_vec = project(A.unit_vec);
    return B;
}

inline StructureAlgebra socle_quotient(const StructureAlgebra& A) {
    return quotient_algebra(A, socle_basis(A));
}

}  // namespace tubular
