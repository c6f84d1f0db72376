#pragma once
// Finite dimensional bound quiver algebras kQ/I over Q.
//
// The build enumerates paths by length, reduces modulo the (admissible)
// ideal generated by the relations, and discovers the least N with all
// length-N paths inside the ideal.  The basis consists of the residues of
// the paths of length < N that are not pivot columns of the ideal's
// echelon form (pivots chosen at the longest path of each generator, so
// normal forms rewrite long paths in terms of shorter ones).

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tubular/matrix.hpp"
#include "tubular/quiver.hpp"

namespace tubular {

// Sparse linear combination of algebra basis elements.
using SVec = std::vector<std::pair<int, Q>>;

inline SVec svec_normalize(std::map<int, Q> acc) {
    SVec r;
    for (auto& [i, c] : acc)
        if (c != 0) r.emplace_back(i, c);
    return r;
}

class BoundQuiverAlgebra {
public:
    Quiver quiver;
    std::vector<Relation> relations;
    int nilpotency = 0;                  // least N with all length-N paths in I
    std::vector<Path> basis;             // trivial paths first, then by length
    // mult_table[i][j] = basis[i] * basis[j]  (basis[j] acts first)
    std::vector<std::vector<SVec>> mult_table;

    int dim() const { return int(basis.size()); }

    int idempotent(int vertex) const { return vertex; }  // e_v = basis[v]

    int src_of(int b) const { return basis[b].src(quiver); }
    int tgt_of(int b) const { return basis[b].tgt(quiver); }

    int arrow_basis(int arrow_id) const {
        for (int b = 0; b < dim(); ++b)
            if (basis[b].arrows.size() == 1 && basis[b].arrows[0] == arrow_id) return b;
        throw BadInput("arrow not in basis");
    }

    SVec mult(int i, int j) const {
        if (tgt_of(j) != src_of(i)) return {};
        return mult_table[i][j];
    }

    SVec mult(const SVec& x, const SVec& y) const {
        std::map<int, Q> acc;
        for (const auto& [i, ci] : x)
            for (const auto& [j, cj] : y)
                for (const auto& [k, ck] : mult(i, j)) acc[k] += ci * cj * ck;
        return svec_normalize(std::move(acc));
    }

    // Normal form of an arbitrary path of the quiver.
    SVec reduce_path(const Path& p) const {
        if (p.length() >= nilpotency) return {};
        auto it = path_id_.find(p);
        if (it == path_id_.end()) return {};  // not enumerated => in ideal
        return normal_forms_[it->second];
    }

    const BoundQuiverAlgebra& op() const;

    // Basis index of the trivial/arrow path in the opposite algebra.
    // (labels coincide, so lookups go through labels)

    friend BoundQuiverAlgebra build_algebra(const Quiver&, const std::vector<Relation>&, int);

private:
    std::map<Path, int> path_id_;            // enumerated paths of length < N
    std::vector<SVec> normal_forms_;         // per enumerated path id
    mutable std::shared_ptr<BoundQuiverAlgebra> op_;
};

inline BoundQuiverAlgebra build_algebra(const Quiver& quiv,
                                        const std::vector<Relation>& rels,
                                        int cap = 64) {
    // admissibility checks
    for (const auto& r : rels) {
        if (r.terms.empty()) throw NotAdmissible("empty relation");
        int s = r.terms[0].second.src(quiv), t = r.terms[0].second.tgt(quiv);
        for (const auto& [c, p] : r.terms) {
            if (p.length() < 2) throw NotAdmissible("relation term of length < 2");
            if (p.src(quiv) != s || p.tgt(quiv) != t)
                throw NotAdmissible("relation terms not parallel");
        }
    }
    int max_rel_len = 2;
    for (const auto& r : rels)
        for (const auto& [c, p] : r.terms) max_rel_len = std::max(max_rel_len, p.length());

    // enumerate paths by length; ids ordered by (length, lex)
    std::vector<std::vector<Path>> by_len;
    std::map<Path, int> id_of;
    std::vector<Path> all;
    auto add_level = [&](std::vector<Path> lvl) {
        for (auto& p : lvl) {
            id_of[p] = int(all.size());
            all.push_back(p);
        }
        by_len.push_back(std::move(lvl));
    };
    {
        std::vector<Path> triv;
        for (int v = 0; v < int(quiv.vertices.size()); ++v) {
            Path p;
            p.start = v;
            triv.push_back(p);
        }
        add_level(std::move(triv));
    }
    auto extend = [&]() {
        std::vector<Path> next;
        for (const auto& p : by_len.back())
            for (int a = 0; a < int(quiv.arrows.size()); ++a)
                if (quiv.arrows[a].src == p.tgt(quiv)) {
                    Path np = p;
                    np.start = p.src(quiv);
                    np.arrows.push_back(a);
                    next.push_back(np);
                }
        add_level(std::move(next));
    };

    const int slack = max_rel_len + 2;
    int N = -1;
    std::unique_ptr<RowSpace> ideal;
    int gen_len_done = 0;  // generators of total length <= this are inserted

    auto rebuild = [&](int width) {
        // re-insert every generator of total length < width coordinates
        ideal = std::make_unique<RowSpace>(width, /*pivot_last=*/true);
        gen_len_done = 0;
    };

    auto insert_generators_up_to = [&](int L) {
        // generators u * r * w with len(u) + maxlen(r) + len(w) <= L
        for (const auto& r : rels) {
            int rmax = 0, rs = r.terms[0].second.src(quiv), rt = r.terms[0].second.tgt(quiv);
            for (const auto& [c, p] : r.terms) rmax = std::max(rmax, p.length());
            for (int lu = 0; lu + rmax <= L; ++lu) {
                if (lu >= int(by_len.size())) break;
                for (const auto& u : by_len[lu]) {
                    if (u.tgt(quiv) != rs) continue;
                    for (int lw = 0; lu + rmax + lw <= L; ++lw) {
                        if (lw >= int(by_len.size())) break;
                        for (const auto& w : by_len[lw]) {
                            if (w.src(quiv) != rt) continue;
                            if (lu + rmax + lw <= gen_len_done) continue;
                            Vec g(ideal->width(), Q(0));
                            for (const auto& [c, p] : r.terms) {
                                Path full = concat(quiv, concat(quiv, u, p), w);
                                g[id_of.at(full)] += c;
                            }
                            ideal->insert(std::move(g));
                        }
                    }
                }
            }
        }
        gen_len_done = L;
    };

    for (int n_try = 1; n_try <= cap; ++n_try) {
        while (int(by_len.size()) <= n_try + slack) extend();
        rebuild(int(all.size()));
        insert_generators_up_to(n_try + slack);
        bool all_in = true;
        for (const auto& p : by_len[n_try]) {
            Vec e(ideal->width(), Q(0));
            e[id_of.at(p)] = 1;
            if (!ideal->contains(e)) {
                all_in = false;
                break;
            }
        }
        if (all_in) {
            N = n_try;
            break;
        }
    }
    if (N < 0) throw NotFiniteDimensional("no nilpotency degree up to cap " + std::to_string(cap));

    // Final echelon over paths of length <= N + slack; basis = non-pivot
    // paths of length < N.
    BoundQuiverAlgebra A;
    A.quiver = quiv;
    A.relations = rels;
    A.nilpotency = N;

    int short_count = 0;
    for (int l = 0; l < N; ++l) short_count += int(by_len[l].size());

    std::vector<int> basis_of_path(short_count, -1);
    for (int pid = 0; pid < short_count; ++pid) {
        if (ideal->is_pivot(pid)) continue;
        basis_of_path[pid] = A.dim();
        A.basis.push_back(all[pid]);
        A.path_id_[all[pid]] = pid;
    }
    // re-key path ids to enumerate only short paths, with normal forms
    A.path_id_.clear();
    A.normal_forms_.assign(short_count, {});
    for (int pid = 0; pid < short_count; ++pid) {
        A.path_id_[all[pid]] = pid;
        Vec e(ideal->width(), Q(0));
        e[pid] = 1;
        Vec nf = ideal->reduce(std::move(e));
        SVec s;
        for (int j = 0; j < int(nf.size()); ++j) {
            if (nf[j] == 0) continue;
            if (j >= short_count || basis_of_path[j] < 0)
                throw std::logic_error("normal form hit non-basis path");
            s.emplace_back(basis_of_path[j], nf[j]);
        }
        A.normal_forms_[pid] = std::move(s);
    }

    // multiplication table: basis[i]*basis[j] = reduce(concat(basis[j], basis[i]))
    A.mult_table.assign(A.dim(), std::vector<SVec>(A.dim()));
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < A.dim(); ++j) {
            if (A.basis[j].tgt(quiv) != A.basis[i].src(quiv)) continue;
            Path p = concat(quiv, A.basis[j], A.basis[i]);
            if (p.length() >= N) continue;
            auto it = A.path_id_.find(p);
            if (it == A.path_id_.end()) continue;
            A.mult_table[i][j] = A.normal_forms_[it->second];
        }
    return A;
}

inline const BoundQuiverAlgebra& BoundQuiverAlgebra::op() const {
    if (!op_) {
        Quiver qop = quiver.opposite();
        std::vector<Relation> rop;
        for (const auto& r : relations) {
            Relation rr;
            for (const auto& [c, p] : r.terms)
                rr.terms.emplace_back(c, reverse_path(qop, p, quiver));
            rop.push_back(std::move(rr));
        }
        op_ = std::make_shared<BoundQuiverAlgebra>(
            build_algebra(qop, rop, std::max(64, nilpotency + 4)));
    }
    return *op_;
}

// Reverse of a path, as a path of the opposite algebra's quiver.
inline Path op_path(const BoundQuiverAlgebra& A, const Path& p) {
    return reverse_path(A.op().quiver, p, A.quiver);
}

// Transport a sparse element of A to A.op() (basis paths reverse).
inline SVec op_elem(const BoundQuiverAlgebra& A, const SVec& x) {
    const BoundQuiverAlgebra& B = A.op();
    std::map<int, Q> acc;
    for (const auto& [i, c] : x) {
        SVec nf = B.reduce_path(op_path(A, A.basis[i]));
        for (const auto& [j, d] : nf) acc[j] += c * d;
    }
    return svec_normalize(std::move(acc));
}

}  // namespace tubular
