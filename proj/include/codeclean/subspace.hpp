#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "codeclean/errors.hpp"
#include "codeclean/pauli.hpp"

namespace codeclean {

/*
 * Column convention used throughout: the 2n-dimensional symplectic space has
 * columns 0..n-1 = x bits by qubit index, columns n..2n-1 = z bits. The
 * reduced row echelon form under this fixed order is the canonical basis;
 * two constructions of the same span produce identical objects.
 */
inline bool word_col(const PauliWord& w, int c) {
    return c < w.n ? w.x.test(std::size_t(c)) : w.z.test(std::size_t(c - w.n));
}

/*
 * A subgroup of the abelianized Pauli group, stored as its canonical RREF
 * basis. Rows are kept fully reduced and sorted by pivot column at all
 * times, so `rows_` is unique for a given span.
 */
class BinarySubspace {
public:
    BinarySubspace() = default;
    explicit BinarySubspace(int n) : n_(n) {}

    static BinarySubspace span_of(int n, std::span<const PauliWord> gens) {
        BinarySubspace v(n);
        for (const auto& g : gens) v.insert(g);
        return v;
    }
    static BinarySubspace span_of(int n, const std::vector<PauliWord>& gens) {
        return span_of(n, std::span<const PauliWord>(gens));
    }

    int qubits() const { return n_; }
    int rank() const { return int(rows_.size()); }
    const std::vector<PauliWord>& basis() const { return rows_; }

    /* residual of p after elimination against the basis; zero iff p in span */
    PauliWord reduce(PauliWord p) const {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (word_col(p, pivots_[i])) p *= rows_[i];
        return p;
    }

    bool contains(const PauliWord& p) const { return reduce(p).identity(); }

    /* grows the span; returns true if p was independent */
    bool insert(const PauliWord& p) {
        if (p.n != n_) throw std::invalid_argument("subspace insert: qubit count mismatch");
        PauliWord r = reduce(p);
        if (r.identity()) return false;
        int piv = leading_col(r);
        // clear the new pivot from existing rows, then place the row in order
        for (auto& row : rows_)
            if (word_col(row, piv)) row *= r;
        auto it = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
        std::size_t idx = std::size_t(it - pivots_.begin());
        pivots_.insert(it, piv);
        rows_.insert(rows_.begin() + std::ptrdiff_t(idx), r);
        return true;
    }

    bool operator==(const BinarySubspace& o) const { return n_ == o.n_ && rows_ == o.rows_; }

    /*
     * Symplectic complement: all words commuting with every basis element.
     * Each constraint row is the basis element with x and z halves swapped,
     * turning the symplectic form into a plain dot product; the complement
     * is the nullspace of that constraint matrix.
     */
    BinarySubspace complement() const {
        std::vector<PauliWord> constraints;
        constraints.reserve(rows_.size());
        for (const auto& r : rows_) {
            PauliWord c(n_);
            c.x = r.z;
            c.z = r.x;
            constraints.push_back(c);
        }
        return nullspace(n_, constraints);
    }

    /*
     * Subgroup of elements vanishing on every column selected by `zero_col`.
     * Eliminates against the selected columns first; the rows never consumed
     * as pivots are exactly a basis of that subgroup.
     */
    template <typename Pred>
    BinarySubspace zero_on_columns(Pred zero_col) const {
        std::vector<PauliWord> work = rows_;
        std::vector<bool> used(work.size(), false);
        for (int c = 0; c < 2 * n_; ++c) {
            if (!zero_col(c)) continue;
            int piv = -1;
            for (std::size_t i = 0; i < work.size(); ++i)
                if (!used[i] && word_col(work[i], c)) {
                    piv = int(i);
                    break;
                }
            if (piv < 0) continue;
            used[std::size_t(piv)] = true;
            for (std::size_t i = 0; i < work.size(); ++i)
                if (int(i) != piv && word_col(work[i], c)) work[i] *= work[std::size_t(piv)];
        }
        BinarySubspace out(n_);
        for (std::size_t i = 0; i < work.size(); ++i)
            if (!used[i] && !work[i].identity()) out.insert(work[i]);
        return out;
    }

    /* V_M: the subgroup of elements supported inside M */
    BinarySubspace supported_on(const Region& m) const {
        return zero_on_columns([&](int c) { return !m.contains(c < n_ ? c : c - n_); });
    }

    /* elements with no Z part (the X-type subgroup), or no X part */
    BinarySubspace pure_x_part() const {
        return zero_on_columns([&](int c) { return c >= n_; });
    }
    BinarySubspace pure_z_part() const {
        return zero_on_columns([&](int c) { return c < n_; });
    }

    /*
     * Find v in the span with restrict(v, M) = restrict(target, M), if any.
     * Pivots chosen inside the M columns only; the residual check decides
     * feasibility.
     */
    std::optional<PauliWord> solve_on(const PauliWord& target, const Region& m) const {
        if (target.n != n_) throw std::invalid_argument("solve_on: qubit count mismatch");
        std::vector<PauliWord> work = rows_;
        std::vector<bool> used(work.size(), false);
        PauliWord v(n_);
        for (int c = 0; c < 2 * n_; ++c) {
            int q = c < n_ ? c : c - n_;
            if (!m.contains(q)) continue;
            int piv = -1;
            for (std::size_t i = 0; i < work.size(); ++i)
                if (!used[i] && word_col(work[i], c)) {
                    piv = int(i);
                    break;
                }
            if (piv < 0) continue;
            used[std::size_t(piv)] = true;
            for (std::size_t i = 0; i < work.size(); ++i)
                if (int(i) != piv && word_col(work[i], c)) work[i] *= work[std::size_t(piv)];
            // work rows drift as elimination proceeds, so resolve the pivot's
            // contribution against the current residual immediately
            PauliWord res = target;
            res *= v;
            if (word_col(res, c)) v *= work[std::size_t(piv)];
        }
        PauliWord res = target;
        res *= v;
        if (restrict_to(res, m).identity()) return v;
        return std::nullopt;
    }

private:
    static int leading_col(const PauliWord& w) {
        int fx = w.x.find_first();
        if (fx >= 0) return fx;
        int fz = w.z.find_first();
        return w.n + fz;
    }

    /* nullspace of the matrix whose rows are `constraints` (plain dot product) */
    static BinarySubspace nullspace(int n, std::vector<PauliWord> constraints) {
        // row reduce the constraint matrix, tracking pivot columns
        std::vector<PauliWord> rows;
        std::vector<int> pivs;
        for (auto& c : constraints) {
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (word_col(c, pivs[i])) c *= rows[i];
            if (c.identity()) continue;
            int piv = leading_col(c);
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (word_col(rows[i], piv)) rows[i] *= c;
            rows.push_back(c);
            pivs.push_back(piv);
        }
        std::vector<bool> is_pivot(std::size_t(2 * n), false);
        for (int p : pivs) is_pivot[std::size_t(p)] = true;
        BinarySubspace out(n);
        for (int f = 0; f < 2 * n; ++f) {
            if (is_pivot[std::size_t(f)]) continue;
            PauliWord w(n);
            if (f < n)
                w.x.set(std::size_t(f));
            else
                w.z.set(std::size_t(f - n));
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (word_col(rows[i], f)) {
                    int p = pivs[i];
                    if (p < n)
                        w.x.set(std::size_t(p));
                    else
                        w.z.set(std::size_t(p - n));
                }
            out.insert(w);
        }
        return out;
    }

    int n_ = 0;
    std::vector<PauliWord> rows_;
    std::vector<int> pivots_;
};

inline BinarySubspace span(int n, const std::vector<PauliWord>& gens) {
    return BinarySubspace::span_of(n, gens);
}

inline BinarySubspace symplectic_complement(const BinarySubspace& v) { return v.complement(); }

inline BinarySubspace sum(const BinarySubspace& v, const BinarySubspace& w) {
    if (v.qubits() != w.qubits()) throw std::invalid_argument("sum: qubit count mismatch");
    BinarySubspace out = v;
    for (const auto& r : w.basis()) out.insert(r);
    return out;
}

/*
 * V and W intersect as (Vp + Wp)p under the symplectic complement: the form
 * is nondegenerate, so the complement is an involution and dualizes sums
 * into intersections.
 */
inline BinarySubspace intersect(const BinarySubspace& v, const BinarySubspace& w) {
    if (v.qubits() != w.qubits()) throw std::invalid_argument("intersect: qubit count mismatch");
    return sum(v.complement(), w.complement()).complement();
}

struct Decomposition {
    BinarySubspace on_a;    // G_A
    BinarySubspace on_b;    // G_B
    BinarySubspace rest;    // G' completing the direct sum
};

/*
 * G = G_A + G_B + G' with the sum direct. G' is any completion of a basis of
 * G_A + G_B to one of G; only its dimension is canonical.
 */
inline Decomposition decompose(const BinarySubspace& g, const Region& a, const Region& b) {
    const int n = g.qubits();
    if (a.universe() != n || b.universe() != n)
        throw std::invalid_argument("decompose: region universe mismatch");
    if ((a & b).size() != 0 || (a | b).size() != n)
        throw std::invalid_argument("decompose: A and B must partition the qubit set");
    Decomposition d;
    d.on_a = g.supported_on(a);
    d.on_b = g.supported_on(b);
    BinarySubspace acc = sum(d.on_a, d.on_b);
    d.rest = BinarySubspace(n);
    for (const auto& row : g.basis()) {
        PauliWord r = acc.reduce(row);
        if (!r.identity()) {
            acc.insert(r);
            d.rest.insert(r);
        }
    }
    if (d.on_a.rank() + d.on_b.rank() + d.rest.rank() != g.rank())
        throw internal_error("decompose: direct sum rank mismatch");
    return d;
}

inline std::optional<PauliWord> solve_in_subspace(const BinarySubspace& v, const PauliWord& target,
                                                  const Region& m) {
    return v.solve_on(target, m);
}

}  // namespace codeclean
