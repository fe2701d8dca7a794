#pragma once

#include <atomic>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "codeclean/lattice.hpp"
#include "codeclean/subspace.hpp"

namespace codeclean {

struct CodeParams {
    int n = 0;
    int k = 0;
    int gauge_qubits = 0;
    int rank_g = 0;
    int rank_s = 0;
};

struct CssCounts {
    int g_x = 0, g_z = 0;
    int g_bare_x = 0, g_bare_z = 0;
};

struct RegionReport {
    Region region;
    int g_dressed = 0;
    int g_bare = 0;
    bool correctable = false;
    std::optional<CssCounts> css;
};

struct DistanceResult {
    int d = 0;
    bool exact = false;
    std::optional<PauliWord> witness;
};

/*
 * Shared algebra for one code: the gauge group G, the stabilizer S = G
 * intersect Gperp, their symplectic complements, and the CSS sector pieces
 * when applicable. All counting operations reduce to ranks of
 * support-restricted subgroups of these spaces.
 */
class CodeAnalysis {
public:
    explicit CodeAnalysis(CodeSpec spec) : spec_(std::move(spec)) {
        const int n = spec_.n();
        g_ = span(n, spec_.gauge_generators);
        g_perp_ = g_.complement();
        s_ = intersect(g_, g_perp_);
        s_perp_ = s_.complement();
        const int twok = 2 * n - g_.rank() - s_.rank();
        if (twok < 0 || twok % 2 != 0)
            throw internal_error("code_params: 2k = 2n - [G] - [S] is not an even nonnegative integer");
        params_ = {n, twok / 2, (g_.rank() - s_.rank()) / 2, g_.rank(), s_.rank()};
        if (spec_.css) {
            gx_ = g_.pure_x_part();
            gz_ = g_.pure_z_part();
            sx_ = s_.pure_x_part();
            sz_ = s_.pure_z_part();
            dressed_x_ = sz_.complement().pure_x_part();
            dressed_z_ = sx_.complement().pure_z_part();
            bare_x_ = gz_.complement().pure_x_part();
            bare_z_ = gx_.complement().pure_z_part();
        }
    }

    const CodeSpec& spec() const { return spec_; }
    const CodeParams& params() const { return params_; }
    const BinarySubspace& gauge_group() const { return g_; }
    const BinarySubspace& stabilizer_group() const { return s_; }
    const BinarySubspace& gauge_perp() const { return g_perp_; }
    const BinarySubspace& stabilizer_perp() const { return s_perp_; }
    const BinarySubspace& gauge_x() const { return gx_; }
    const BinarySubspace& gauge_z() const { return gz_; }

    bool is_dressed_logical(const PauliWord& p) const {
        for (const auto& s : s_.basis())
            if (symplectic_product(p, s)) return false;
        return true;
    }

    /*
     * g(M) = [(Sperp)_M] - [G_M] and g_bare(M) = [(Gperp)_M] - [S_M]; the
     * dressed count vanishes exactly when M is correctable.
     */
    RegionReport g_counts(const Region& m) const {
        RegionReport r;
        r.region = m;
        r.g_bare = g_perp_.supported_on(m).rank() - s_.supported_on(m).rank();
        r.g_dressed = s_perp_.supported_on(m).rank() - g_.supported_on(m).rank();
        r.correctable = r.g_dressed == 0;
        if (spec_.css) {
            CssCounts c;
            c.g_x = dressed_x_.supported_on(m).rank() - gx_.supported_on(m).rank();
            c.g_z = dressed_z_.supported_on(m).rank() - gz_.supported_on(m).rank();
            c.g_bare_x = bare_x_.supported_on(m).rank() - sx_.supported_on(m).rank();
            c.g_bare_z = bare_z_.supported_on(m).rank() - sz_.supported_on(m).rank();
            r.css = c;
        }
        return r;
    }

    bool is_correctable(const Region& m) const {
        return s_perp_.supported_on(m).rank() == g_.supported_on(m).rank();
    }

    /*
     * Replace the dressed logical x by the equivalent y = x*g acting
     * trivially on M, where g in G matches x on M. Feasible whenever M is
     * correctable (the cleaning lemma); an infeasible solve means the
     * precondition failed.
     */
    PauliWord clean(const PauliWord& x, const Region& m) const {
        if (!is_dressed_logical(x)) throw contract_error("clean: operator is not in S-perp");
        auto g = g_.solve_on(x, m);
        if (!g) throw contract_error("clean: region is not correctable for this operator");
        PauliWord y = x;
        y *= *g;
        if (!restrict_to(y, m).identity()) throw internal_error("clean: output still touches M");
        return y;
    }

    /*
     * Exhaustive minimum-weight search for a dressed logical (in Sperp, not
     * in G), ascending by weight. For CSS codes the search runs over pure-X
     * and pure-Z words only; the X/Z components of a dressed logical are
     * separately dressed logicals, so a minimum-weight one may be taken
     * pure. Within the first successful weight the lexicographically least
     * word (z bits then x bits, little-endian integer order) is returned,
     * independent of thread schedule.
     */
    DistanceResult distance(int max_weight, unsigned threads = 1) const {
        if (max_weight < 1) throw std::invalid_argument("distance: max_weight must be >= 1");
        std::vector<int> all(std::size_t(spec_.n()));
        for (int q = 0; q < spec_.n(); ++q) all[std::size_t(q)] = q;
        for (int wgt = 1; wgt <= max_weight; ++wgt) {
            auto hit = search_weight_level(all, wgt, threads);
            if (hit) return {wgt, true, hit};
        }
        return {max_weight + 1, false, std::nullopt};
    }

    /*
     * A minimum-weight nontrivial dressed logical supported on M, or none
     * exactly when g(M) = 0.
     */
    std::optional<PauliWord> logical_on_region(const Region& m) const {
        RegionReport rep = g_counts(m);
        if (rep.g_dressed == 0) return std::nullopt;
        auto qubits = m.qubits();
        for (int wgt = 1; wgt <= int(qubits.size()); ++wgt) {
            auto hit = search_weight_level(qubits, wgt, 1);
            if (hit) return hit;
        }
        throw internal_error("logical_on_region: g(M) > 0 but no representative found");
    }

    /*
     * 2k words generating Sperp/G. For CSS codes the first k are pure-X and
     * the last k pure-Z. The symplectic form restricted to the classes is
     * nondegenerate (checked).
     */
    std::vector<PauliWord> logical_class_basis() const {
        std::vector<PauliWord> reps;
        if (params_.k == 0) return reps;
        BinarySubspace acc = g_;
        auto harvest = [&](const BinarySubspace& source) {
            for (const auto& row : source.basis())
                if (acc.insert(row)) reps.push_back(row);
        };
        if (spec_.css) {
            harvest(dressed_x_);
            harvest(dressed_z_);
        } else {
            harvest(s_perp_);
        }
        if (int(reps.size()) != 2 * params_.k)
            throw internal_error("logical_class_basis: extracted " + std::to_string(reps.size()) +
                                 " classes, expected " + std::to_string(2 * params_.k));
        // Gram matrix over GF(2) must have full rank 2k
        const std::size_t m = reps.size();
        std::vector<BitVec> gram(m, BitVec(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (symplectic_product(reps[i], reps[j])) gram[i].set(j);
        std::size_t rank = 0;
        for (std::size_t c = 0; c < m; ++c) {
            std::size_t piv = m;
            for (std::size_t i = rank; i < m; ++i)
                if (gram[i].test(c)) {
                    piv = i;
                    break;
                }
            if (piv == m) continue;
            std::swap(gram[rank], gram[piv]);
            for (std::size_t i = 0; i < m; ++i)
                if (i != rank && gram[i].test(c)) gram[i] ^= gram[rank];
            ++rank;
        }
        if (rank != m)
            throw internal_error("logical_class_basis: degenerate symplectic form on the quotient");
        return reps;
    }

private:
    bool is_hit(const PauliWord& v) const { return is_dressed_logical(v) && !g_.contains(v); }

    /*
     * Scan every candidate of the given weight over `qubits`, returning the
     * least hit by tie-break key. The level is always scanned in full so the
     * result does not depend on scheduling.
     */
    std::optional<PauliWord> search_weight_level(const std::vector<int>& qubits, int wgt,
                                                 unsigned threads) const {
        const int m = int(qubits.size());
        if (wgt > m) return std::nullopt;
        unsigned t = threads == 0 ? std::thread::hardware_concurrency() : threads;
        if (t < 1) t = 1;
        unsigned lanes = std::min<unsigned>(t, unsigned(m - wgt + 1));
        if (lanes <= 1) return scan_lane(qubits, wgt, 0, 1);

        std::vector<std::optional<PauliWord>> best(lanes);
        std::vector<std::thread> pool;
        for (unsigned lane = 0; lane < lanes; ++lane)
            pool.emplace_back([&, lane] { best[lane] = scan_lane(qubits, wgt, lane, lanes); });
        for (auto& th : pool) th.join();
        std::optional<PauliWord> out;
        for (auto& b : best)
            if (b && (!out || b->compare_key(*out) < 0)) out = b;
        return out;
    }

    /* lane scans combinations whose first index position is lane mod stride */
    std::optional<PauliWord> scan_lane(const std::vector<int>& qubits, int wgt, unsigned lane,
                                       unsigned stride) const {
        const int m = int(qubits.size());
        std::optional<PauliWord> best;
        std::vector<int> comb(std::size_t(wgt));
        for (int first = int(lane); first <= m - wgt; first += int(stride)) {
            comb[0] = first;
            for (int i = 1; i < wgt; ++i) comb[std::size_t(i)] = first + i;
            while (true) {
                try_candidates(qubits, comb, best);
                // advance positions 1..wgt-1 (position 0 is pinned per lane)
                int i = wgt - 1;
                while (i >= 1 && comb[std::size_t(i)] == m - wgt + i) --i;
                if (i < 1) break;
                ++comb[std::size_t(i)];
                for (int j = i + 1; j < wgt; ++j) comb[std::size_t(j)] = comb[std::size_t(j - 1)] + 1;
            }
        }
        return best;
    }

    void try_candidates(const std::vector<int>& qubits, const std::vector<int>& comb,
                        std::optional<PauliWord>& best) const {
        const int n = spec_.n();
        if (spec_.css) {
            for (char letter : {'X', 'Z'}) {
                PauliWord v(n);
                for (int ci : comb) v.apply(qubits[std::size_t(ci)], letter);
                if (is_hit(v) && (!best || v.compare_key(*best) < 0)) best = v;
            }
        } else {
            const int wgt = int(comb.size());
            std::vector<int> letter(std::size_t(wgt), 0);
            static constexpr char kLetters[3] = {'X', 'Y', 'Z'};
            while (true) {
                PauliWord v(n);
                for (int i = 0; i < wgt; ++i)
                    v.apply(qubits[std::size_t(comb[std::size_t(i)])], kLetters[letter[std::size_t(i)]]);
                if (is_hit(v) && (!best || v.compare_key(*best) < 0)) best = v;
                int i = wgt - 1;
                while (i >= 0 && letter[std::size_t(i)] == 2) letter[std::size_t(i--)] = 0;
                if (i < 0) break;
                ++letter[std::size_t(i)];
            }
        }
    }

    CodeSpec spec_;
    BinarySubspace g_, g_perp_, s_, s_perp_;
    BinarySubspace gx_, gz_, sx_, sz_;
    BinarySubspace dressed_x_, dressed_z_, bare_x_, bare_z_;
    CodeParams params_;
};

inline BinarySubspace stabilizer_group(const CodeSpec& spec) {
    BinarySubspace g = span(spec.n(), spec.gauge_generators);
    return intersect(g, g.complement());
}

inline CodeParams code_params(const CodeSpec& spec) { return CodeAnalysis(spec).params(); }

inline RegionReport g_counts(const CodeSpec& spec, const Region& m) {
    return CodeAnalysis(spec).g_counts(m);
}

inline bool is_correctable(const CodeSpec& spec, const Region& m) {
    return CodeAnalysis(spec).is_correctable(m);
}

}  // namespace codeclean
