#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "codeclean/errors.hpp"
#include "codeclean/pauli.hpp"
#include "codeclean/subspace.hpp"

namespace codeclean {

enum class Boundary { open, periodic };

struct Lattice {
    int dimension = 1;
    std::vector<int> dims;      // L_1..L_D in lattice (cell) units
    Boundary boundary = Boundary::open;

    long sites() const {
        return std::accumulate(dims.begin(), dims.end(), 1L, std::multiplies<long>());
    }
    int min_edge() const { return *std::min_element(dims.begin(), dims.end()); }
};

/*
 * A geometric code: qubits at declared coordinates, a gauge generator list,
 * and optionally an explicit (possibly overcomplete) stabilizer generator
 * list used for energy computations.
 *
 * Edge-qubit codes store doubled coordinates (a qubit on the horizontal edge
 * of cell (i,j) sits at (2i+1, 2j)). The per-axis scale is inferred: 2 when
 * any coordinate reaches dims[axis], else 1. Every geometric notion (slabs,
 * tiles, interaction range) lives in cell units, cell = coord / scale.
 */
struct CodeSpec {
    std::string name;
    Lattice lattice;
    std::vector<std::vector<int>> qubit_coords;
    std::vector<PauliWord> gauge_generators;
    std::vector<PauliWord> stabilizer_generators;   // empty when absent
    bool has_stabilizer_list = false;
    bool css = false;

    // derived by finalize()
    std::vector<int> coord_scale;
    std::map<std::vector<int>, int> coord_index;

    int n() const { return int(qubit_coords.size()); }

    int cell(int qubit, int axis) const {
        return qubit_coords[std::size_t(qubit)][std::size_t(axis)] / coord_scale[std::size_t(axis)];
    }

    std::optional<int> qubit_at(const std::vector<int>& coords) const {
        auto it = coord_index.find(coords);
        if (it == coord_index.end()) return std::nullopt;
        return it->second;
    }

    void finalize() {
        const int d = lattice.dimension;
        coord_scale.assign(std::size_t(d), 1);
        for (const auto& c : qubit_coords)
            for (int a = 0; a < d; ++a)
                if (c[std::size_t(a)] >= lattice.dims[std::size_t(a)]) coord_scale[std::size_t(a)] = 2;
        coord_index.clear();
        for (int q = 0; q < n(); ++q) {
            auto [it, fresh] = coord_index.emplace(qubit_coords[std::size_t(q)], q);
            if (!fresh)
                throw validation_error(name + ": duplicate qubit coordinate (qubits " +
                                       std::to_string(it->second) + " and " + std::to_string(q) + ")");
        }
    }

    bool operator==(const CodeSpec& o) const {
        return name == o.name && lattice.dimension == o.lattice.dimension &&
               lattice.dims == o.lattice.dims && lattice.boundary == o.lattice.boundary &&
               qubit_coords == o.qubit_coords && gauge_generators == o.gauge_generators &&
               stabilizer_generators == o.stabilizer_generators &&
               has_stabilizer_list == o.has_stabilizer_list && css == o.css;
    }
};

inline void validate(const CodeSpec& spec) {
    const int d = spec.lattice.dimension;
    if (d < 1) throw validation_error(spec.name + ": dimension must be >= 1");
    if (int(spec.lattice.dims.size()) != d)
        throw validation_error(spec.name + ": dims length does not match dimension");
    for (int a = 0; a < d; ++a)
        if (spec.lattice.dims[std::size_t(a)] < 1)
            throw validation_error(spec.name + ": dims must be positive");
    for (int q = 0; q < spec.n(); ++q) {
        const auto& c = spec.qubit_coords[std::size_t(q)];
        if (int(c.size()) != d)
            throw validation_error(spec.name + ": qubit " + std::to_string(q) +
                                   " has wrong coordinate arity");
        for (int a = 0; a < d; ++a) {
            int hi = spec.coord_scale[std::size_t(a)] * spec.lattice.dims[std::size_t(a)];
            if (c[std::size_t(a)] < 0 || c[std::size_t(a)] >= hi)
                throw validation_error(spec.name + ": qubit " + std::to_string(q) +
                                       " coordinate out of range");
        }
    }
    auto check_words = [&](const std::vector<PauliWord>& ws, const char* kind) {
        for (std::size_t i = 0; i < ws.size(); ++i) {
            if (ws[i].n != spec.n())
                throw validation_error(spec.name + ": " + kind + " generator " + std::to_string(i) +
                                       " has wrong qubit count");
            if (spec.css && !ws[i].pure_x() && !ws[i].pure_z())
                throw validation_error(spec.name + ": css=true but " + kind + " generator " +
                                       std::to_string(i) + " mixes X and Z");
        }
    };
    check_words(spec.gauge_generators, "gauge");
    check_words(spec.stabilizer_generators, "stabilizer");
    if (spec.has_stabilizer_list) {
        BinarySubspace g = span(spec.n(), spec.gauge_generators);
        for (std::size_t i = 0; i < spec.stabilizer_generators.size(); ++i) {
            const auto& s = spec.stabilizer_generators[i];
            for (std::size_t j = 0; j < spec.gauge_generators.size(); ++j)
                if (symplectic_product(s, spec.gauge_generators[j]))
                    throw validation_error(spec.name + ": stabilizer generator " + std::to_string(i) +
                                           " anticommutes with gauge generator " + std::to_string(j));
            if (!g.contains(s))
                throw validation_error(spec.name + ": stabilizer generator " + std::to_string(i) +
                                       " is not in the gauge group span");
        }
    }
}

/* supports of each gauge generator, as regions */
inline std::vector<Region> generator_supports(const CodeSpec& spec) {
    std::vector<Region> out;
    out.reserve(spec.gauge_generators.size());
    for (const auto& g : spec.gauge_generators) out.push_back(g.support());
    return out;
}

/*
 * Smallest w such that every generator support fits an axis-aligned cell
 * hypercube of edge w (wrap-aware under periodic boundary).
 */
inline int interaction_range(const CodeSpec& spec) {
    if (spec.gauge_generators.empty())
        throw std::invalid_argument(spec.name + ": interaction_range needs at least one generator");
    const int d = spec.lattice.dimension;
    const bool per = spec.lattice.boundary == Boundary::periodic;
    int w = 1;
    for (const auto& g : spec.gauge_generators) {
        auto qs = g.support().qubits();
        if (qs.empty()) continue;
        for (int a = 0; a < d; ++a) {
            const int big_l = spec.lattice.dims[std::size_t(a)];
            std::vector<int> cs;
            cs.reserve(qs.size());
            for (int q : qs) cs.push_back(spec.cell(q, a));
            std::sort(cs.begin(), cs.end());
            cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
            int window;
            if (!per) {
                window = cs.back() - cs.front() + 1;
            } else {
                // drop the largest circular run of empty cells
                int max_gap = cs.front() + big_l - cs.back() - 1;
                for (std::size_t i = 0; i + 1 < cs.size(); ++i)
                    max_gap = std::max(max_gap, cs[i + 1] - cs[i] - 1);
                window = big_l - max_gap;
            }
            w = std::max(w, window);
        }
    }
    return w;
}

struct Boundaries {
    Region m_prime;     // union of supports touching M
    Region outer;       // external boundary, inside M^c
    Region inner;       // internal boundary, inside M
    Region boundary;    // outer + inner
    Region interior;    // M minus inner
};

inline Boundaries boundaries_from_supports(int n, const std::vector<Region>& supports,
                                           const Region& m) {
    Region mc = m.complement();
    Region m_prime(n), mc_prime(n);
    for (const auto& s : supports) {
        if (s.intersects(m)) m_prime = m_prime | s;
        if (s.intersects(mc)) mc_prime = mc_prime | s;
    }
    Boundaries b;
    b.m_prime = m_prime;
    b.outer = m_prime & mc;
    b.inner = mc_prime & m;
    b.boundary = b.outer | b.inner;
    b.interior = m - b.inner;
    return b;
}

inline Boundaries boundary_sets(const CodeSpec& spec, const Region& m) {
    if (m.universe() != spec.n())
        throw std::invalid_argument("boundary_sets: region universe mismatch");
    return boundaries_from_supports(spec.n(), generator_supports(spec), m);
}

/*
 * All qubits whose cell coordinate on `axis` (1-based) falls in the width
 * window starting at offset. The offset wraps under periodic boundary.
 */
inline Region slab(const CodeSpec& spec, int axis, int offset, int width) {
    const int d = spec.lattice.dimension;
    if (axis < 1 || axis > d) throw std::invalid_argument("slab: axis out of range");
    const int big_l = spec.lattice.dims[std::size_t(axis - 1)];
    if (width < 1 || width > big_l) throw std::invalid_argument("slab: width out of range");
    const bool per = spec.lattice.boundary == Boundary::periodic;
    if (!per && (offset < 0 || offset + width > big_l))
        throw std::invalid_argument("slab: window exceeds open boundary");
    int start = per ? ((offset % big_l) + big_l) % big_l : offset;
    Region r(spec.n());
    for (int q = 0; q < spec.n(); ++q) {
        int c = spec.cell(q, axis - 1);
        int rel = c - start;
        if (per) rel = ((rel % big_l) + big_l) % big_l;
        if (rel >= 0 && rel < width) r.add(q);
    }
    return r;
}

struct Tiling {
    std::vector<Region> tiles;
    Region off_tile;
    int edge = 0;
    int period = 0;
    bool widened_last_gap = false;   // periodic dims not divisible by the period
};

/*
 * Fill the lattice with cell hypercubes of edge l on a grid of period
 * l+(w-1) anchored at the origin. Gaps of width w-1 guarantee that no gauge
 * generator touches two tiles; the guarantee is checked.
 */
inline Tiling tile(const CodeSpec& spec, int l) {
    const int d = spec.lattice.dimension;
    const int w = interaction_range(spec);
    if (l < 1) throw std::invalid_argument("tile: edge must be positive");
    if (l + (w - 1) > spec.lattice.min_edge())
        throw std::invalid_argument("tile: edge " + std::to_string(l) +
                                    " too large for interaction range " + std::to_string(w));
    const int p = l + (w - 1);
    const bool per = spec.lattice.boundary == Boundary::periodic;

    Tiling t;
    t.edge = l;
    t.period = p;
    std::vector<std::vector<int>> axis_pos;
    axis_pos.resize(std::size_t(d));
    for (int a = 0; a < d; ++a) {
        const int big_l = spec.lattice.dims[std::size_t(a)];
        int count = per ? big_l / p : (big_l - l) / p + 1;
        for (int i = 0; i < count; ++i) axis_pos[std::size_t(a)].push_back(i * p);
        if (per && big_l % p != 0) t.widened_last_gap = true;
    }

    // cartesian product of anchor positions
    std::vector<std::vector<int>> anchors{{}};
    for (int a = 0; a < d; ++a) {
        std::vector<std::vector<int>> next;
        for (const auto& base : anchors)
            for (int pos : axis_pos[std::size_t(a)]) {
                auto v = base;
                v.push_back(pos);
                next.push_back(std::move(v));
            }
        anchors = std::move(next);
    }

    Region covered(spec.n());
    for (const auto& anchor : anchors) {
        Region box(spec.n());
        for (int q = 0; q < spec.n(); ++q) {
            bool in = true;
            for (int a = 0; a < d && in; ++a) {
                int c = spec.cell(q, a) - anchor[std::size_t(a)];
                in = c >= 0 && c < l;
            }
            if (in) box.add(q);
        }
        covered = covered | box;
        t.tiles.push_back(std::move(box));
    }
    t.off_tile = covered.complement();

    for (std::size_t gi = 0; gi < spec.gauge_generators.size(); ++gi) {
        Region s = spec.gauge_generators[gi].support();
        int touched = 0;
        for (const auto& tl : t.tiles)
            if (s.intersects(tl)) ++touched;
        if (touched > 1)
            throw internal_error("tile: generator " + std::to_string(gi) + " touches " +
                                 std::to_string(touched) + " tiles");
    }
    return t;
}

/* origin-anchored cell hypercube of edge l, as a qubit region */
inline Region hypercube_region(const CodeSpec& spec, int l) {
    Region r(spec.n());
    for (int q = 0; q < spec.n(); ++q) {
        bool in = true;
        for (int a = 0; a < spec.lattice.dimension && in; ++a) in = spec.cell(q, a) < l;
        if (in) r.add(q);
    }
    return r;
}

/* --- code-aware Pauli text: "X@(0,1) Z@(2,3)"; P@i accepted for 1-D --- */

inline std::string format_pauli(const CodeSpec& spec, const PauliWord& p) {
    std::ostringstream os;
    bool first = true;
    for (int q = 0; q < p.n; ++q) {
        char l = p.letter(q);
        if (l == 'I') continue;
        if (!first) os << ' ';
        os << l << '@';
        const auto& c = spec.qubit_coords[std::size_t(q)];
        if (spec.lattice.dimension == 1) {
            os << c[0];
        } else {
            os << '(';
            for (std::size_t a = 0; a < c.size(); ++a) os << (a ? "," : "") << c[a];
            os << ')';
        }
        first = false;
    }
    return os.str();
}

inline PauliWord parse_pauli(const CodeSpec& spec, const std::string& text) {
    PauliWord w(spec.n());
    std::istringstream is(text);
    std::string term;
    while (is >> term) {
        if (term.size() < 3 || term[1] != '@')
            throw parse_error("bad Pauli term '" + term + "': expected P@(c1,...) or P@i");
        char letter = term[0];
        std::string rest = term.substr(2);
        std::vector<int> coords;
        if (rest.front() == '(') {
            if (rest.back() != ')')
                throw parse_error("bad Pauli term '" + term + "': unbalanced parentheses");
            std::string inner = rest.substr(1, rest.size() - 2);
            std::istringstream cs(inner);
            std::string tok;
            while (std::getline(cs, tok, ',')) {
                try {
                    coords.push_back(std::stoi(tok));
                } catch (const std::exception&) {
                    throw parse_error("bad Pauli term '" + term + "': coordinate is not an integer");
                }
            }
        } else {
            if (spec.lattice.dimension != 1)
                throw parse_error("bad Pauli term '" + term +
                                  "': flat index form is only accepted for 1-D codes");
            try {
                coords.push_back(std::stoi(rest));
            } catch (const std::exception&) {
                throw parse_error("bad Pauli term '" + term + "': index is not an integer");
            }
        }
        if (int(coords.size()) != spec.lattice.dimension)
            throw parse_error("bad Pauli term '" + term + "': coordinate arity mismatch");
        auto q = spec.qubit_at(coords);
        if (!q)
            throw validation_error("Pauli term '" + term + "': no qubit at that coordinate");
        w.apply(*q, letter);
    }
    return w;
}

}  // namespace codeclean
