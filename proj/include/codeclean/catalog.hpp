#pragma once

#include <map>
#include <string>

#include "codeclean/lattice.hpp"

namespace codeclean {

inline CodeSpec repetition_code(int n) {
    if (n < 2) throw std::invalid_argument("repetition: n must be >= 2");
    CodeSpec s;
    s.name = "repetition";
    s.lattice = {1, {n}, Boundary::open};
    for (int i = 0; i < n; ++i) s.qubit_coords.push_back({i});
    for (int i = 0; i + 1 < n; ++i) {
        PauliWord g(n);
        g.apply(i, 'Z');
        g.apply(i + 1, 'Z');
        s.gauge_generators.push_back(g);
    }
    s.stabilizer_generators = s.gauge_generators;
    s.has_stabilizer_list = true;
    s.css = true;
    s.finalize();
    return s;
}

/* L x L open grid, nearest-neighbour ZZ bonds in both directions */
inline CodeSpec ising2d_code(int l) {
    if (l < 2) throw std::invalid_argument("ising2d: L must be >= 2");
    const int n = l * l;
    auto q = [l](int x, int y) { return x * l + y; };
    CodeSpec s;
    s.name = "ising2d";
    s.lattice = {2, {l, l}, Boundary::open};
    for (int x = 0; x < l; ++x)
        for (int y = 0; y < l; ++y) s.qubit_coords.push_back({x, y});
    for (int x = 0; x < l; ++x)
        for (int y = 0; y < l; ++y) {
            if (x + 1 < l) {
                PauliWord g(n);
                g.apply(q(x, y), 'Z');
                g.apply(q(x + 1, y), 'Z');
                s.gauge_generators.push_back(g);
            }
            if (y + 1 < l) {
                PauliWord g(n);
                g.apply(q(x, y), 'Z');
                g.apply(q(x, y + 1), 'Z');
                s.gauge_generators.push_back(g);
            }
        }
    s.stabilizer_generators = s.gauge_generators;
    s.has_stabilizer_list = true;
    s.css = true;
    s.finalize();
    return s;
}

/*
 * Toric code on an L x L periodic cell lattice with one qubit per edge
 * (n = 2L^2). Horizontal edge of cell (i,j) at doubled coordinate
 * (2i+1, 2j), vertical edge at (2i, 2j+1). Stars are X-type on the four
 * edges at a vertex; plaquettes are Z-type on the four edges of a face. The
 * full star+plaquette list (overcomplete by two) doubles as the stabilizer
 * generator list for energy computations.
 */
inline CodeSpec toric2d_code(int l) {
    if (l < 2) throw std::invalid_argument("toric2d: L must be >= 2");
    const int n = 2 * l * l;
    auto east = [l](int i, int j) { return ((i % l + l) % l) * l + ((j % l + l) % l); };
    auto north = [l](int i, int j) { return l * l + ((i % l + l) % l) * l + ((j % l + l) % l); };
    CodeSpec s;
    s.name = "toric2d";
    s.lattice = {2, {l, l}, Boundary::periodic};
    s.qubit_coords.resize(std::size_t(n));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            s.qubit_coords[std::size_t(east(i, j))] = {2 * i + 1, 2 * j};
            s.qubit_coords[std::size_t(north(i, j))] = {2 * i, 2 * j + 1};
        }
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            PauliWord star(n);
            star.apply(east(i, j), 'X');
            star.apply(east(i - 1, j), 'X');
            star.apply(north(i, j), 'X');
            star.apply(north(i, j - 1), 'X');
            s.gauge_generators.push_back(star);
        }
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            PauliWord plaq(n);
            plaq.apply(east(i, j), 'Z');
            plaq.apply(east(i, j + 1), 'Z');
            plaq.apply(north(i, j), 'Z');
            plaq.apply(north(i + 1, j), 'Z');
            s.gauge_generators.push_back(plaq);
        }
    s.stabilizer_generators = s.gauge_generators;
    s.has_stabilizer_list = true;
    s.css = true;
    s.finalize();
    return s;
}

/* 3-D toric code on a periodic cubic lattice, qubits on edges (n = 3L^3). */
inline CodeSpec toric3d_code(int l) {
    if (l < 2) throw std::invalid_argument("toric3d: L must be >= 2");
    const int n = 3 * l * l * l;
    auto wrap = [l](int c) { return (c % l + l) % l; };
    auto edge = [&](int axis, int i, int j, int k) {
        return axis * l * l * l + wrap(i) * l * l + wrap(j) * l + wrap(k);
    };
    CodeSpec s;
    s.name = "toric3d";
    s.lattice = {3, {l, l, l}, Boundary::periodic};
    s.qubit_coords.resize(std::size_t(n));
    for (int a = 0; a < 3; ++a)
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j)
                for (int k = 0; k < l; ++k) {
                    std::vector<int> c = {2 * i, 2 * j, 2 * k};
                    c[std::size_t(a)] += 1;
                    s.qubit_coords[std::size_t(edge(a, i, j, k))] = c;
                }
    const int e[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            for (int k = 0; k < l; ++k) {
                PauliWord star(n);
                for (int a = 0; a < 3; ++a) {
                    star.apply(edge(a, i, j, k), 'X');
                    star.apply(edge(a, i - e[a][0], j - e[a][1], k - e[a][2]), 'X');
                }
                s.gauge_generators.push_back(star);
            }
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            for (int k = 0; k < l; ++k)
                for (int a = 0; a < 3; ++a)
                    for (int b = a + 1; b < 3; ++b) {
                        PauliWord plaq(n);
                        plaq.apply(edge(a, i, j, k), 'Z');
                        plaq.apply(edge(a, i + e[b][0], j + e[b][1], k + e[b][2]), 'Z');
                        plaq.apply(edge(b, i, j, k), 'Z');
                        plaq.apply(edge(b, i + e[a][0], j + e[a][1], k + e[a][2]), 'Z');
                        s.gauge_generators.push_back(plaq);
                    }
    s.stabilizer_generators = s.gauge_generators;
    s.has_stabilizer_list = true;
    s.css = true;
    s.finalize();
    return s;
}

/*
 * Bacon-Shor subsystem code on an L x L open grid: gauge group from XX on
 * vertically adjacent pairs and ZZ on horizontally adjacent pairs. The
 * stabilizers are X products over adjacent row pairs and Z products over
 * adjacent column pairs.
 */
inline CodeSpec baconshor_code(int l) {
    if (l < 2) throw std::invalid_argument("baconshor: L must be >= 2");
    const int n = l * l;
    auto q = [l](int x, int y) { return x * l + y; };
    CodeSpec s;
    s.name = "baconshor";
    s.lattice = {2, {l, l}, Boundary::open};
    for (int x = 0; x < l; ++x)
        for (int y = 0; y < l; ++y) s.qubit_coords.push_back({x, y});
    for (int x = 0; x < l; ++x)
        for (int y = 0; y + 1 < l; ++y) {
            PauliWord g(n);
            g.apply(q(x, y), 'X');
            g.apply(q(x, y + 1), 'X');
            s.gauge_generators.push_back(g);
        }
    for (int y = 0; y < l; ++y)
        for (int x = 0; x + 1 < l; ++x) {
            PauliWord g(n);
            g.apply(q(x, y), 'Z');
            g.apply(q(x + 1, y), 'Z');
            s.gauge_generators.push_back(g);
        }
    for (int y = 0; y + 1 < l; ++y) {
        PauliWord row(n);
        for (int x = 0; x < l; ++x) {
            row.apply(q(x, y), 'X');
            row.apply(q(x, y + 1), 'X');
        }
        s.stabilizer_generators.push_back(row);
    }
    for (int x = 0; x + 1 < l; ++x) {
        PauliWord col(n);
        for (int y = 0; y < l; ++y) {
            col.apply(q(x, y), 'Z');
            col.apply(q(x + 1, y), 'Z');
        }
        s.stabilizer_generators.push_back(col);
    }
    s.has_stabilizer_list = true;
    s.css = true;
    s.finalize();
    return s;
}

inline CodeSpec catalog(const std::string& name, const std::map<std::string, long>& params) {
    auto get = [&](const char* key) {
        auto it = params.find(key);
        if (it == params.end())
            throw std::invalid_argument("catalog " + name + ": missing parameter '" + key + "'");
        return int(it->second);
    };
    auto only = [&](const char* key) {
        for (const auto& [k, v] : params)
            if (k != key)
                throw std::invalid_argument("catalog " + name + ": unknown parameter '" + k + "'");
    };
    CodeSpec s;
    if (name == "repetition") {
        only("n");
        s = repetition_code(get("n"));
    } else if (name == "ising2d") {
        only("L");
        s = ising2d_code(get("L"));
    } else if (name == "toric2d") {
        only("L");
        s = toric2d_code(get("L"));
    } else if (name == "toric3d") {
        only("L");
        s = toric3d_code(get("L"));
    } else if (name == "baconshor") {
        only("L");
        s = baconshor_code(get("L"));
    } else {
        throw std::invalid_argument("catalog: unknown code name '" + name + "'");
    }
    validate(s);
    return s;
}

}  // namespace codeclean
