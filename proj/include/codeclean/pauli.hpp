#pragma once

#include <cctype>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "codeclean/bitvec.hpp"
#include "codeclean/errors.hpp"

namespace codeclean {

/*
 * A subset of qubit indices [0, n). Carries its universe size so set
 * complements are well defined.
 */
struct Region {
    BitVec bits;

    Region() = default;
    explicit Region(int n) : bits(std::size_t(n)) {}
    Region(int n, std::initializer_list<int> qs) : bits(std::size_t(n)) {
        for (int q : qs) bits.set(std::size_t(q));
    }

    int universe() const { return int(bits.size()); }
    int size() const { return int(bits.count()); }
    bool empty() const { return bits.none(); }
    bool contains(int q) const { return bits.test(std::size_t(q)); }
    void add(int q) { bits.set(std::size_t(q)); }

    Region complement() const {
        Region r(universe());
        for (int q = 0; q < universe(); ++q)
            if (!contains(q)) r.add(q);
        return r;
    }

    std::vector<int> qubits() const {
        std::vector<int> out;
        for (int q = 0; q < universe(); ++q)
            if (contains(q)) out.push_back(q);
        return out;
    }

    bool is_subset_of(const Region& o) const { return bits.is_subset_of(o.bits); }
    bool intersects(const Region& o) const { return bits.intersects(o.bits); }

    friend Region operator|(Region a, const Region& b) {
        a.bits |= b.bits;
        return a;
    }
    friend Region operator&(Region a, const Region& b) {
        a.bits &= b.bits;
        return a;
    }
    /* set difference */
    friend Region operator-(const Region& a, const Region& b) {
        Region r = a;
        r.bits = r.bits.and_not(b.bits);
        return r;
    }

    bool operator==(const Region&) const = default;
};

/*
 * An n-qubit Pauli operator with phases dropped: a pair of length-n bit
 * vectors over GF(2). Multiplication is componentwise XOR.
 */
struct PauliWord {
    int n = 0;
    BitVec x, z;

    PauliWord() = default;
    explicit PauliWord(int n_) : n(n_), x(std::size_t(n_)), z(std::size_t(n_)) {}

    static PauliWord single(int n, int qubit, char p) {
        PauliWord w(n);
        w.apply(qubit, p);
        return w;
    }

    /* multiply in the single-qubit factor p at `qubit` */
    void apply(int qubit, char p) {
        switch (p) {
            case 'X': x.flip(std::size_t(qubit)); break;
            case 'Z': z.flip(std::size_t(qubit)); break;
            case 'Y':
                x.flip(std::size_t(qubit));
                z.flip(std::size_t(qubit));
                break;
            default: throw parse_error(std::string("unknown Pauli letter '") + p + "'");
        }
    }

    bool identity() const { return x.none() && z.none(); }

    int weight() const { return int((x | z).count()); }

    Region support() const {
        Region r(n);
        r.bits = x | z;
        return r;
    }

    /* letter at one qubit: 'I', 'X', 'Y' or 'Z' */
    char letter(int qubit) const {
        bool bx = x.test(std::size_t(qubit)), bz = z.test(std::size_t(qubit));
        return bx ? (bz ? 'Y' : 'X') : (bz ? 'Z' : 'I');
    }

    bool pure_x() const { return z.none(); }
    bool pure_z() const { return x.none(); }

    PauliWord& operator*=(const PauliWord& o) {
        x ^= o.x;
        z ^= o.z;
        return *this;
    }
    friend PauliWord operator*(PauliWord a, const PauliWord& b) { return a *= b; }

    bool operator==(const PauliWord&) const = default;

    /* order by the bit pattern x|z read as an integer; used for tie-breaks */
    std::strong_ordering compare_key(const PauliWord& o) const {
        auto c = z.compare_as_integer(o.z);
        if (c != std::strong_ordering::equal) return c;
        return x.compare_as_integer(o.x);
    }
};

/*
 * Symplectic form on GF(2)^{2n}: zero exactly when the two Pauli operators
 * commute.
 */
inline int symplectic_product(const PauliWord& a, const PauliWord& b) {
    if (a.n != b.n)
        throw std::invalid_argument("symplectic_product: operands act on different qubit counts");
    return int(a.x.parity_and(b.z)) ^ int(a.z.parity_and(b.x));
}

inline int weight(const PauliWord& p) { return p.weight(); }

/* zero every tensor factor outside A */
inline PauliWord restrict_to(const PauliWord& p, const Region& a) {
    PauliWord r = p;
    r.x &= a.bits;
    r.z &= a.bits;
    return r;
}

/* --- flat-index text form: "X@0 Z@3", empty string = identity --- */

inline std::string format_pauli_flat(const PauliWord& p) {
    std::ostringstream os;
    bool first = true;
    for (int q = 0; q < p.n; ++q) {
        char l = p.letter(q);
        if (l == 'I') continue;
        if (!first) os << ' ';
        os << l << '@' << q;
        first = false;
    }
    return os.str();
}

inline PauliWord parse_pauli_flat(const std::string& text, int n) {
    PauliWord w(n);
    std::istringstream is(text);
    std::string term;
    while (is >> term) {
        if (term.size() < 3 || term[1] != '@')
            throw parse_error("bad Pauli term '" + term + "': expected P@index");
        char letter = term[0];
        std::size_t pos = 0;
        int q = 0;
        try {
            q = std::stoi(term.substr(2), &pos);
        } catch (const std::exception&) {
            throw parse_error("bad Pauli term '" + term + "': index is not an integer");
        }
        if (pos != term.size() - 2)
            throw parse_error("bad Pauli term '" + term + "': trailing characters");
        if (q < 0 || q >= n)
            throw parse_error("bad Pauli term '" + term + "': qubit index out of range");
        w.apply(q, letter);
    }
    return w;
}

}  // namespace codeclean
