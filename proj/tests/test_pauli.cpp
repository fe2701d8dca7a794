#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "codeclean/pauli.hpp"

using namespace codeclean;

TEST_CASE("symplectic product on single-qubit pairs") {
    PauliWord x0 = PauliWord::single(1, 0, 'X');
    PauliWord y0 = PauliWord::single(1, 0, 'Y');
    PauliWord z0 = PauliWord::single(1, 0, 'Z');
    CHECK(symplectic_product(x0, z0) == 1);
    CHECK(symplectic_product(x0, x0) == 0);
    CHECK(symplectic_product(y0, z0) == 1);
    CHECK(symplectic_product(x0, y0) == 1);
    CHECK_THROWS_AS(symplectic_product(x0, PauliWord::single(2, 0, 'X')), std::invalid_argument);
}

TEST_CASE("weight counts acted-on qubits") {
    PauliWord id(4);
    CHECK(weight(id) == 0);
    PauliWord xz(4);
    xz.apply(0, 'X');
    xz.apply(1, 'Z');
    CHECK(weight(xz) == 2);
    CHECK(weight(PauliWord::single(4, 2, 'Y')) == 1);
}

TEST_CASE("symplectic product is bilinear and alternating") {
    std::mt19937_64 rng(7);
    const int n = 11;
    auto random_word = [&] {
        PauliWord w(n);
        for (int q = 0; q < n; ++q) {
            if (rng() & 1) w.x.flip(std::size_t(q));
            if (rng() & 1) w.z.flip(std::size_t(q));
        }
        return w;
    };
    for (int trial = 0; trial < 200; ++trial) {
        PauliWord a = random_word(), b = random_word(), c = random_word();
        CHECK(symplectic_product(a, a) == 0);
        CHECK(symplectic_product(a, b) == symplectic_product(b, a));
        int lhs = symplectic_product(a * b, c);
        int rhs = symplectic_product(a, c) ^ symplectic_product(b, c);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("restriction zeroes bits outside the region") {
    PauliWord w(4);
    w.apply(0, 'X');
    w.apply(1, 'Z');
    Region a(4, {0});
    CHECK(restrict_to(w, a) == PauliWord::single(4, 0, 'X'));
    Region all(4, {0, 1, 2, 3});
    CHECK(restrict_to(w, all) == w);
    Region none(4);
    CHECK(restrict_to(w, none).identity());
    CHECK(restrict_to(restrict_to(w, a), a) == restrict_to(w, a));
}

TEST_CASE("flat Pauli text round trip") {
    PauliWord w(6);
    w.apply(0, 'X');
    w.apply(3, 'Y');
    w.apply(5, 'Z');
    std::string text = format_pauli_flat(w);
    CHECK(text == "X@0 Y@3 Z@5");
    CHECK(parse_pauli_flat(text, 6) == w);
    CHECK(parse_pauli_flat("", 6).identity());
    // same-qubit terms accumulate by multiplication
    CHECK(parse_pauli_flat("X@2 Z@2", 6) == PauliWord::single(6, 2, 'Y'));
    CHECK_THROWS_AS(parse_pauli_flat("X@9", 6), parse_error);
    CHECK_THROWS_AS(parse_pauli_flat("Q@1", 6), parse_error);
    CHECK_THROWS_AS(parse_pauli_flat("X?1", 6), parse_error);
}

TEST_CASE("region set algebra") {
    Region a(5, {0, 1, 2});
    Region b(5, {2, 3});
    CHECK((a & b) == Region(5, {2}));
    CHECK((a | b) == Region(5, {0, 1, 2, 3}));
    CHECK((a - b) == Region(5, {0, 1}));
    CHECK(a.complement() == Region(5, {3, 4}));
    CHECK(Region(5, {2}).is_subset_of(a));
    CHECK(a.intersects(b));
    CHECK_FALSE(Region(5, {0}).intersects(b));
}
