/* Copyright (C) 2026 The qaclcd authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#include <doctest.h>

#include "qaclcd/chain_ring.hpp"
#include "qaclcd/group_algebra.hpp"

using namespace qaclcd;

namespace {
AlgebraElem<HermField> random_elem(const GroupSpec& G, const HermField& H, Rng& rng) {
    AlgebraElem<HermField> a(&G, &H);
    for (auto& x : a.c) x = static_cast<uint32_t>(rng.below(H.order()));
    return a;
}
}  // namespace

TEST_CASE("word serialization round-trips, both digit forms") {
    Rng rng(301);
    for (uint64_t base : {9ull, 16ull, 25ull, 81ull}) {  // 81 exercises the dotted form
        for (int k = 0; k < 200; ++k) {
            size_t n = 1 + rng.below(11);
            std::vector<uint32_t> w(n);
            for (auto& x : w) x = static_cast<uint32_t>(rng.below(base));
            CHECK(decode_word(encode_word(w, base), base, n) == w);
        }
    }
    CHECK(encode_word({2, 0, 0, 0, 1}, 9) == "10002");  // most-significant index first
    CHECK_THROWS_AS(decode_word("123", 9, 5), InputError);
    CHECK_THROWS_AS(decode_word("19", 9, 2), InputError);
}

TEST_CASE("group spec validation and indexing") {
    CHECK_THROWS_AS(GroupSpec::make({}), InputError);
    CHECK_THROWS_AS(GroupSpec::make({4}), InputError);       // even order
    CHECK_THROWS_AS(GroupSpec::make({3, 5}), InputError);    // 3 does not divide 5
    CHECK_THROWS_AS(GroupSpec::make({0}), InputError);

    GroupSpec G = GroupSpec::make({3, 9});
    CHECK(G.order() == 27);
    CHECK(G.exponent() == 9);
    for (uint32_t g = 0; g < G.order(); ++g) {
        CHECK(G.from_tuple(G.to_tuple(g)) == g);
        CHECK(G.op(g, G.inv(g)) == G.identity());
        CHECK(G.op(g, G.identity()) == g);
    }
}

TEST_CASE("convolution: identity, commutativity, small polynomial square") {
    GroupSpec G = GroupSpec::make({5});
    auto tower = TowerContext::build(3, 1, 5);
    const HermField& H = tower->herm();

    auto one = AlgebraElem<HermField>::one(&G, &H);
    Rng rng(3);
    for (int k = 0; k < 1000; ++k) {
        auto a = random_elem(G, H, rng);
        auto b = random_elem(G, H, rng);
        CHECK(convolve(one, b) == b);
        CHECK(convolve(a, b) == convolve(b, a));
    }
    // (1 + g)^2 = 1 + 2g + g^2 with scalars from the prime field
    AlgebraElem<HermField> e(&G, &H);
    e.c[0] = 1;
    e.c[1] = 1;
    auto sq = convolve(e, e);
    CHECK(sq.c == std::vector<uint32_t>{1, 2, 1, 0, 0});
}

TEST_CASE("ring axioms on random triples") {
    GroupSpec G = GroupSpec::make({3, 9});
    auto tower = TowerContext::build(2, 1, 9);
    const HermField& H = tower->herm();
    Rng rng(5);
    for (int k = 0; k < 200; ++k) {
        auto a = random_elem(G, H, rng);
        auto b = random_elem(G, H, rng);
        auto c = random_elem(G, H, rng);
        CHECK(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)));
        CHECK(convolve(a, add(b, c)) == add(convolve(a, b), convolve(a, c)));
    }
}

TEST_CASE("adjoint is an involutive ring automorphism") {
    GroupSpec G = GroupSpec::make({5});
    auto tower = TowerContext::build(3, 1, 5);
    const HermField& H = tower->herm();
    auto one = AlgebraElem<HermField>::one(&G, &H);
    CHECK(adjoint(one) == one);
    Rng rng(9);
    for (int k = 0; k < 1000; ++k) {
        auto a = random_elem(G, H, rng);
        auto b = random_elem(G, H, rng);
        CHECK(adjoint(adjoint(a)) == a);
        CHECK(adjoint(convolve(a, b)) == convolve(adjoint(a), adjoint(b)));
    }
}

TEST_CASE("identity-coefficient projection and the inner-product identity") {
    GroupSpec G = GroupSpec::make({5});
    auto tower = TowerContext::build(3, 1, 5);
    const HermField& H = tower->herm();

    for (uint32_t s = 0; s < H.order(); ++s) {
        auto cs = scalar_mul(s, AlgebraElem<HermField>::one(&G, &H));
        CHECK(identity_coeff(cs) == s);
    }
    for (uint32_t g = 1; g < G.order(); ++g)
        CHECK(identity_coeff(AlgebraElem<HermField>::monomial(&G, &H, g, 1)) == 0);

    Rng rng(13);
    for (int k = 0; k < 1000; ++k) {
        auto a = random_elem(G, H, rng);
        auto b = random_elem(G, H, rng);
        // phi is a ring homomorphism onto the scalars along products with 1_G
        CHECK(herm_inner(a, b) == identity_coeff(convolve(a, adjoint(b))));
    }
}

TEST_CASE("weight basics and translate invariance") {
    GroupSpec G = GroupSpec::make({7});
    auto tower = TowerContext::build(3, 1, 7);
    const HermField& H = tower->herm();

    AlgebraElem<HermField> zero(&G, &H);
    CHECK(weight(zero) == 0);
    CHECK(weight(AlgebraElem<HermField>::one(&G, &H)) == 1);
    AlgebraElem<HermField> all(&G, &H);
    for (auto& x : all.c) x = 1;
    CHECK(weight(all) == G.order());

    Rng rng(17);
    for (int k = 0; k < 200; ++k) {
        auto a = random_elem(G, H, rng);
        uint32_t g = static_cast<uint32_t>(rng.below(G.order()));
        CHECK(weight(translate(g, a)) == weight(a));
    }
}

TEST_CASE("multiplication matrix properties") {
    GroupSpec G = GroupSpec::make({5});
    auto tower = TowerContext::build(3, 1, 5);
    const HermField& H = tower->herm();

    auto one = AlgebraElem<HermField>::one(&G, &H);
    CHECK(mult_matrix(one) == FMatrix::identity(H.F, G.order()));

    Rng rng(19);
    for (int k = 0; k < 200; ++k) {
        auto a = random_elem(G, H, rng);
        auto b = random_elem(G, H, rng);
        FMatrix M = mult_matrix(a);
        auto ab = convolve(a, b);
        for (uint32_t h = 0; h < G.order(); ++h) {
            uint32_t acc = 0;
            for (uint32_t g = 0; g < G.order(); ++g) acc = H.add(acc, H.mul(M.at(h, g), b.c[g]));
            CHECK(acc == ab.c[h]);
        }
        // linearity
        FMatrix Ma = mult_matrix(a), Mb = mult_matrix(b), Ms = mult_matrix(add(a, b));
        for (size_t i = 0; i < Ms.a.size(); ++i) CHECK(Ms.a[i] == H.add(Ma.a[i], Mb.a[i]));
    }
}

TEST_CASE("generic algebra operations over chain-ring scalars") {
    GroupSpec G = GroupSpec::make({5});
    auto S = ChainRing::build(ChainRingSpec::parse("uA:q=2,s=2"));
    auto one = AlgebraElem<ChainRing>::one(&G, S.get());

    CHECK(is_unit_chain(one));
    AlgebraElem<ChainRing> all(&G, S.get());
    for (auto& x : all.c) x = S->one();
    CHECK_FALSE(is_unit_chain(all));
    CHECK_FALSE(try_inverse_chain(all).has_value());

    Rng rng(211);
    int units = 0;
    while (units < 100) {
        AlgebraElem<ChainRing> a(&G, S.get()), b(&G, S.get());
        for (auto& x : a.c) x = static_cast<uint32_t>(rng.below(S->size()));
        for (auto& x : b.c) x = static_cast<uint32_t>(rng.below(S->size()));
        CHECK(convolve(a, b) == convolve(b, a));
        CHECK(adjoint(adjoint(a)) == a);
        CHECK(adjoint(convolve(a, b)) == convolve(adjoint(a), adjoint(b)));
        // residue commutes with the algebra operations
        CHECK(residue_of(convolve(a, b)) == convolve(residue_of(a), residue_of(b)));
        CHECK(residue_of(adjoint(a)) == adjoint(residue_of(a)));
        // multiplication matrix over the chain scalars has the defining property
        auto M = mult_matrix_generic(a);
        auto ab = convolve(a, b);
        for (uint32_t h = 0; h < G.order(); ++h) {
            uint32_t acc = 0;
            for (uint32_t g = 0; g < G.order(); ++g)
                acc = S->add(acc, S->mul(M.at(h, g), b.c[g]));
            CHECK(acc == ab.c[h]);
        }
        // units lift their residue inverses through the correction iteration
        auto inv = try_inverse_chain(a);
        CHECK(inv.has_value() == is_unit_chain(a));
        if (inv) {
            CHECK(convolve(a, *inv) == one);
            ++units;
        }
    }
}

TEST_CASE("units and inverses over the field") {
    GroupSpec G = GroupSpec::make({5});
    auto tower = TowerContext::build(3, 1, 5);
    const HermField& H = tower->herm();

    auto one = AlgebraElem<HermField>::one(&G, &H);
    CHECK(is_unit(one));
    AlgebraElem<HermField> all(&G, &H);
    for (auto& x : all.c) x = 1;
    CHECK_FALSE(is_unit(all));
    CHECK_FALSE(try_inverse(all).has_value());

    Rng rng(29);
    int units = 0;
    while (units < 1000) {
        auto a = random_elem(G, H, rng);
        auto inv = try_inverse(a);
        CHECK(inv.has_value() == is_unit(a));
        if (inv) {
            CHECK(convolve(a, *inv) == one);
            ++units;
        }
    }
}
