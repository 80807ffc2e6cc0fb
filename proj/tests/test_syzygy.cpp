#include <algorithm>
#include <map>

#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace hibi;

namespace {

// coefficient, one-based variable, zero-based generator
ModuleElement elem(const HibiIdeal& I, std::vector<std::tuple<int, int, int>> ts) {
    std::vector<ModuleTerm> out;
    for (auto [c, v, g] : ts) out.push_back({c, Monomial::var(v - 1), g});
    return make_element(I.schreyer(), std::move(out));
}

std::map<Kind, int> kind_histogram(const HibiIdeal& I) {
    std::map<Kind, int> h;
    for (auto& t : typed_generators(I)) ++h[t.kind];
    return h;
}

std::vector<Lattice> syzygy_corpus() {
    auto all = fixtures::census(9);
    for (int m = 1; m <= 3; ++m)
        for (int n = m; n <= 3; ++n) all.push_back(grid(m, n));
    all.push_back(fixtures::free3());
    all.push_back(fixtures::fig_pic());
    all.push_back(fixtures::fig_d());
    return all;
}

}  // namespace

TEST(SchreyerOrder, Examples) {
    auto L = fixtures::fig_ex();
    HibiIdeal I(L);
    auto ord = I.schreyer();
    ModuleTerm x1e3{1, Monomial::var(0), 2}, x2e3{1, Monomial::var(1), 2};
    EXPECT_TRUE(ord.cmp(x2e3, x1e3) > 0);
    EXPECT_TRUE(ord.cmp(x2e3, x2e3) == 0);
    ModuleTerm x5e1{1, Monomial::var(4), 0}, x3e2{1, Monomial::var(2), 1};
    EXPECT_TRUE(ord.cmp(x5e1, x3e2) > 0);
}

TEST(SchreyerPair, ExampleElements) {
    auto L = fixtures::fig_ex();
    HibiIdeal I(L);
    auto s12 = schreyer_pair(I, 0, 1);
    auto s23 = schreyer_pair(I, 1, 2);
    EXPECT_TRUE(same_element(s12, elem(I, {{1, 5, 0}, {-1, 3, 1}, {1, 1, 2}})))
        << to_string(I.ring(), s12);
    EXPECT_TRUE(same_element(s23, elem(I, {{-1, 6, 0}, {1, 4, 1}, {-1, 2, 2}})))
        << to_string(I.ring(), s23);
    for (auto& e : schreyer_pairs(I)) EXPECT_TRUE(phi(I.ring(), e, I.polys()).is_zero());
}

TEST(SchreyerPair, DisjointPairIsKoszul) {
    auto L = fixtures::fig_d();
    HibiIdeal I(L);
    ASSERT_EQ(I.size(), 2u);
    auto s = schreyer_pair(I, 0, 1);
    EXPECT_TRUE(same_up_to_sign(s, diamond_element(I, I.relations()[0].pair, I.relations()[1].pair)));
}

TEST(SchreyerPair, PhiVanishesOnCensus) {
    for (auto& L : fixtures::census(8)) {
        HibiIdeal I(L);
        for (auto& e : schreyer_pairs(I)) EXPECT_TRUE(phi(I.ring(), e, I.polys()).is_zero());
    }
}

TEST(Classify, ExamplePairs) {
    auto L = fixtures::fig_ex();
    auto c = classify_pair(L, {1, 2}, {1, 4});
    EXPECT_EQ(family(c.kind), "strip");
    EXPECT_EQ(classify_pair(L, {1, 2}, {3, 4}).kind, Kind::D);
    EXPECT_EQ(classify_pair(L, {1, 2}, {3, 4}).witness, (std::vector<int>{1, 2, 3, 4}));
    EXPECT_THROW(classify_pair(L, {1, 2}, {1, 2}), Error);
}

TEST(Classify, LInTwoByTwo) {
    auto L = grid(2, 2);
    HibiIdeal I(L);
    int found = 0;
    for (std::size_t i = 0; i < I.size(); ++i)
        for (std::size_t j = i + 1; j < I.size(); ++j) {
            auto c = classify_pair(L, I.relations()[i].pair, I.relations()[j].pair);
            if (c.kind != Kind::L) continue;
            ++found;
            auto [a, b1, b2] = c.triple;
            EXPECT_NE(L.join(a, b1), L.join(a, b2));
            EXPECT_NE(L.meet(a, b1), L.meet(a, b2));
            EXPECT_TRUE(L.less(b1, b2));
            EXPECT_TRUE(L.less(b1, L.join(a, b2)));
            EXPECT_TRUE(L.less(L.meet(a, b1), b2));
        }
    EXPECT_GT(found, 0);
}

TEST(Classify, EveryProfileIsConsistent) {
    for (auto& L : fixtures::census(10)) {
        HibiIdeal I(L);
        EXPECT_NO_THROW(typed_generators(I));
    }
    auto F = fixtures::free3();
    HibiIdeal I(F);
    auto h = kind_histogram(I);
    for (Kind k : {Kind::G3, Kind::G5, Kind::G}) EXPECT_GT(h[k], 0) << to_string(k);
}

// G4 and G6 are the mirror images of G5 and G3 under swapping b1 and b2
TEST(Classify, MirrorKindsOfFreeLattice) {
    auto F = fixtures::free3();
    HibiIdeal I(F);
    int mirrored = 0;
    for (auto& t : typed_generators(I)) {
        Kind m = t.kind == Kind::G5 ? Kind::G4 : t.kind == Kind::G3 ? Kind::G6 : Kind::D;
        if (m == Kind::D) continue;
        auto s = typed_generator(I, m, {t.witness[0], t.witness[2], t.witness[1]});
        EXPECT_TRUE(phi(I.ring(), s.element, I.polys()).is_zero()) << to_string(m);
        EXPECT_FALSE(s.element.is_zero());
        ++mirrored;
    }
    EXPECT_EQ(mirrored, 24);
}

TEST(Classify, ProfileTableCoversAllSharedKinds) {
    auto ks = kinds_with_profiles();
    EXPECT_EQ(ks.size(), 12u);
    for (Kind k : kAllKinds)
        if (k != Kind::D) EXPECT_NO_THROW(detail::witness_profile(k));
}

TEST(Typed, StripElementsOfExample) {
    auto L = fixtures::fig_ex();
    HibiIdeal I(L);
    auto typed = typed_generators(I);
    ASSERT_EQ(typed.size(), 3u);
    auto s1 = elem(I, {{1, 5, 0}, {-1, 3, 1}, {1, 1, 2}});
    auto s2 = elem(I, {{-1, 6, 0}, {1, 4, 1}, {-1, 2, 2}});
    int strips = 0;
    for (auto& t : typed) {
        if (family(t.kind) != "strip") continue;
        ++strips;
        EXPECT_TRUE(same_up_to_sign(t.element, s1) || same_up_to_sign(t.element, s2));
    }
    EXPECT_EQ(strips, 2);
}

TEST(Typed, PhiVanishes) {
    for (auto& L : syzygy_corpus()) {
        HibiIdeal I(L);
        for (auto& t : typed_generators(I)) {
            EXPECT_FALSE(t.element.is_zero());
            EXPECT_TRUE(phi(I.ring(), t.element, I.polys()).is_zero())
                << to_string(t.kind) << " " << to_string(I.ring(), t.element);
        }
    }
}

// a G witness generating the whole free lattice gives the full six-term combination
TEST(Typed, GElementHasSixTerms) {
    auto F = fixtures::free3();
    HibiIdeal I(F);
    int full = 0;
    for (auto& t : typed_generators(I)) {
        if (t.kind != Kind::G) continue;
        std::vector<bool> in(F.size(), false);
        for (int w : t.witness) in[w] = true;
        for (bool grew = true; grew;) {
            grew = false;
            for (int x = 0; x < F.size(); ++x)
                for (int y = 0; y < F.size(); ++y)
                    if (in[x] && in[y])
                        for (int z : {F.join(x, y), F.meet(x, y)})
                            if (!in[z]) in[z] = grew = true;
        }
        if (std::count(in.begin(), in.end(), true) != F.size()) continue;
        EXPECT_EQ(t.element.terms.size(), 6u) << to_string(I.ring(), t.element);
        ++full;
    }
    EXPECT_GT(full, 0);
}

TEST(Typed, KindsOfGridTwoThree) {
    auto L = grid(2, 3);
    HibiIdeal I(L);
    auto h = kind_histogram(I);
    EXPECT_EQ(h[Kind::S1] + h[Kind::S2], 36);
    EXPECT_EQ(h[Kind::L], 8);
    EXPECT_EQ(h[Kind::B1] + h[Kind::B2], 8);
}

TEST(Typed, WitnessConditionsAreChecked) {
    auto L = fixtures::fig_ex();
    HibiIdeal I(L);
    try {
        typed_generator(I, Kind::L, {1, 2, 4});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ConditionViolated);
    }
    try {
        typed_generator(I, Kind::S1, {1, 3, 4});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ConditionViolated);
        EXPECT_NE(std::string(e.what()).find("comparable"), std::string::npos);
    }
    EXPECT_THROW(typed_generator(I, Kind::D, {1, 2, 1, 4}), Error);
    EXPECT_THROW(typed_generator(I, Kind::D, {1, 2, 3}), Error);
}

TEST(Typed, DiamondDisplay) {
    auto L = fixtures::fig_d();
    HibiIdeal I(L);
    auto d = typed_generator(I, Kind::D, {1, 2, 4, 5});
    // f_(4,5) e_(1,2) - f_(1,2) e_(4,5)
    std::vector<ModuleTerm> want;
    for (auto& t : I.polys()[1].terms) want.push_back({t.coeff, t.mono, 0});
    for (auto& t : I.polys()[0].terms) want.push_back({-t.coeff, t.mono, 1});
    EXPECT_TRUE(same_element(d.element, make_element(I.schreyer(), want)));
}

TEST(Diamond, Comparability) {
    auto D = fixtures::fig_d();
    EXPECT_TRUE(diamond_comparable(D, {1, 2}, {4, 5}));
    auto G = grid(1, 3);
    Pair left{grid_index(1, 3, 1, 0), grid_index(1, 3, 0, 1)};
    Pair right{grid_index(1, 3, 1, 2), grid_index(1, 3, 0, 3)};
    EXPECT_FALSE(diamond_comparable(G, left, right));
    EXPECT_FALSE(diamond_comparable(G, right, left));
}

TEST(Diamond, Reducibility) {
    auto P = fixtures::fig_pic();
    EXPECT_TRUE(diamond_reducible(P, {1, 2}, {10, 11}));
    auto D = fixtures::fig_d();
    EXPECT_FALSE(diamond_reducible(D, {1, 2}, {4, 5}));
    auto G = grid(1, 3);
    Pair left{grid_index(1, 3, 1, 0), grid_index(1, 3, 0, 1)};
    Pair right{grid_index(1, 3, 1, 2), grid_index(1, 3, 0, 3)};
    EXPECT_TRUE(diamond_reducible(G, left, right));
}

// Dropping every reducible diamond element leaves the degree-4 span unchanged.
TEST(Diamond, ReducibleElementsAreRedundant) {
    auto corpus = fixtures::census(10);
    corpus.push_back(fixtures::fig_pic());
    corpus.push_back(fixtures::l3(3, 3, 1, 2));
    corpus.push_back(fixtures::l3(4, 3, 2, 2));
    for (auto& L : corpus) {
        if (!is_planar(L)) continue;
        HibiIdeal I(L);
        std::vector<ModuleElement> all, kept;
        for (auto& t : typed_generators(I)) {
            all.push_back(t.element);
            bool drop = t.kind == Kind::D &&
                        diamond_reducible(L, {t.witness[0], t.witness[1]}, {t.witness[2], t.witness[3]});
            if (!drop) kept.push_back(t.element);
        }
        EXPECT_EQ(span_rank(I, all, 4, PrimeField{}), span_rank(I, kept, 4, PrimeField{}))
            << lattice_hash(L);
    }
}

TEST(ModuleOps, SPairAndReduce) {
    auto L = fixtures::fig_ex();
    HibiIdeal I(L);
    auto ord = I.schreyer();
    auto s1 = schreyer_pair(I, 0, 1);
    EXPECT_FALSE(s_pair(ord, s1, s1) && !s_pair(ord, s1, s1)->is_zero());
    EXPECT_TRUE(reduce(ord, s1, {s1}).is_zero());
    EXPECT_THROW(s_pair(ord, ModuleElement{}, s1), Error);
    auto twice = add(ord, s1, s1);
    EXPECT_TRUE(same_element(twice, scale(ord, s1, 2, {})));
}
