#include "twistcat/braid.hpp"
#include "twistcat/jsonio.hpp"
#include "twistcat/twisted.hpp"

#include <doctest.h>

#include <random>

using namespace twistcat;

namespace {

TwistedComplex random_object(int n, const Field& f, std::mt19937_64& rng, int len = 3) {
    BraidWord w;
    w.flavor = BraidFlavor::Affine;
    w.n = n;
    int L = rng() % (len + 1);
    for (int i = 0; i < L; ++i)
        w.letters.push_back({static_cast<int>(rng() % (n + 1)), rng() % 2 ? 1 : -1});
    return apply_word(w, generator(n, f, rng() % (n + 1), static_cast<int>(rng() % 3) - 1));
}

// add a contractible two-term summand to a complex
TwistedComplex with_contractible(const TwistedComplex& x, int vertex, int shift) {
    TwistedComplex y(x.n(), x.field());
    for (const auto& t : x.terms()) y.add_term(t.vertex, t.shift);
    size_t a = y.add_term(vertex, shift);
    size_t b = y.add_term(vertex, shift - 1);
    for (const auto& [st, c] : x.diff()) y.set_diff(st.first, st.second, c);
    y.set_diff(a, b, x.field().one());
    y.validate();
    return y;
}

}  // namespace

TEST_SUITE("twisted") {

TEST_CASE("generators and shifts") {
    Field f2 = Field::f2();
    TwistedComplex g = generator(3, f2, 2, -1);
    g.validate();
    CHECK(g.terms().size() == 1);
    CHECK(g.terms()[0] == Term{2, -1});
    CHECK(shift(generator(3, f2, 1, 0), 1) == generator(3, f2, 1, 1));
    TwistedComplex x = generator(3, f2, 0, 0);
    CHECK(shift(shift(x, 1), -1) == x);
    // dim Hom^d(L, X[1]) = dim Hom^{d+1}(L, X)
    TwistedComplex t1 = twist(1, generator(3, f2, 0, 0));
    auto before = HomComplex(generator(3, f2, 0, 0), t1).cohomology_dims();
    auto after = HomComplex(generator(3, f2, 0, 0), shift(t1, 1)).cohomology_dims();
    for (const auto& [d, v] : before) {
        CHECK(after.count(d - 1));
        CHECK(after.at(d - 1) == v);
    }
}

TEST_CASE("hom complex of generators") {
    Field f2 = Field::f2();
    for (int n : {2, 3, 4}) {
        for (int i = 0; i <= n; ++i) {
            HomComplex h(generator(n, f2, i, 0), generator(n, f2, i, 0));
            auto dims = h.cohomology_dims();
            REQUIRE(dims.size() == 2);
            CHECK(dims.at(0) == 1);
            CHECK(dims.at(2) == 1);
        }
        if (n >= 3) {
            HomComplex h(generator(n, f2, 0, 0), generator(n, f2, 2, 0));
            CHECK(h.basis().empty());
            CHECK(h.cohomology_dims().empty());
        }
    }
}

TEST_CASE("cone examples") {
    Field f2 = Field::f2();
    int n = 2;
    TwistedComplex x = generator(n, f2, 1, 0);
    TwistedComplex y = generator(n, f2, 0, 0);
    // zero morphism: cone = X[1] (+) Y
    Morphism zero;
    zero.degree = 0;
    TwistedComplex c0 = cone(x, y, zero);
    REQUIRE(c0.terms().size() == 2);
    CHECK(c0.terms()[0] == Term{1, 1});
    CHECK(c0.terms()[1] == Term{0, 0});
    CHECK(c0.diff().empty());
    // cone(id) minimizes to the zero complex
    Morphism id;
    id.degree = 0;
    id.comps[{0, 0}] = f2.one();
    TwistedComplex cid = minimize(cone(x, x, id));
    CHECK(cid.terms().empty());
    // cone of y1: L1[-1] -> L0 computes the twist of L0
    TwistedComplex l1m = generator(n, f2, 1, -1);
    Morphism y1;
    y1.degree = 0;
    y1.comps[{0, 0}] = f2.one();
    TwistedComplex cy = cone(l1m, y, y1);
    REQUIRE(cy.terms().size() == 2);
    CHECK(cy.terms()[0] == Term{1, 0});
    CHECK(cy.terms()[1] == Term{0, 0});
    HomComplex h(generator(n, f2, 0, 0), cy);
    CHECK(h.total_cohomology_dim() == 1);  // 2 * I(c0, tw_1 c0) = 2 * (1/2)
    CHECK(!is_shifted_generator(cy).has_value());
}

TEST_CASE("minimize is a fixed point on minimal complexes") {
    Field f2 = Field::f2();
    std::mt19937_64 rng(5);
    for (int it = 0; it < 12; ++it) {
        TwistedComplex x = random_object(2, f2, rng);
        TwistedComplex m = minimize(x);
        TwistedComplex mm = minimize(m);
        CHECK(m == mm);
    }
}

TEST_CASE("minimize removes contractible summands and keeps fingerprints") {
    std::mt19937_64 rng(9);
    for (const Field& f : {Field::f2(), Field::fp(3), Field::rationals()}) {
        for (int it = 0; it < 8; ++it) {
            TwistedComplex x = random_object(2, f, rng, 2);
            TwistedComplex fat = with_contractible(x, rng() % 3, static_cast<int>(rng() % 3) - 1);
            TwistedComplex slim = minimize(fat);
            CHECK(hom_fingerprint(slim) == hom_fingerprint(x));
            TwistedComplex mx = minimize(x);
            std::multiset<std::pair<int, int>> a, b;
            for (const auto& t : slim.terms()) a.insert({t.vertex, t.shift});
            for (const auto& t : mx.terms()) b.insert({t.vertex, t.shift});
            CHECK(a == b);
        }
    }
}

TEST_CASE("euler characteristic matches the lattice pairing") {
    std::mt19937_64 rng(13);
    Field f2 = Field::f2();
    for (int n : {2, 3}) {
        for (int it = 0; it < 10; ++it) {
            TwistedComplex x = random_object(n, f2, rng);
            TwistedComplex y = random_object(n, f2, rng);
            HomComplex h(x, y);
            CHECK(h.euler_characteristic() == euler_form(x.k_class(), y.k_class()));
            int64_t coh = 0;
            for (const auto& [d, v] : h.cohomology_dims())
                coh += (((d % 2) + 2) % 2 == 0 ? 1 : -1) * static_cast<int64_t>(v);
            CHECK(coh == h.euler_characteristic());
        }
    }
}

TEST_CASE("cone triangle dimension counts") {
    // chi additivity and the long-exact-sequence bound on random closed maps
    Field f2 = Field::f2();
    std::mt19937_64 rng(21);
    int n = 2;
    for (int it = 0; it < 10; ++it) {
        TwistedComplex x = random_object(n, f2, rng, 2);
        TwistedComplex y = random_object(n, f2, rng, 2);
        HomComplex h(x, y);
        // collect a random closed degree-0 morphism from the kernel of D
        std::vector<size_t> deg0;
        for (size_t b = 0; b < h.basis().size(); ++b)
            if (h.basis()[b].degree == 0) deg0.push_back(b);
        Morphism f;
        f.degree = 0;
        for (size_t b : deg0)
            if (rng() % 2) {
                auto& c = f.comps[{h.basis()[b].s, h.basis()[b].t}];
                c = f2.add(c, f2.one());
            }
        for (auto it2 = f.comps.begin(); it2 != f.comps.end();)
            it2 = f2.is_zero(it2->second) ? f.comps.erase(it2) : std::next(it2);
        if (!h.is_closed(f)) continue;
        TwistedComplex c = cone(x, y, f);
        for (int i = 0; i <= n; ++i) {
            TwistedComplex g = generator(n, f2, i, 0);
            auto dx = HomComplex(g, x).cohomology_dims();
            auto dy = HomComplex(g, y).cohomology_dims();
            auto dc = HomComplex(g, c).cohomology_dims();
            auto get = [](const std::map<int, size_t>& m, int d) {
                auto it3 = m.find(d);
                return it3 == m.end() ? size_t{0} : it3->second;
            };
            int64_t chix = 0, chiy = 0, chic = 0;
            for (int d = -10; d <= 10; ++d) {
                int s = ((d % 2) + 2) % 2 == 0 ? 1 : -1;
                chix += s * static_cast<int64_t>(get(dx, d));
                chiy += s * static_cast<int64_t>(get(dy, d));
                chic += s * static_cast<int64_t>(get(dc, d));
                CHECK(get(dc, d) <= get(dy, d) + get(dx, d + 1));
            }
            CHECK(chic == chiy - chix);
        }
    }
}

TEST_CASE("is_shifted_generator") {
    Field f2 = Field::f2();
    CHECK(is_shifted_generator(generator(5, f2, 3, 5)) == std::make_pair(3, 5));
    for (int n : {2, 3}) {
        for (int i = 0; i <= n; ++i) {
            auto r = is_shifted_generator(twist(i, generator(n, f2, i, 0)));
            REQUIRE(r.has_value());
            CHECK(*r == std::make_pair(i, -1));
        }
    }
}

TEST_CASE("json round trip") {
    Field f2 = Field::f2();
    std::mt19937_64 rng(33);
    TwistedComplex x = random_object(2, f2, rng, 3);
    json j = complex_to_json(x);
    TwistedComplex y = complex_from_json(j);
    CHECK(x == y);
    // over Q too
    TwistedComplex xq = random_object(2, Field::rationals(), rng, 2);
    CHECK(complex_from_json(complex_to_json(xq)) == xq);
}

}
