#include "twistcat/jsonio.hpp"
#include "twistcat/preproj.hpp"

#include <doctest.h>

#include <deque>
#include <set>

using namespace twistcat;

namespace {

// independent oracle: the full rewriting class of a path under the loop
// relations (i|i+1|i) = (i|i-1|i), applied anywhere, in any direction
std::set<std::vector<int>> rewriting_class(const Path& p) {
    int m = p.n + 1;
    std::set<std::vector<int>> seen{p.vertices};
    std::deque<std::vector<int>> queue{p.vertices};
    while (!queue.empty()) {
        std::vector<int> cur = queue.front();
        queue.pop_front();
        for (size_t k = 0; k + 2 < cur.size(); ++k) {
            if (cur[k] != cur[k + 2]) continue;
            int up = (cur[k] + 1) % m, down = (cur[k] - 1 + m) % m;
            if (cur[k + 1] != up && cur[k + 1] != down) continue;
            std::vector<int> next = cur;
            next[k + 1] = cur[k + 1] == up ? down : up;
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return seen;
}

// the P(i,l,m) shape as an explicit path
std::vector<int> plabel_path(int n, const PLabel& lab) {
    int m = n + 1;
    std::vector<int> v{lab.i};
    for (int64_t k = 0; k < lab.m; ++k) {
        v.push_back((lab.i + 1) % m);
        v.push_back(lab.i);
    }
    int64_t steps = lab.l >= 0 ? lab.l : -lab.l;
    int dir = lab.l >= 0 ? 1 : -1;
    int cur = lab.i;
    for (int64_t k = 0; k < steps; ++k) {
        cur = ((cur + dir) % m + m) % m;
        v.push_back(cur);
    }
    return v;
}

NilpotentModule nonsplit_extension_E(const Field& f) {
    // 0 -> S0 -> E -> S1 -> 0 over the n = 2 quiver: V0 = V1 = k, b0 = 1
    NilpotentModule e(2, f, {1, 1, 0});
    e.b(0).at(0, 0) = f.one();
    e.validate();
    return e;
}

}  // namespace

TEST_SUITE("preproj") {

TEST_CASE("path validation") {
    CHECK_THROWS(Path{1, {0, 1}}.validate());  // n = 1 unsupported
    CHECK_THROWS(Path{2, {0, 0}}.validate());
    CHECK_THROWS(Path{2, {}}.validate());
    Path ok{2, {0, 1, 2, 0, 2}};
    ok.validate();
}

TEST_CASE("normal form examples") {
    int n = 3;
    CHECK(normal_form(Path{n, {2}}) == PLabel{2, 0, 0});
    CHECK(normal_form(Path{n, {1, 2, 1}}) == PLabel{1, 0, 1});
    CHECK(normal_form(Path{n, {0, 1, 2, 1}}) == PLabel{0, 1, 1});
    CHECK(normal_form(Path{n, {2, 1, 0}}) == PLabel{2, -2, 0});
}

TEST_CASE("normal form matches the exhaustive rewriting oracle") {
    for (int n : {2, 3}) {
        int m = n + 1;
        // all paths of length <= 5 edges
        std::vector<std::vector<int>> stack;
        for (int i = 0; i < m; ++i) stack.push_back({i});
        size_t head = 0;
        while (head < stack.size()) {
            std::vector<int> cur = stack[head++];
            Path p{n, cur};
            PLabel nf = normal_form(p);
            auto cls = rewriting_class(p);
            // exactly one P-shaped path lies in the class, and it is nf
            size_t found = 0;
            for (int i = 0; i < m; ++i)
                for (int64_t l = -6; l <= 6; ++l)
                    for (int64_t mm = 0; mm <= 3; ++mm) {
                        PLabel lab{i, l, mm};
                        if (cls.count(plabel_path(n, lab))) {
                            ++found;
                            CHECK(lab == nf);
                        }
                    }
            CHECK(found == 1);
            // every member of the class has the same normal form
            for (const auto& v : cls) CHECK(normal_form(Path{n, v}) == nf);
            if (cur.size() <= 5) {
                stack.push_back(cur);
                stack.back().push_back((cur.back() + 1) % m);
                stack.push_back(cur);
                stack.back().push_back((cur.back() - 1 + m) % m);
            }
        }
    }
}

TEST_CASE("multiplication") {
    int n = 3;
    Field f2 = Field::f2();
    auto idem = [&](int i) { return path_element(Path{n, {i}}, f2); };
    auto pth = [&](std::vector<int> v) { return path_element(Path{n, std::move(v)}, f2); };
    CHECK(multiply(idem(0), idem(1)) == algebra_zero(n, f2));
    AlgebraElement loop = multiply(pth({1, 2}), pth({2, 1}));
    REQUIRE(loop.terms.size() == 1);
    CHECK(loop.terms.begin()->first == PLabel{1, 0, 1});
    AlgebraElement down = multiply(pth({2, 1}), pth({1, 0}));
    REQUIRE(down.terms.size() == 1);
    CHECK(down.terms.begin()->first == PLabel{2, -2, 0});
    // idempotents act as stated
    CHECK(multiply(idem(1), pth({1, 2})) == pth({1, 2}));
    CHECK(multiply(pth({1, 2}), idem(2)) == pth({1, 2}));
}

TEST_CASE("associativity on all short paths") {
    int n = 2;
    Field f3 = Field::fp(3);
    std::vector<AlgebraElement> elems;
    std::vector<std::vector<int>> paths;
    for (int i = 0; i <= n; ++i) paths.push_back({i});
    size_t head = 0;
    while (head < paths.size()) {
        auto cur = paths[head++];
        if (cur.size() <= 3) {
            paths.push_back(cur);
            paths.back().push_back((cur.back() + 1) % (n + 1));
            paths.push_back(cur);
            paths.back().push_back((cur.back() - 1 + n + 1) % (n + 1));
        }
    }
    for (const auto& v : paths) elems.push_back(path_element(Path{n, v}, f3));
    for (const auto& a : elems)
        for (const auto& b : elems)
            for (const auto& c : elems)
                CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
}

TEST_CASE("simple modules") {
    Field f2 = Field::f2();
    NilpotentModule s0 = simple_module(2, f2, 0);
    CHECK(s0.dims() == std::vector<int>{1, 0, 0});
    CHECK(s0.dim_vector() == simple_class(2, 0));
    s0.validate();
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j)
            CHECK(module_hom(simple_module(2, f2, i), simple_module(2, f2, j)) ==
                  (i == j ? 1u : 0u));
}

TEST_CASE("nonsplit extension") {
    Field f2 = Field::f2();
    NilpotentModule e = nonsplit_extension_E(f2);
    CHECK(module_hom(e, e) == 1);
    auto subs = submodules(e);
    CHECK(subs.size() == 3);  // 0, S0, E
    std::multiset<int> totals;
    for (const auto& s : subs) {
        int t = 0;
        for (int d : s.dims) t += d;
        totals.insert(t);
        s.module.validate();  // induced structure satisfies the relations
    }
    CHECK(totals == std::multiset<int>{0, 1, 2});
    // the 1-dimensional submodule is S0
    for (const auto& s : subs)
        if (s.module.total_dim() == 1) CHECK(s.module.dim_vector() == simple_class(2, 0));
}

TEST_CASE("direct sum submodule count") {
    Field f2 = Field::f2();
    NilpotentModule s1 = simple_module(2, f2, 1);
    NilpotentModule m = direct_sum(s1, s1);
    auto subs = submodules(m);
    CHECK(subs.size() == 5);  // 0, three lines, whole
}

TEST_CASE("submodule invariance and composition series dims") {
    Field f2 = Field::f2();
    NilpotentModule e = nonsplit_extension_E(f2);
    // dims along the chain 0 < S0 < E sum correctly
    LatticeVector total = zero_vector(2);
    total = total + simple_class(2, 0);           // S0 / 0
    total = total + quotient_module(e, submodules(e)[1]).dim_vector();  // E / S0
    // the middle submodule in enumeration order is S0 when sorted by size
    bool matched = false;
    for (const auto& s : submodules(e)) {
        if (s.module.total_dim() != 1) continue;
        LatticeVector sum = s.module.dim_vector() + quotient_module(e, s).dim_vector();
        CHECK(sum == e.dim_vector());
        matched = true;
    }
    CHECK(matched);
    CHECK(quotient_module(e, submodules(e)[0]).dim_vector() == e.dim_vector());
}

TEST_CASE("module enumeration counts nilpotents only") {
    Field f2 = Field::f2();
    size_t count = 0;
    enumerate_modules(2, f2, {1, 1, 0}, [&](const NilpotentModule& m) {
        m.validate();
        ++count;
    });
    // maps a0, b0 between two 1-dim spaces plus four zero-size maps;
    // nilpotency kills a0 = b0 = 1: three modules survive
    CHECK(count == 3);
}

TEST_CASE("json round trip") {
    Field f5 = Field::fp(5);
    NilpotentModule e(2, f5, {2, 1, 0});
    e.b(0).at(0, 0) = f5.from_int(3);
    e.b(0).at(1, 0) = f5.one();
    e.validate();
    json j = module_to_json(e);
    NilpotentModule back = module_from_json(j);
    CHECK(back == e);
}

}
