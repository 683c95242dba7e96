#include "twistcat/stability.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace twistcat;

namespace {

NilpotentModule nonsplit_E01(const Field& f) {
    // 0 -> S1 -> E -> S0 -> 0: V0 = V1 = k, a0 = 1, so S1 is the submodule
    NilpotentModule e(2, f, {1, 1, 0});
    e.a(0).at(0, 0) = f.one();
    e.validate();
    return e;
}

// hn with a shuffled submodule scan; factors must not depend on order
std::vector<std::pair<LatticeVector, PhaseValue>> hn_shuffled(const StabilityFunction& s,
                                                              const NilpotentModule& m,
                                                              std::mt19937_64& rng) {
    std::vector<std::pair<LatticeVector, PhaseValue>> out;
    NilpotentModule cur = m;
    while (cur.total_dim() > 0) {
        auto subs = submodules(cur);
        std::shuffle(subs.begin(), subs.end(), rng);
        const Submodule* best = nullptr;
        PhaseValue bp{0, 0};
        int bd = -1;
        for (const auto& sub : subs) {
            int t = 0;
            for (int d : sub.dims) t += d;
            if (t == 0) continue;
            PhaseValue ph = s.value(sub.module.dim_vector());
            int cmp = best ? phase_compare(ph, bp) : 1;
            if (cmp > 0 || (cmp == 0 && t > bd)) {
                best = &sub;
                bp = ph;
                bd = t;
            }
        }
        out.push_back({best->module.dim_vector(), bp});
        if (bd == cur.total_dim()) break;
        cur = quotient_module(cur, *best);
    }
    return out;
}

}  // namespace

TEST_SUITE("stability") {

TEST_CASE("phase representation and comparison") {
    StabilityFunction s(generic_heart_charge(2));
    PhaseValue minus_one{-1, 0};
    PhaseValue eye{0, 1};
    CHECK(phase_compare(minus_one, eye) > 0);  // phase 1 beats phase 1/2
    CHECK(phase_compare(eye, eye) == 0);
    CHECK(phase_to_string(minus_one) == "1");
    CHECK(phase_to_string(eye) == "1/2");
    PhaseValue low{1, 1};  // phase 1/4
    CHECK(phase_compare(low, eye) < 0);
    CHECK_THROWS(s.value(zero_vector(2)));
}

TEST_CASE("reference charge evaluations") {
    for (int n : {1, 2, 3, 5}) {
        CentralCharge z = reference_charge(n);
        RatComplex at_delta = z.eval(delta_class(n));
        CHECK(at_delta.re == -1);
        CHECK(at_delta.im == 0);
        for (int j = 1; j <= n; ++j) {
            RatComplex v = z.eval(simple_class(n, j));
            CHECK(v.re == 0);
            CHECK(v.im == 1);
        }
        RatComplex om = z.eval(dualizing_class(n));
        CHECK(om.re == -1);
        CHECK(om.im == n);
        // the phase of delta under this charge is exactly 1
        CHECK(phase_to_string(PhaseValue{at_delta.re, at_delta.im}) == "1");
    }
    // the zeroth coordinate is below the axis: not a heart stability function
    CHECK_THROWS(StabilityFunction(reference_charge(2)));
}

TEST_CASE("semistability examples") {
    Field f2 = Field::f2();
    StabilityFunction s(generic_heart_charge(2));
    for (int i = 0; i <= 2; ++i) {
        NilpotentModule si = simple_module(2, f2, i);
        CHECK(is_semistable(s, si));
        CHECK(is_stable(s, si));
    }
    NilpotentModule ss = direct_sum(simple_module(2, f2, 1), simple_module(2, f2, 1));
    CHECK(is_semistable(s, ss));
    CHECK(!is_stable(s, ss));
    // destabilized extension: the submodule S1 has larger phase than E
    NilpotentModule e = nonsplit_E01(f2);
    PhaseValue p_sub = s.value(simple_class(2, 1));
    PhaseValue p_tot = s.value(e.dim_vector());
    REQUIRE(phase_compare(p_sub, p_tot) > 0);
    CHECK(!is_semistable(s, e));
}

TEST_CASE("hn filtration") {
    Field f2 = Field::f2();
    StabilityFunction s(generic_heart_charge(2));
    // semistable module: single factor
    NilpotentModule s2 = simple_module(2, f2, 2);
    auto hn = hn_filtration(s, s2);
    REQUIRE(hn.factors.size() == 1);
    CHECK(hn.factors[0].cls == simple_class(2, 2));
    // direct sum splits by phase: z1 = -2/4 + i beats z0 = -1/4 + i
    NilpotentModule sum = direct_sum(simple_module(2, f2, 0), simple_module(2, f2, 1));
    auto hs = hn_filtration(s, sum);
    REQUIRE(hs.factors.size() == 2);
    CHECK(hs.factors[0].cls == simple_class(2, 1));
    CHECK(hs.factors[1].cls == simple_class(2, 0));
    // the extension filters with factors [S1, S0]
    auto he = hn_filtration(s, nonsplit_E01(f2));
    REQUIRE(he.factors.size() == 2);
    CHECK(he.factors[0].cls == simple_class(2, 1));
    CHECK(he.factors[1].cls == simple_class(2, 0));
    CHECK(phase_compare(he.factors[0].phase, he.factors[1].phase) > 0);
}

TEST_CASE("hn properties over the full dimension-3 sweep") {
    Field f2 = Field::f2();
    StabilityFunction s(generic_heart_charge(2));
    std::mt19937_64 rng(5);
    std::vector<std::vector<int>> dim_vectors = {{1, 1, 1}, {2, 1, 0}, {1, 0, 2}, {1, 2, 0}};
    for (const auto& dv : dim_vectors) {
        enumerate_modules(2, f2, dv, [&](const NilpotentModule& m) {
            auto hn = hn_filtration(s, m);
            // classes and charges add up
            LatticeVector cls = zero_vector(2);
            RatComplex zsum{0, 0};
            for (const auto& fac : hn.factors) {
                cls = cls + fac.cls;
                zsum = zsum + s.charge().eval(fac.cls);
                CHECK(is_semistable(s, fac.factor));
            }
            CHECK(cls == m.dim_vector());
            CHECK(zsum == s.charge().eval(m.dim_vector()));
            // strictly decreasing phases
            for (size_t k = 0; k + 1 < hn.factors.size(); ++k)
                CHECK(phase_compare(hn.factors[k].phase, hn.factors[k + 1].phase) > 0);
            // order independence
            auto sh = hn_shuffled(s, m, rng);
            REQUIRE(sh.size() == hn.factors.size());
            for (size_t k = 0; k < sh.size(); ++k) {
                CHECK(sh[k].first == hn.factors[k].cls);
                CHECK(phase_compare(sh[k].second, hn.factors[k].phase) == 0);
            }
            // seesaw on every proper submodule
            PhaseValue pm = s.value(m.dim_vector());
            for (const auto& sub : submodules(m)) {
                int t = 0;
                for (int d : sub.dims) t += d;
                if (t == 0 || t == m.total_dim()) continue;
                LatticeVector q = m.dim_vector() - sub.module.dim_vector();
                PhaseValue ps = s.value(sub.module.dim_vector());
                PhaseValue pq = s.value(q);
                CHECK((phase_compare(ps, pm) <= 0) == (phase_compare(pm, pq) <= 0));
            }
        });
    }
}

TEST_CASE("stable classes are roots") {
    Field f2 = Field::f2();
    StabilityFunction s(generic_heart_charge(2));
    auto rep = stable_class_is_root(s, 2, f2, 4);
    CHECK(rep.non_root_counterexamples.empty());
    CHECK(rep.non_schur_counterexamples.empty());
    CHECK(rep.stable_classes > 0);
    // delta-class stable modules have chi = 0, real-root classes chi = 2
    // (checked inside the sweep; spot check the simples here)
    for (int i = 0; i <= 2; ++i)
        CHECK(euler_form(simple_class(2, i), simple_class(2, i)) == 2);
}

}
