#include "twistcat/stability.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace twistcat {

static bool in_semiclosed_upper_half(const RatComplex& z) {
    if (z.im > 0) return true;
    return z.im == 0 && z.re < 0;
}

int phase_compare(const PhaseValue& a, const PhaseValue& b) {
    bool a_axis = a.im == 0, b_axis = b.im == 0;  // phase exactly 1
    if (a_axis && b_axis) return 0;
    if (a_axis) return 1;
    if (b_axis) return -1;
    Rat cross = a.re * b.im - b.re * a.im;
    if (cross > 0) return -1;  // a sits clockwise of b: smaller phase
    if (cross < 0) return 1;
    return 0;
}

std::string phase_to_string(const PhaseValue& v) {
    auto rat = [](const Rat& q) {
        std::string s = numerator(q).str();
        if (denominator(q) != 1) s += "/" + denominator(q).str();
        return s;
    };
    if (v.im == 0) return "1";
    if (v.re == 0) return "1/2";
    return "atan2(" + rat(v.im) + "," + rat(v.re) + ")/pi";
}

StabilityFunction::StabilityFunction(CentralCharge z) : z_(std::move(z)) {
    for (int i = 0; i <= z_.n(); ++i) {
        RatComplex v = z_.eval(simple_class(z_.n(), i));
        if (!in_semiclosed_upper_half(v))
            throw std::invalid_argument("stability function: simple class leaves the upper half plane");
    }
}

PhaseValue StabilityFunction::value(const LatticeVector& d) const {
    if (d.is_zero()) throw std::invalid_argument("phase of the zero vector");
    RatComplex v = z_.eval(d);
    if (!in_semiclosed_upper_half(v))
        throw std::logic_error("charge value outside the semiclosed upper half plane");
    return PhaseValue{v.re, v.im};
}

namespace {

bool proper_nonzero(const Submodule& s, const NilpotentModule& m) {
    int t = 0;
    for (int d : s.dims) t += d;
    return t > 0 && t < m.total_dim();
}

}  // namespace

bool is_semistable(const StabilityFunction& s, const NilpotentModule& m, int dim_bound) {
    if (m.total_dim() == 0) throw std::invalid_argument("zero module");
    PhaseValue pm = s.value(m.dim_vector());
    for (const auto& sub : submodules(m, dim_bound)) {
        if (!proper_nonzero(sub, m)) continue;
        if (phase_compare(s.value(sub.module.dim_vector()), pm) > 0) return false;
    }
    return true;
}

bool is_stable(const StabilityFunction& s, const NilpotentModule& m, int dim_bound) {
    if (m.total_dim() == 0) throw std::invalid_argument("zero module");
    PhaseValue pm = s.value(m.dim_vector());
    for (const auto& sub : submodules(m, dim_bound)) {
        if (!proper_nonzero(sub, m)) continue;
        if (phase_compare(s.value(sub.module.dim_vector()), pm) >= 0) return false;
    }
    return true;
}

HNFiltration hn_filtration(const StabilityFunction& s, const NilpotentModule& m, int dim_bound) {
    if (m.total_dim() == 0) throw std::invalid_argument("zero module");
    HNFiltration out;
    NilpotentModule cur = m;
    while (cur.total_dim() > 0) {
        auto subs = submodules(cur, dim_bound);
        // maximal destabilizer: maximal phase, then maximal total dimension
        const Submodule* best = nullptr;
        PhaseValue best_phase{0, 0};
        int best_dim = -1;
        for (const auto& sub : subs) {
            int t = 0;
            for (int d : sub.dims) t += d;
            if (t == 0) continue;
            PhaseValue ph = s.value(sub.module.dim_vector());
            int cmp = best ? phase_compare(ph, best_phase) : 1;
            if (cmp > 0 || (cmp == 0 && t > best_dim)) {
                best = &sub;
                best_phase = ph;
                best_dim = t;
            }
        }
        HNFactor fac{best->module, best_phase, best->module.dim_vector()};
        if (!out.factors.empty() &&
            phase_compare(fac.phase, out.factors.back().phase) >= 0)
            throw std::logic_error("HN phases not strictly decreasing");
        out.factors.push_back(fac);
        if (best_dim == cur.total_dim()) break;
        cur = quotient_module(cur, *best);
    }
    return out;
}

StableSweepReport stable_class_is_root(const StabilityFunction& s, int n, const Field& f, int bound) {
    StableSweepReport rep;
    std::set<std::string> seen;
    // all dimension vectors with 1 <= total <= bound
    std::vector<std::vector<int>> dim_vectors;
    std::vector<int> dims(n + 1, 0);
    std::function<void(int, int)> gen = [&](int idx, int used) {
        if (idx == n + 1) {
            if (used >= 1) dim_vectors.push_back(dims);
            return;
        }
        for (int d = 0; d + used <= bound; ++d) {
            dims[idx] = d;
            gen(idx + 1, used + d);
        }
        dims[idx] = 0;
    };
    gen(0, 0);
    for (const auto& dv : dim_vectors) {
        enumerate_modules(n, f, dv, [&](const NilpotentModule& m) {
            ++rep.modules_seen;
            std::string fp = module_fingerprint(m);
            if (!seen.insert(fp).second) return;
            ++rep.classes_tested;
            if (!is_stable(s, m, bound)) return;
            ++rep.stable_classes;
            LatticeVector d = m.dim_vector();
            if (euler_form(d, d) > 2) rep.non_root_counterexamples.push_back(d);
            if (module_hom(m, m) != 1) rep.non_schur_counterexamples.push_back(d);
        });
    }
    return rep;
}

CentralCharge reference_charge(int n) {
    CentralCharge z;
    z.z.assign(n + 1, RatComplex{0, 1});
    z.z[0] = RatComplex{-1, Rat(-n)};
    return z;
}

LatticeVector dualizing_class(int n) {
    LatticeVector v = delta_class(n) + delta_class(n) - simple_class(n, 0);
    return v;  // e0 + 2(e1 + ... + en)
}

CentralCharge generic_heart_charge(int n) {
    CentralCharge z;
    z.z.resize(n + 1);
    for (int j = 0; j <= n; ++j) z.z[j] = RatComplex{Rat(-(j + 1), n + 2), 1};
    return z;
}

}  // namespace twistcat
