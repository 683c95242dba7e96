#pragma once

// Stability functions on the standard heart of nilpotent modules:
// exact phase comparison, brute-force semistable tests and
// Harder-Narasimhan filtrations, and the stable-class-is-a-root sweep.

#include "twistcat/lattice.hpp"
#include "twistcat/preproj.hpp"

#include <string>
#include <vector>

namespace twistcat {

// Charge value of a nonzero heart object; lies in the semiclosed upper half
// plane {m exp(i pi phi) : m > 0, 0 < phi <= 1}.  Phases compare through
// cross products, never through angles.
struct PhaseValue {
    Rat re, im;
};

// -1 / 0 / +1 as phase(a) <=> phase(b)
int phase_compare(const PhaseValue& a, const PhaseValue& b);
std::string phase_to_string(const PhaseValue& v);  // exact "pi*1" style fraction when axis-aligned

class StabilityFunction {
public:
    // Validates that every simple class lands in the semiclosed upper half
    // plane (hence every nonzero effective class does).
    explicit StabilityFunction(CentralCharge z);

    int n() const { return z_.n(); }
    const CentralCharge& charge() const { return z_; }
    PhaseValue value(const LatticeVector& d) const;  // throws on zero vector

private:
    CentralCharge z_;
};

bool is_semistable(const StabilityFunction& s, const NilpotentModule& m, int dim_bound = 6);
bool is_stable(const StabilityFunction& s, const NilpotentModule& m, int dim_bound = 6);

struct HNFactor {
    NilpotentModule factor;
    PhaseValue phase;
    LatticeVector cls;
};

struct HNFiltration {
    std::vector<HNFactor> factors;  // strictly decreasing phases
};

HNFiltration hn_filtration(const StabilityFunction& s, const NilpotentModule& m, int dim_bound = 6);

struct StableSweepReport {
    size_t modules_seen = 0;
    size_t classes_tested = 0;
    size_t stable_classes = 0;
    std::vector<LatticeVector> non_root_counterexamples;  // expected empty
    std::vector<LatticeVector> non_schur_counterexamples; // stable with End dim != 1
};

// Sweep all nilpotent modules of total dimension <= bound over a finite
// field (up to iso fingerprint); checks that stable classes are roots.
StableSweepReport stable_class_is_root(const StabilityFunction& s, int n, const Field& f, int bound);

// The charge sending each finite-type simple class to i and the point class
// delta to -1 (so the zeroth value is -1 - n i); evaluates to -1 + n i on
// the dualizing-sheaf class e0 + 2(e1 + ... + en).
CentralCharge reference_charge(int n);
LatticeVector dualizing_class(int n);

// A generic heart-valid charge for sweeps: z_j = -(j+1)/(n+2) + i.
CentralCharge generic_heart_charge(int n);

}  // namespace twistcat
