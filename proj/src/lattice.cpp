#include "twistcat/lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace twistcat {

static void check_same_rank(const LatticeVector& u, const LatticeVector& v) {
    if (u.c.size() != v.c.size()) throw std::invalid_argument("lattice rank mismatch");
}

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
    check_same_rank(*this, o);
    LatticeVector r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const {
    check_same_rank(*this, o);
    LatticeVector r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
}

LatticeVector LatticeVector::operator-() const {
    LatticeVector r = *this;
    for (auto& x : r.c) x = -x;
    return r;
}

bool LatticeVector::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](int64_t x) { return x == 0; });
}

std::string LatticeVector::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + "]";
}

LatticeVector simple_class(int n, int i) {
    if (n < 1 || i < 0 || i > n) throw std::invalid_argument("simple_class out of range");
    LatticeVector v;
    v.c.assign(n + 1, 0);
    v.c[i] = 1;
    return v;
}

LatticeVector zero_vector(int n) {
    LatticeVector v;
    v.c.assign(n + 1, 0);
    return v;
}

LatticeVector delta_class(int n) {
    LatticeVector v;
    v.c.assign(n + 1, 1);
    return v;
}

int64_t euler_form(const LatticeVector& u, const LatticeVector& v) {
    check_same_rank(u, v);
    int n = u.n();
    if (n < 1) throw std::invalid_argument("euler_form needs n >= 1");
    int m = n + 1;
    int64_t s = 0;
    for (int i = 0; i < m; ++i) s += 2 * u.c[i] * v.c[i];
    if (n == 1) {
        s += -2 * (u.c[0] * v.c[1] + u.c[1] * v.c[0]);
        return s;
    }
    for (int i = 0; i < m; ++i) {
        int j = (i + 1) % m;
        s += -(u.c[i] * v.c[j] + u.c[j] * v.c[i]);
    }
    return s;
}

RootKind classify_root(const LatticeVector& v) {
    if (v.is_zero()) return RootKind::NotRoot;
    int64_t q = euler_form(v, v);
    if (q > 2) return RootKind::NotRoot;
    if (q == 2) return RootKind::RealRoot;
    return RootKind::ImaginaryRoot;  // q <= 0 and nonzero happens only on Z*delta
}

LatticeVector reflect(int i, const LatticeVector& v) {
    LatticeVector a = simple_class(v.n(), i);
    int64_t c = euler_form(a, v);
    LatticeVector r = v;
    r.c[i] -= c;
    return r;
}

std::vector<LatticeVector> real_root_classes_mod_delta(int n) {
    if (n < 1) throw std::invalid_argument("n >= 1 required");
    int m = n + 1;
    std::vector<LatticeVector> out;
    for (int start = 0; start < m; ++start)
        for (int len = 1; len <= n; ++len) {
            LatticeVector v = zero_vector(n);
            for (int k = 0; k < len; ++k) v.c[(start + k) % m] = 1;
            out.push_back(v);
        }
    return out;
}

LatticeVector mod_delta_rep(const LatticeVector& v) {
    int64_t mn = *std::min_element(v.c.begin(), v.c.end());
    LatticeVector r = v;
    for (auto& x : r.c) x -= mn;
    return r;
}

std::string RatComplex::to_string() const {
    auto one = [](const Rat& q) {
        std::string s = numerator(q).str();
        if (denominator(q) != 1) s += "/" + denominator(q).str();
        return s;
    };
    return one(re) + (im >= 0 ? " + " + one(im) : " - " + one(Rat(-im))) + " i";
}

RatComplex CentralCharge::eval(const LatticeVector& v) const {
    if (v.c.size() != z.size()) throw std::invalid_argument("charge rank mismatch");
    RatComplex s{0, 0};
    for (size_t i = 0; i < z.size(); ++i) {
        s.re += z[i].re * v.c[i];
        s.im += z[i].im * v.c[i];
    }
    return s;
}

bool is_off_walls(const CentralCharge& Z) {
    int n = Z.n();
    RatComplex d = Z.eval(delta_class(n));
    if (!(d.im == 0) || !(d.re < 0)) return false;
    for (const auto& v : real_root_classes_mod_delta(n))
        if (Z.eval(v).im == 0) return false;
    return true;
}

// colex comparison: read coordinates from the highest index down
static bool colex_less(const LatticeVector& a, const LatticeVector& b) {
    for (size_t i = a.c.size(); i-- > 0;) {
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    }
    return false;
}

std::vector<LatticeVector> simple_roots_from_charge(const CentralCharge& Z) {
    if (!is_off_walls(Z)) throw std::invalid_argument("charge lies on a wall");
    int n = Z.n();
    std::vector<LatticeVector> pos;
    for (const auto& v : real_root_classes_mod_delta(n))
        if (Z.eval(v).im > 0) pos.push_back(mod_delta_rep(v));
    // simple = not a sum of two positive classes mod delta
    std::vector<LatticeVector> simples;
    for (const auto& v : pos) {
        bool decomposable = false;
        for (const auto& u : pos) {
            for (const auto& w : pos) {
                if (mod_delta_rep(u + w) == v) { decomposable = true; break; }
            }
            if (decomposable) break;
        }
        if (!decomposable) simples.push_back(v);
    }
    if (static_cast<int>(simples.size()) != n)
        throw std::logic_error("simple root extraction did not produce n classes");
    if (n == 1) return simples;
    // order along the Dynkin path by chi = -1 adjacency
    auto adjacent = [&](const LatticeVector& a, const LatticeVector& b) {
        return euler_form(a, b) == -1;
    };
    std::vector<int> degree(simples.size(), 0);
    for (size_t i = 0; i < simples.size(); ++i)
        for (size_t j = 0; j < simples.size(); ++j)
            if (i != j && adjacent(simples[i], simples[j])) ++degree[i];
    std::vector<size_t> ends;
    for (size_t i = 0; i < simples.size(); ++i)
        if (degree[i] == 1) ends.push_back(i);
    if (ends.size() != 2) throw std::logic_error("simple roots do not form a path");
    size_t start = ends[0];
    if (colex_less(simples[ends[1]], simples[ends[0]])) start = ends[1];
    std::vector<LatticeVector> ordered;
    std::vector<bool> used(simples.size(), false);
    size_t cur = start;
    for (int k = 0; k <= n - 1; ++k) {
        ordered.push_back(simples[cur]);
        used[cur] = true;
        if (k == n - 1) break;
        bool found = false;
        for (size_t j = 0; j < simples.size(); ++j)
            if (!used[j] && adjacent(simples[cur], simples[j])) {
                cur = j;
                found = true;
                break;
            }
        if (!found) throw std::logic_error("simple roots do not form a path");
    }
    return ordered;
}

}  // namespace twistcat
