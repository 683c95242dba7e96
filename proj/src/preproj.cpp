#include "twistcat/preproj.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace twistcat {

void Path::validate() const {
    if (n < 2) throw std::invalid_argument("paths need n >= 2 (n = 1 has doubled arrows)");
    if (vertices.empty()) throw std::invalid_argument("empty path");
    int m = n + 1;
    for (int v : vertices)
        if (v < 0 || v >= m) throw std::invalid_argument("path vertex out of range");
    for (size_t k = 0; k + 1 < vertices.size(); ++k) {
        int d = ((vertices[k + 1] - vertices[k]) % m + m) % m;
        if (d != 1 && d != m - 1) throw std::invalid_argument("path step must be +-1 mod n+1");
    }
}

std::string PLabel::to_string() const {
    return "P(" + std::to_string(i) + "," + std::to_string(l) + "," + std::to_string(m) + ")";
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    if (n != o.n || !(field == o.field) || terms.size() != o.terms.size()) return false;
    for (const auto& [k, v] : terms) {
        auto it = o.terms.find(k);
        if (it == o.terms.end() || !field.eq(v, it->second)) return false;
    }
    return true;
}

std::string AlgebraElement::to_string() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [k, v] : terms) {
        if (!s.empty()) s += " + ";
        std::string c = field.scalar_to_string(v);
        if (c != "1") s += c + "*";
        s += k.to_string();
    }
    return s;
}

AlgebraElement algebra_zero(int n, const Field& f) { return AlgebraElement{n, f, {}}; }

PLabel normal_form(const Path& p) {
    p.validate();
    int m = p.n + 1;
    int64_t up = 0, down = 0;
    for (size_t k = 0; k + 1 < p.vertices.size(); ++k) {
        int d = ((p.vertices[k + 1] - p.vertices[k]) % m + m) % m;
        if (d == 1) ++up;
        else ++down;
    }
    return PLabel{p.source(), up - down, std::min(up, down)};
}

AlgebraElement path_element(const Path& p, const Field& f) {
    AlgebraElement e = algebra_zero(p.n, f);
    e.terms[normal_form(p)] = f.one();
    return e;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.n != b.n || !(a.field == b.field)) throw std::invalid_argument("algebra mismatch");
    int m = a.n + 1;
    AlgebraElement out = algebra_zero(a.n, a.field);
    for (const auto& [ka, va] : a.terms)
        for (const auto& [kb, vb] : b.terms) {
            // composable iff the first factor ends where the second starts
            if (((ka.i + ka.l) % m + m) % m != kb.i) continue;
            int64_t up = ka.m + std::max<int64_t>(ka.l, 0) + kb.m + std::max<int64_t>(kb.l, 0);
            int64_t down = ka.m + std::max<int64_t>(-ka.l, 0) + kb.m + std::max<int64_t>(-kb.l, 0);
            PLabel k{ka.i, up - down, std::min(up, down)};
            Scalar c = a.field.mul(va, vb);
            auto it = out.terms.find(k);
            Scalar cur = it == out.terms.end() ? a.field.zero() : it->second;
            Scalar next = a.field.add(cur, c);
            if (a.field.is_zero(next)) out.terms.erase(k);
            else out.terms[k] = next;
        }
    return out;
}

AlgebraElement algebra_add(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.n != b.n || !(a.field == b.field)) throw std::invalid_argument("algebra mismatch");
    AlgebraElement out = a;
    for (const auto& [k, v] : b.terms) {
        auto it = out.terms.find(k);
        Scalar cur = it == out.terms.end() ? a.field.zero() : it->second;
        Scalar next = a.field.add(cur, v);
        if (a.field.is_zero(next)) out.terms.erase(k);
        else out.terms[k] = next;
    }
    return out;
}

NilpotentModule::NilpotentModule(int n, const Field& f, std::vector<int> dims)
    : n_(n), field_(f), dims_(std::move(dims)) {
    if (n_ < 2) throw std::invalid_argument("modules need n >= 2");
    if (static_cast<int>(dims_.size()) != n_ + 1) throw std::invalid_argument("dims size mismatch");
    for (int i = 0; i < m(); ++i) {
        int j = (i + 1) % m();
        a_.push_back(Matrix(field_, dims_[j], dims_[i]));
        b_.push_back(Matrix(field_, dims_[i], dims_[j]));
    }
}

int NilpotentModule::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

LatticeVector NilpotentModule::dim_vector() const {
    LatticeVector v = zero_vector(n_);
    for (int i = 0; i <= n_; ++i) v.c[i] = dims_[i];
    return v;
}

bool NilpotentModule::relations_hold() const {
    for (int i = 0; i < m(); ++i) {
        int prev = (i - 1 + m()) % m();
        // b_i a_i and a_{i-1} b_{i-1} are endomorphisms of V_i
        if (!(b_[i].mul(a_[i]) == a_[prev].mul(b_[prev]))) return false;
    }
    return true;
}

bool NilpotentModule::is_nilpotent() const {
    int d = total_dim();
    if (d == 0) return true;
    std::vector<int> off(m() + 1, 0);
    for (int i = 0; i < m(); ++i) off[i + 1] = off[i] + dims_[i];
    Matrix t(field_, d, d);
    for (int i = 0; i < m(); ++i) {
        int j = (i + 1) % m();
        for (int r = 0; r < dims_[j]; ++r)
            for (int c = 0; c < dims_[i]; ++c) t.at(off[j] + r, off[i] + c) = a_[i].at(r, c);
        for (int r = 0; r < dims_[i]; ++r)
            for (int c = 0; c < dims_[j]; ++c) {
                Scalar cur = t.at(off[i] + r, off[j] + c);
                t.at(off[i] + r, off[j] + c) = field_.add(cur, b_[i].at(r, c));
            }
    }
    Matrix p = t;
    for (int k = 1; k < d; ++k) p = p.mul(t);
    return p.is_zero();
}

void NilpotentModule::validate() const {
    if (!relations_hold()) throw std::logic_error("preprojective relations violated");
    if (!is_nilpotent()) throw std::logic_error("module is not nilpotent");
}

bool NilpotentModule::operator==(const NilpotentModule& o) const {
    if (n_ != o.n_ || !(field_ == o.field_) || dims_ != o.dims_) return false;
    for (int i = 0; i < m(); ++i)
        if (!(a_[i] == o.a_[i]) || !(b_[i] == o.b_[i])) return false;
    return true;
}

NilpotentModule simple_module(int n, const Field& f, int i) {
    std::vector<int> dims(n + 1, 0);
    dims[i] = 1;
    return NilpotentModule(n, f, dims);
}

NilpotentModule direct_sum(const NilpotentModule& x, const NilpotentModule& y) {
    if (x.n() != y.n() || !(x.field() == y.field())) throw std::invalid_argument("module mismatch");
    std::vector<int> dims(x.m());
    for (int i = 0; i < x.m(); ++i) dims[i] = x.dims()[i] + y.dims()[i];
    NilpotentModule s(x.n(), x.field(), dims);
    auto fill = [&](Matrix& dst, const Matrix& mx, const Matrix& my) {
        for (size_t r = 0; r < mx.rows(); ++r)
            for (size_t c = 0; c < mx.cols(); ++c) dst.at(r, c) = mx.at(r, c);
        for (size_t r = 0; r < my.rows(); ++r)
            for (size_t c = 0; c < my.cols(); ++c) dst.at(mx.rows() + r, mx.cols() + c) = my.at(r, c);
    };
    for (int i = 0; i < x.m(); ++i) {
        fill(s.a(i), x.a(i), y.a(i));
        fill(s.b(i), x.b(i), y.b(i));
    }
    return s;
}

size_t module_hom(const NilpotentModule& ma, const NilpotentModule& mb) {
    if (ma.n() != mb.n() || !(ma.field() == mb.field()))
        throw std::invalid_argument("module_hom: field or rank mismatch");
    const Field& f = ma.field();
    int mm = ma.m();
    // unknowns: phi_i (dims_b[i] x dims_a[i]); equations from intertwining
    std::vector<int> off(mm + 1, 0);
    for (int i = 0; i < mm; ++i) off[i + 1] = off[i] + mb.dims()[i] * ma.dims()[i];
    int nvars = off[mm];
    std::vector<std::vector<Scalar>> rows;
    auto var = [&](int i, int r, int c) { return off[i] + r * ma.dims()[i] + c; };
    for (int i = 0; i < mm; ++i) {
        int j = (i + 1) % mm;
        // phi_j a^A_i = a^B_i phi_i : dims_b[j] x dims_a[i] equations
        for (int r = 0; r < mb.dims()[j]; ++r)
            for (int c = 0; c < ma.dims()[i]; ++c) {
                std::vector<Scalar> row(nvars, f.zero());
                for (int k = 0; k < ma.dims()[j]; ++k)
                    row[var(j, r, k)] = f.add(row[var(j, r, k)], ma.a(i).at(k, c));
                for (int k = 0; k < mb.dims()[i]; ++k)
                    row[var(i, k, c)] = f.sub(row[var(i, k, c)], mb.a(i).at(r, k));
                rows.push_back(std::move(row));
            }
        // phi_i b^A_i = b^B_i phi_j : dims_b[i] x dims_a[j] equations
        for (int r = 0; r < mb.dims()[i]; ++r)
            for (int c = 0; c < ma.dims()[j]; ++c) {
                std::vector<Scalar> row(nvars, f.zero());
                for (int k = 0; k < ma.dims()[i]; ++k)
                    row[var(i, r, k)] = f.add(row[var(i, r, k)], ma.b(i).at(k, c));
                for (int k = 0; k < mb.dims()[j]; ++k)
                    row[var(j, k, c)] = f.sub(row[var(j, k, c)], mb.b(i).at(r, k));
                rows.push_back(std::move(row));
            }
    }
    Matrix sys(f, rows.size(), nvars);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < nvars; ++c) sys.at(r, c) = rows[r][c];
    return nvars - sys.rank();
}

namespace {

// image of each basis row under a linear map, as vectors in the target
std::vector<std::vector<Scalar>> map_rows(const Field& f, const Matrix& map,
                                          const std::vector<std::vector<Scalar>>& rows) {
    std::vector<std::vector<Scalar>> out;
    for (const auto& row : rows) {
        std::vector<Scalar> img(map.rows(), f.zero());
        for (size_t r = 0; r < map.rows(); ++r)
            for (size_t c = 0; c < map.cols(); ++c)
                img[r] = f.add(img[r], f.mul(map.at(r, c), row[c]));
        out.push_back(std::move(img));
    }
    return out;
}

bool rows_in_span(const Field& f, const std::vector<std::vector<Scalar>>& basis,
                  const std::vector<std::vector<Scalar>>& vs) {
    for (const auto& v : vs)
        if (!in_row_span(f, basis, v)) return false;
    return true;
}

}  // namespace

std::vector<Submodule> submodules(const NilpotentModule& mod, int dim_bound) {
    if (!mod.field().finite()) throw std::invalid_argument("submodules needs a finite field");
    if (mod.total_dim() > dim_bound) throw std::invalid_argument("submodules: dimension bound exceeded");
    const Field& f = mod.field();
    int mm = mod.m();
    std::vector<std::vector<std::vector<std::vector<Scalar>>>> per_vertex;
    for (int i = 0; i < mm; ++i) per_vertex.push_back(all_subspaces(f, mod.dims()[i]));

    std::vector<Submodule> out;
    std::vector<size_t> choice(mm, 0);
    while (true) {
        // invariance check
        bool ok = true;
        for (int i = 0; i < mm && ok; ++i) {
            int j = (i + 1) % mm;
            const auto& ui = per_vertex[i][choice[i]];
            const auto& uj = per_vertex[j][choice[j]];
            if (!rows_in_span(f, uj, map_rows(f, mod.a(i), ui))) ok = false;
            if (ok && !rows_in_span(f, ui, map_rows(f, mod.b(i), uj))) ok = false;
        }
        if (ok) {
            Submodule s{{}, NilpotentModule(mod.n(), f, std::vector<int>(mm, 0)), {}};
            s.bases.resize(mm);
            s.dims.resize(mm);
            for (int i = 0; i < mm; ++i) {
                s.bases[i] = per_vertex[i][choice[i]];
                s.dims[i] = static_cast<int>(s.bases[i].size());
            }
            // induced structure: express images of basis rows in the sub-basis
            NilpotentModule sub(mod.n(), f, s.dims);
            for (int i = 0; i < mm; ++i) {
                int j = (i + 1) % mm;
                auto imgs_a = map_rows(f, mod.a(i), s.bases[i]);
                auto imgs_b = map_rows(f, mod.b(i), s.bases[j]);
                // solve coefficients against the target sub-basis
                auto express = [&](const std::vector<std::vector<Scalar>>& basis,
                                   const std::vector<Scalar>& v) {
                    Matrix bt(f, v.size(), basis.size());
                    for (size_t col = 0; col < basis.size(); ++col)
                        for (size_t row = 0; row < v.size(); ++row) bt.at(row, col) = basis[col][row];
                    Matrix rhs(f, v.size(), 1);
                    for (size_t row = 0; row < v.size(); ++row) rhs.at(row, 0) = v[row];
                    auto sol = bt.solve(rhs);
                    if (!sol) throw std::logic_error("submodule image not in span");
                    return *sol;
                };
                for (size_t col = 0; col < imgs_a.size(); ++col) {
                    Matrix coeff = express(s.bases[j], imgs_a[col]);
                    for (size_t r = 0; r < coeff.rows(); ++r) sub.a(i).at(r, col) = coeff.at(r, 0);
                }
                for (size_t col = 0; col < imgs_b.size(); ++col) {
                    Matrix coeff = express(s.bases[i], imgs_b[col]);
                    for (size_t r = 0; r < coeff.rows(); ++r) sub.b(i).at(r, col) = coeff.at(r, 0);
                }
            }
            s.module = sub;
            out.push_back(std::move(s));
        }
        // odometer
        int t = 0;
        for (; t < mm; ++t) {
            if (++choice[t] < per_vertex[t].size()) break;
            choice[t] = 0;
        }
        if (t == mm) break;
    }
    return out;
}

NilpotentModule quotient_module(const NilpotentModule& mod, const Submodule& s) {
    const Field& f = mod.field();
    int mm = mod.m();
    // per vertex: complement coordinates = non-pivot columns of the sub-basis
    std::vector<std::vector<size_t>> comp(mm);
    std::vector<std::vector<std::vector<Scalar>>> reducers(mm);
    std::vector<int> qdims(mm);
    for (int i = 0; i < mm; ++i) {
        size_t d = mod.dims()[i];
        std::vector<bool> is_pivot(d, false);
        for (const auto& row : s.bases[i]) {
            size_t lead = 0;
            while (lead < d && f.is_zero(row[lead])) ++lead;
            if (lead < d) is_pivot[lead] = true;
        }
        for (size_t c = 0; c < d; ++c)
            if (!is_pivot[c]) comp[i].push_back(c);
        qdims[i] = static_cast<int>(comp[i].size());
        reducers[i] = s.bases[i];
    }
    // quotient coordinates of a vector: reduce mod the sub-basis, read the
    // complement coordinates
    auto project = [&](int i, std::vector<Scalar> v) {
        size_t d = v.size();
        for (const auto& row : reducers[i]) {
            size_t lead = 0;
            while (lead < d && f.is_zero(row[lead])) ++lead;
            if (lead == d || f.is_zero(v[lead])) continue;
            Scalar c = f.mul(v[lead], f.inv(row[lead]));
            for (size_t j = 0; j < d; ++j) v[j] = f.sub(v[j], f.mul(c, row[j]));
        }
        std::vector<Scalar> out;
        for (size_t c : comp[i]) out.push_back(v[c]);
        return out;
    };
    NilpotentModule q(mod.n(), f, qdims);
    for (int i = 0; i < mm; ++i) {
        int j = (i + 1) % mm;
        for (size_t col = 0; col < comp[i].size(); ++col) {
            std::vector<Scalar> e(mod.dims()[i], f.zero());
            e[comp[i][col]] = f.one();
            std::vector<Scalar> img(mod.dims()[j], f.zero());
            for (int r = 0; r < mod.dims()[j]; ++r)
                for (int c = 0; c < mod.dims()[i]; ++c)
                    img[r] = f.add(img[r], f.mul(mod.a(i).at(r, c), e[c]));
            auto qi = project(j, img);
            for (size_t r = 0; r < qi.size(); ++r) q.a(i).at(r, col) = qi[r];
        }
        for (size_t col = 0; col < comp[j].size(); ++col) {
            std::vector<Scalar> e(mod.dims()[j], f.zero());
            e[comp[j][col]] = f.one();
            std::vector<Scalar> img(mod.dims()[i], f.zero());
            for (int r = 0; r < mod.dims()[i]; ++r)
                for (int c = 0; c < mod.dims()[j]; ++c)
                    img[r] = f.add(img[r], f.mul(mod.b(i).at(r, c), e[c]));
            auto qi = project(i, img);
            for (size_t r = 0; r < qi.size(); ++r) q.b(i).at(r, col) = qi[r];
        }
    }
    return q;
}

void enumerate_modules(int n, const Field& f, const std::vector<int>& dims,
                       const std::function<void(const NilpotentModule&)>& visit) {
    if (!f.finite()) throw std::invalid_argument("enumerate_modules needs a finite field");
    int mm = n + 1;
    uint32_t q = f.order();
    NilpotentModule mod(n, f, dims);
    // entry slots: all a-matrix entries then all b-matrix entries
    std::vector<Scalar*> slots;
    for (int i = 0; i < mm; ++i)
        for (size_t r = 0; r < mod.a(i).rows(); ++r)
            for (size_t c = 0; c < mod.a(i).cols(); ++c) slots.push_back(&mod.a(i).at(r, c));
    for (int i = 0; i < mm; ++i)
        for (size_t r = 0; r < mod.b(i).rows(); ++r)
            for (size_t c = 0; c < mod.b(i).cols(); ++c) slots.push_back(&mod.b(i).at(r, c));
    std::vector<uint32_t> digits(slots.size(), 0);
    while (true) {
        if (mod.relations_hold() && mod.is_nilpotent()) visit(mod);
        size_t t = 0;
        for (; t < digits.size(); ++t) {
            if (++digits[t] < q) {
                *slots[t] = f.from_int(digits[t]);
                break;
            }
            digits[t] = 0;
            *slots[t] = f.zero();
        }
        if (t == digits.size()) break;
    }
}

std::string module_fingerprint(const NilpotentModule& m) {
    std::ostringstream os;
    for (int d : m.dims()) os << d << ",";
    os << "|";
    for (int i = 0; i <= m.n(); ++i)
        os << module_hom(m, simple_module(m.n(), m.field(), i)) << ","
           << module_hom(simple_module(m.n(), m.field(), i), m) << ";";
    os << module_hom(m, m);
    return os.str();
}

}  // namespace twistcat
