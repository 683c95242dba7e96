#include "twistcat/twisted.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace twistcat {

size_t TwistedComplex::add_term(int vertex, int shift) {
    if (vertex < 0 || vertex > n_) throw std::invalid_argument("vertex out of range");
    terms_.push_back({vertex, shift});
    return terms_.size() - 1;
}

int TwistedComplex::entry_basis_degree(size_t s, size_t t) const {
    return 1 - terms_[s].shift + terms_[t].shift;
}

void TwistedComplex::set_diff(size_t s, size_t t, const Scalar& c) {
    if (s >= terms_.size() || t >= terms_.size()) throw std::invalid_argument("term index out of range");
    if (field_.is_zero(c)) {
        diff_.erase({s, t});
        return;
    }
    int p = entry_basis_degree(s, t);
    if (!cat().basis_in_degree(terms_[s].vertex, terms_[t].vertex, p))
        throw std::invalid_argument("no hom basis element for differential entry");
    diff_[{s, t}] = c;
}

void TwistedComplex::validate() const {
    ZigzagCategory zz = cat();
    // legality
    for (const auto& [st, c] : diff_) {
        if (field_.is_zero(c)) throw std::logic_error("stored zero differential entry");
        int p = entry_basis_degree(st.first, st.second);
        if (!zz.basis_in_degree(terms_[st.first].vertex, terms_[st.second].vertex, p))
            throw std::logic_error("illegal differential entry");
    }
    // d.d = 0: collect composite coefficients per (u, w)
    std::map<std::pair<size_t, size_t>, Scalar> sq;
    for (const auto& [uz, c1] : diff_) {
        for (const auto& [zw, c2] : diff_) {
            if (uz.second != zw.first) continue;
            size_t u = uz.first, z = uz.second, w = zw.second;
            auto b1 = zz.basis_in_degree(terms_[u].vertex, terms_[z].vertex, entry_basis_degree(u, z));
            auto b2 = zz.basis_in_degree(terms_[z].vertex, terms_[w].vertex, entry_basis_degree(z, w));
            auto comp = zz.compose(*b2, *b1);
            if (!comp) continue;
            Scalar& acc = sq.try_emplace({u, w}, field_.zero()).first->second;
            acc = field_.add(acc, field_.mul(c1, c2));
        }
    }
    for (const auto& [uw, c] : sq)
        if (!field_.is_zero(c)) throw std::logic_error("differential does not square to zero");
    // strict triangularity: the entry graph must be acyclic
    std::vector<int> indeg(terms_.size(), 0);
    for (const auto& [st, c] : diff_) ++indeg[st.second];
    std::vector<size_t> stack;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (indeg[i] == 0) stack.push_back(i);
    size_t seen = 0;
    while (!stack.empty()) {
        size_t u = stack.back();
        stack.pop_back();
        ++seen;
        for (const auto& [st, c] : diff_)
            if (st.first == u && --indeg[st.second] == 0) stack.push_back(st.second);
    }
    if (seen != terms_.size()) throw std::logic_error("differential is not strictly triangular");
}

LatticeVector TwistedComplex::k_class() const {
    LatticeVector v = zero_vector(n_);
    for (const auto& t : terms_) {
        int sign = ((t.shift % 2) + 2) % 2 == 0 ? 1 : -1;
        v.c[t.vertex] += sign;
    }
    return v;
}

bool TwistedComplex::operator==(const TwistedComplex& o) const {
    if (n_ != o.n_ || !(field_ == o.field_) || !(terms_ == o.terms_)) return false;
    if (diff_.size() != o.diff_.size()) return false;
    for (const auto& [st, c] : diff_) {
        auto it = o.diff_.find(st);
        if (it == o.diff_.end() || !field_.eq(c, it->second)) return false;
    }
    return true;
}

std::string TwistedComplex::to_string() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (i) os << " + ";
        os << "L" << terms_[i].vertex;
        if (terms_[i].shift != 0) os << "[" << terms_[i].shift << "]";
    }
    os << "}";
    if (!diff_.empty()) {
        os << " d:";
        for (const auto& [st, c] : diff_) {
            auto b = cat().basis_in_degree(terms_[st.first].vertex, terms_[st.second].vertex,
                                           entry_basis_degree(st.first, st.second));
            os << " " << st.first << "->" << st.second << ":" << field_.scalar_to_string(c)
               << hom_kind_char(b->kind) << b->index;
        }
    }
    return os.str();
}

TwistedComplex generator(int n, const Field& f, int vertex, int shift) {
    TwistedComplex x(n, f);
    x.add_term(vertex, shift);
    return x;
}

TwistedComplex shift(const TwistedComplex& x, int k) {
    TwistedComplex y(x.n(), x.field());
    for (const auto& t : x.terms()) y.add_term(t.vertex, t.shift + k);
    bool flip = ((k % 2) + 2) % 2 == 1;
    for (const auto& [st, c] : x.diff())
        y.set_diff(st.first, st.second, flip ? x.field().neg(c) : c);
    return y;
}

HomComplex::HomComplex(const TwistedComplex& x, const TwistedComplex& y)
    : field_(x.field()), n_(x.n()) {
    if (x.n() != y.n() || !(x.field() == y.field()))
        throw std::invalid_argument("hom complex needs matching n and field");
    ZigzagCategory zz = x.cat();
    for (size_t s = 0; s < x.terms().size(); ++s)
        for (size_t t = 0; t < y.terms().size(); ++t)
            for (const auto& b : zz.hom_basis(x.terms()[s].vertex, y.terms()[t].vertex)) {
                int deg = hom_degree(b.kind) + x.terms()[s].shift - y.terms()[t].shift;
                index_[{s, t, static_cast<int>(b.kind)}] = basis_.size();
                basis_.push_back({s, t, b.kind, deg});
            }
    dmat_.assign(basis_.size(), {});
    for (size_t bi = 0; bi < basis_.size(); ++bi) {
        const BasisElt& b = basis_[bi];
        HomBasisElement bb{b.kind, x.terms()[b.s].vertex};
        std::map<size_t, Scalar> acc;
        // postcompose with d_Y: t -> t'
        for (const auto& [tt, c] : y.diff()) {
            if (tt.first != b.t) continue;
            auto dk = zz.basis_in_degree(y.terms()[tt.first].vertex, y.terms()[tt.second].vertex,
                                         y.entry_basis_degree(tt.first, tt.second));
            auto comp = zz.compose(*dk, bb);
            if (!comp) continue;
            size_t target = index_.at({b.s, tt.second, static_cast<int>(comp->kind)});
            Scalar& a = acc.try_emplace(target, field_.zero()).first->second;
            a = field_.add(a, c);
        }
        // precompose with d_X: s' -> s, sign -(-1)^{deg b}
        bool flip = ((b.degree % 2) + 2) % 2 == 0;  // -(-1)^{even} = -1
        for (const auto& [ss, c] : x.diff()) {
            if (ss.second != b.s) continue;
            auto dk = zz.basis_in_degree(x.terms()[ss.first].vertex, x.terms()[ss.second].vertex,
                                         x.entry_basis_degree(ss.first, ss.second));
            auto comp = zz.compose(bb, *dk);
            if (!comp) continue;
            size_t target = index_.at({ss.first, b.t, static_cast<int>(comp->kind)});
            Scalar v = flip ? field_.neg(c) : c;
            Scalar& a = acc.try_emplace(target, field_.zero()).first->second;
            a = field_.add(a, v);
        }
        for (const auto& [ti, c] : acc)
            if (!field_.is_zero(c)) dmat_[bi].push_back({ti, c});
    }
    // sanity: D raises degree by one
    for (size_t bi = 0; bi < basis_.size(); ++bi)
        for (const auto& [ti, c] : dmat_[bi])
            if (basis_[ti].degree != basis_[bi].degree + 1)
                throw std::logic_error("hom differential degree error");
}

std::map<int, size_t> HomComplex::cohomology_dims() const {
    std::map<int, std::vector<size_t>> by_deg;
    for (size_t i = 0; i < basis_.size(); ++i) by_deg[basis_[i].degree].push_back(i);
    // rank of D restricted to each degree
    std::map<int, size_t> rank_d;
    for (const auto& [d, idxs] : by_deg) {
        std::map<size_t, size_t> col_of;
        std::set<size_t> targets;
        for (size_t i : idxs)
            for (const auto& [ti, c] : dmat_[i]) targets.insert(ti);
        size_t r = 0;
        std::map<size_t, size_t> row_of;
        for (size_t ti : targets) row_of[ti] = r++;
        Matrix m(field_, targets.size(), idxs.size());
        for (size_t j = 0; j < idxs.size(); ++j)
            for (const auto& [ti, c] : dmat_[idxs[j]]) m.at(row_of[ti], j) = c;
        rank_d[d] = m.rank();
        (void)col_of;
    }
    std::map<int, size_t> h;
    for (const auto& [d, idxs] : by_deg) {
        size_t rd = rank_d.count(d) ? rank_d[d] : 0;
        size_t rprev = rank_d.count(d - 1) ? rank_d[d - 1] : 0;
        size_t dim = idxs.size() - rd - rprev;
        if (dim > 0) h[d] = dim;
    }
    return h;
}

size_t HomComplex::total_cohomology_dim() const {
    size_t s = 0;
    for (const auto& [d, v] : cohomology_dims()) s += v;
    return s;
}

int64_t HomComplex::euler_characteristic() const {
    int64_t s = 0;
    for (const auto& b : basis_) s += ((b.degree % 2) + 2) % 2 == 0 ? 1 : -1;
    return s;
}

bool HomComplex::is_closed(const Morphism& f) const {
    std::map<size_t, Scalar> img;
    for (const auto& [st, c] : f.comps) {
        // identify the basis element carrying this component
        std::optional<size_t> bi;
        for (int k = 0; k < 4 && !bi; ++k) {
            auto it = index_.find({st.first, st.second, k});
            if (it != index_.end() && basis_[it->second].degree == f.degree) bi = it->second;
        }
        if (!bi) throw std::invalid_argument("morphism component without matching hom basis");
        for (const auto& [ti, dc] : dmat_[*bi]) {
            Scalar& a = img.try_emplace(ti, field_.zero()).first->second;
            a = field_.add(a, field_.mul(dc, c));
        }
    }
    for (const auto& [ti, c] : img)
        if (!field_.is_zero(c)) return false;
    return true;
}

std::optional<size_t> HomComplex::index_of(size_t s, size_t t, HomKind kind) const {
    auto it = index_.find({s, t, static_cast<int>(kind)});
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

TwistedComplex cone(const TwistedComplex& x, const TwistedComplex& y, const Morphism& f) {
    if (f.degree != 0) throw std::invalid_argument("cone needs a degree-0 morphism");
    HomComplex h(x, y);
    if (!h.is_closed(f)) throw std::invalid_argument("cone needs a closed morphism");
    TwistedComplex c(x.n(), x.field());
    const Field& fd = x.field();
    size_t nx = x.terms().size();
    for (const auto& t : x.terms()) c.add_term(t.vertex, t.shift + 1);
    for (const auto& t : y.terms()) c.add_term(t.vertex, t.shift);
    for (const auto& [st, v] : x.diff()) c.set_diff(st.first, st.second, fd.neg(v));
    for (const auto& [st, v] : y.diff()) c.set_diff(nx + st.first, nx + st.second, v);
    for (const auto& [st, v] : f.comps) c.set_diff(st.first, nx + st.second, v);
    c.validate();
    return c;
}

TwistedComplex minimize(const TwistedComplex& input) {
    const Field& fd = input.field();
    ZigzagCategory zz = input.cat();
    std::vector<Term> terms = input.terms();
    std::map<std::pair<size_t, size_t>, Scalar> diff = input.diff();

    auto kind_of = [&](size_t s, size_t t) -> std::optional<HomBasisElement> {
        int p = 1 - terms[s].shift + terms[t].shift;
        return zz.basis_in_degree(terms[s].vertex, terms[t].vertex, p);
    };

    while (true) {
        std::optional<std::pair<size_t, size_t>> pick;
        for (const auto& [st, c] : diff) {
            auto k = kind_of(st.first, st.second);
            if (k && k->kind == HomKind::E && !fd.is_zero(c)) {
                pick = st;
                break;
            }
        }
        if (!pick) break;
        size_t s = pick->first, t = pick->second;
        Scalar alpha_inv = fd.inv(diff.at(*pick));
        // collect incoming to t and outgoing from s
        std::vector<std::pair<size_t, Scalar>> into_t, from_s;
        for (const auto& [st2, c] : diff) {
            if (st2.second == t && st2.first != s) into_t.push_back({st2.first, c});
            if (st2.first == s && st2.second != t) from_s.push_back({st2.second, c});
        }
        for (const auto& [u, cb] : into_t) {
            auto bk = kind_of(u, t);
            for (const auto& [w, cg] : from_s) {
                auto gk = kind_of(s, w);
                auto comp = zz.compose(*gk, *bk);  // s -> w after u -> t, through e at (t ~ s)
                if (!comp) continue;
                Scalar corr = fd.mul(fd.mul(cg, alpha_inv), cb);
                auto it = diff.find({u, w});
                Scalar cur = it == diff.end() ? fd.zero() : it->second;
                Scalar next = fd.sub(cur, corr);
                if (fd.is_zero(next)) diff.erase({u, w});
                else diff[{u, w}] = next;
            }
        }
        // drop terms s and t, reindex
        std::vector<size_t> remap(terms.size());
        std::vector<Term> nt;
        for (size_t i = 0; i < terms.size(); ++i) {
            if (i == s || i == t) continue;
            remap[i] = nt.size();
            nt.push_back(terms[i]);
        }
        std::map<std::pair<size_t, size_t>, Scalar> nd;
        for (const auto& [st2, c] : diff) {
            if (st2.first == s || st2.first == t || st2.second == s || st2.second == t) continue;
            nd[{remap[st2.first], remap[st2.second]}] = c;
        }
        terms = std::move(nt);
        diff = std::move(nd);
    }

    // deterministic topological order, ties by (shift, vertex, old index)
    size_t nn = terms.size();
    std::vector<int> indeg(nn, 0);
    for (const auto& [st, c] : diff) ++indeg[st.second];
    std::set<std::tuple<int, int, size_t>> avail;
    for (size_t i = 0; i < nn; ++i)
        if (indeg[i] == 0) avail.insert({terms[i].shift, terms[i].vertex, i});
    std::vector<size_t> order;
    while (!avail.empty()) {
        auto [sh, vx, i] = *avail.begin();
        avail.erase(avail.begin());
        order.push_back(i);
        for (const auto& [st, c] : diff)
            if (st.first == i && --indeg[st.second] == 0)
                avail.insert({terms[st.second].shift, terms[st.second].vertex, st.second});
    }
    if (order.size() != nn) throw std::logic_error("minimize produced a non-triangular differential");
    std::vector<size_t> pos(nn);
    for (size_t k = 0; k < nn; ++k) pos[order[k]] = k;

    TwistedComplex out(input.n(), fd);
    for (size_t k = 0; k < nn; ++k) out.add_term(terms[order[k]].vertex, terms[order[k]].shift);
    for (const auto& [st, c] : diff) out.set_diff(pos[st.first], pos[st.second], c);
    out.validate();
    return out;
}

std::optional<std::pair<int, int>> is_shifted_generator(const TwistedComplex& x) {
    TwistedComplex m = minimize(x);
    if (m.terms().size() != 1 || !m.diff().empty()) return std::nullopt;
    return std::make_pair(m.terms()[0].vertex, m.terms()[0].shift);
}

HomFingerprint hom_fingerprint(const TwistedComplex& x) {
    HomFingerprint fp;
    for (int i = 0; i <= x.n(); ++i) {
        HomComplex h(generator(x.n(), x.field(), i, 0), x);
        for (const auto& [d, dim] : h.cohomology_dims()) fp[{i, d}] = dim;
    }
    return fp;
}

}  // namespace twistcat
