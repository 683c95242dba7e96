#include "twistcat/braid.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace twistcat {

void BraidWord::validate() const {
    if (n < 2) throw std::invalid_argument("braid words need n >= 2");
    for (const auto& l : letters) {
        if (l.exponent != 1 && l.exponent != -1) throw std::invalid_argument("bad exponent");
        if (l.index < lo_index() || l.index > n) throw std::invalid_argument("generator index out of range");
    }
}

BraidWord BraidWord::parse(const std::string& text, BraidFlavor flavor, int n) {
    BraidWord w;
    w.flavor = flavor;
    w.n = n;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S'))
            throw std::invalid_argument("bad word token: " + tok);
        int idx = std::stoi(tok.substr(1));
        w.letters.push_back({idx, tok[0] == 's' ? 1 : -1});
    }
    w.validate();
    return w;
}

std::string BraidWord::to_string() const {
    std::string s;
    for (const auto& l : letters) {
        if (!s.empty()) s += " ";
        s += (l.exponent == 1 ? "s" : "S") + std::to_string(l.index);
    }
    return s;
}

BraidWord free_reduce(const BraidWord& w) {
    BraidWord r = w;
    r.letters.clear();
    for (const auto& l : w.letters) {
        if (!r.letters.empty() && r.letters.back().index == l.index &&
            r.letters.back().exponent == -l.exponent)
            r.letters.pop_back();
        else
            r.letters.push_back(l);
    }
    return r;
}

BraidWord inverse(const BraidWord& w) {
    BraidWord r = w;
    r.letters.clear();
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back({it->index, -it->exponent});
    return r;
}

TwistedComplex twist(int i, const TwistedComplex& x) {
    const Field& fd = x.field();
    TwistedComplex gen = generator(x.n(), fd, i, 0);
    HomComplex h(gen, x);
    // source complex: one copy of L_i[-d] per basis element of degree d,
    // internal differential transported from the hom complex
    TwistedComplex a(x.n(), fd);
    for (const auto& b : h.basis()) a.add_term(i, -b.degree);
    for (size_t bi = 0; bi < h.basis().size(); ++bi)
        for (const auto& [ti, c] : h.differential_of(bi)) a.set_diff(bi, ti, c);
    a.validate();
    // evaluation: the basis element phi maps its L_i[-deg] copy into X by phi
    Morphism ev;
    ev.degree = 0;
    for (size_t bi = 0; bi < h.basis().size(); ++bi) {
        const auto& b = h.basis()[bi];
        ev.comps[{bi, b.t}] = fd.one();
    }
    return minimize(cone(a, x, ev));
}

TwistedComplex untwist(int i, const TwistedComplex& x) {
    const Field& fd = x.field();
    TwistedComplex gen = generator(x.n(), fd, i, 0);
    HomComplex h(x, gen);
    // dual copies: one L_i[+d] per basis element of degree d; the dual
    // differential reverses arrows, with a sign keeping the coevaluation
    // closed over any field
    TwistedComplex b(x.n(), fd);
    for (const auto& e : h.basis()) b.add_term(i, e.degree);
    for (size_t bi = 0; bi < h.basis().size(); ++bi) {
        bool flip = ((h.basis()[bi].degree % 2) + 2) % 2 == 0;  // -(-1)^{deg psi}
        for (const auto& [ti, c] : h.differential_of(bi))
            b.set_diff(ti, bi, flip ? fd.neg(c) : c);
    }
    b.validate();
    Morphism coev;
    coev.degree = 0;
    for (size_t bi = 0; bi < h.basis().size(); ++bi) {
        const auto& e = h.basis()[bi];
        coev.comps[{e.s, bi}] = fd.one();
    }
    return minimize(shift(cone(x, b, coev), -1));
}

TwistedComplex apply_word(const BraidWord& w, const TwistedComplex& x) {
    w.validate();
    TwistedComplex cur = x;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        cur = it->exponent == 1 ? twist(it->index, cur) : untwist(it->index, cur);
    return cur;
}

LatticeVector k_class_action(const BraidWord& w, const LatticeVector& v) {
    LatticeVector cur = v;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        cur = reflect(it->index, cur);
    return cur;
}

bool acts_trivially_on_generators(const BraidWord& w, const Field& f) {
    int lo = w.lo_index();
    for (int i = lo; i <= w.n; ++i) {
        LatticeVector a = simple_class(w.n, i);
        if (!(k_class_action(w, a) == a)) return false;
    }
    for (int i = lo; i <= w.n; ++i) {
        auto g = is_shifted_generator(apply_word(w, generator(w.n, f, i, 0)));
        if (!g || g->first != i || g->second != 0) return false;
    }
    return true;
}

std::vector<BraidWord> reduced_words_up_to(BraidFlavor flavor, int n, int len) {
    std::vector<BraidWord> out;
    BraidWord w;
    w.flavor = flavor;
    w.n = n;
    out.push_back(w);
    int lo = w.lo_index();
    std::function<void(BraidWord&)> rec = [&](BraidWord& cur) {
        if (static_cast<int>(cur.letters.size()) == len) return;
        for (int i = lo; i <= n; ++i)
            for (int e : {1, -1}) {
                if (!cur.letters.empty() && cur.letters.back().index == i &&
                    cur.letters.back().exponent == -e)
                    continue;
                cur.letters.push_back({i, e});
                out.push_back(cur);
                rec(cur);
                cur.letters.pop_back();
            }
    };
    rec(w);
    return out;
}

namespace {

int cyclic_distance(int i, int j, int m) {
    int d = std::abs(i - j) % m;
    return std::min(d, m - d);
}

// encode a word compactly for the visited set
std::string key_of(const std::vector<BraidLetter>& ls) {
    std::string k;
    k.reserve(ls.size());
    for (const auto& l : ls) k.push_back(static_cast<char>((l.index << 1) | (l.exponent > 0 ? 1 : 0)));
    return k;
}

}  // namespace

bool braid_trivial_within(const BraidWord& w0, int max_len, size_t max_states) {
    BraidWord start = free_reduce(w0);
    if (start.letters.empty()) return true;
    if (static_cast<int>(start.letters.size()) > max_len) return false;
    int n = start.n;
    int m = n + 1;
    bool affine = start.flavor == BraidFlavor::Affine;
    int lo = start.lo_index();
    auto adjacent = [&](int i, int j) {
        return affine ? cyclic_distance(i, j, m) == 1 : std::abs(i - j) == 1;
    };
    auto commuting = [&](int i, int j) {
        if (i == j) return false;
        return affine ? cyclic_distance(i, j, m) >= 2 : std::abs(i - j) >= 2;
    };

    std::set<std::string> seen;
    std::deque<std::vector<BraidLetter>> queue;
    queue.push_back(start.letters);
    seen.insert(key_of(start.letters));

    auto push = [&](std::vector<BraidLetter> next) {
        // free reduce in place
        std::vector<BraidLetter> red;
        for (const auto& l : next) {
            if (!red.empty() && red.back().index == l.index && red.back().exponent == -l.exponent)
                red.pop_back();
            else
                red.push_back(l);
        }
        if (static_cast<int>(red.size()) > max_len) return false;
        if (red.empty()) return true;
        std::string k = key_of(red);
        if (seen.size() < max_states && seen.insert(k).second) queue.push_back(std::move(red));
        return false;
    };

    while (!queue.empty()) {
        std::vector<BraidLetter> cur = queue.front();
        queue.pop_front();
        size_t L = cur.size();
        // commutation swaps
        for (size_t p = 0; p + 1 < L; ++p) {
            if (commuting(cur[p].index, cur[p + 1].index)) {
                std::vector<BraidLetter> nx = cur;
                std::swap(nx[p], nx[p + 1]);
                if (push(std::move(nx))) return true;
            }
        }
        // braid substitutions: aba <-> bab on same-sign adjacent triples
        for (size_t p = 0; p + 2 < L; ++p) {
            const auto &a = cur[p], &b = cur[p + 1], &c = cur[p + 2];
            if (a.exponent == b.exponent && b.exponent == c.exponent && a.index == c.index &&
                adjacent(a.index, b.index)) {
                std::vector<BraidLetter> nx = cur;
                nx[p] = b;
                nx[p + 1] = a;
                nx[p + 2] = b;
                if (push(std::move(nx))) return true;
            }
        }
        // mixed braid moves: a b a^-1 -> b^-1 a b and a^-1 b^-1 a -> b a^-1 b^-1
        for (size_t p = 0; p + 2 < L; ++p) {
            const auto &a = cur[p], &b = cur[p + 1], &c = cur[p + 2];
            if (a.index == c.index && a.exponent == -c.exponent && adjacent(a.index, b.index) &&
                b.exponent == a.exponent) {
                // a^e b^e a^-e = b^-e a^e b^e
                std::vector<BraidLetter> nx = cur;
                nx[p] = {b.index, -b.exponent};
                nx[p + 1] = {a.index, a.exponent};
                nx[p + 2] = {b.index, b.exponent};
                if (push(std::move(nx))) return true;
            }
        }
        // insertions of cancelling pairs (only when under the cap)
        if (static_cast<int>(L) + 2 <= max_len) {
            for (size_t p = 0; p <= L; ++p)
                for (int i = lo; i <= n; ++i)
                    for (int e : {1, -1}) {
                        std::vector<BraidLetter> nx;
                        nx.reserve(L + 2);
                        nx.insert(nx.end(), cur.begin(), cur.begin() + p);
                        nx.push_back({i, e});
                        nx.push_back({i, -e});
                        nx.insert(nx.end(), cur.begin() + p, cur.end());
                        if (push(std::move(nx))) return true;
                    }
        }
        if (seen.size() >= max_states) break;
    }
    return false;
}

FaithfulnessReport faithfulness_ball(int n, int radius, const Field& f, int rewrite_cap) {
    FaithfulnessReport rep;
    rep.n = n;
    rep.radius = radius;
    rep.words_tested = 0;
    if (rewrite_cap <= 0) rewrite_cap = radius + 4;
    for (const auto& w : reduced_words_up_to(BraidFlavor::Affine, n, radius)) {
        ++rep.words_tested;
        if (!acts_trivially_on_generators(w, f)) continue;
        BallEntry e;
        e.word = w;
        e.object_trivial = true;
        e.relation_trivial = braid_trivial_within(w, rewrite_cap);
        rep.trivial_words.push_back(std::move(e));
    }
    return rep;
}

}  // namespace twistcat
