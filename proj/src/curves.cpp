#include "twistcat/curves.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace twistcat {

namespace {

struct QP {
    Rat x, y;
    bool operator==(const QP& o) const { return x == o.x && y == o.y; }
    QP operator-(const QP& o) const { return {x - o.x, y - o.y}; }
    QP operator+(const QP& o) const { return {x + o.x, y + o.y}; }
};

Rat cross(const QP& a, const QP& b) { return a.x * b.y - a.y * b.x; }
Rat dot(const QP& a, const QP& b) { return a.x * b.x + a.y * b.y; }

int sgn(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

// principal-argument region id, increasing with Arg in (-pi, pi]
int arg_region(const QP& v) {
    int sx = sgn(v.x), sy = sgn(v.y);
    if (sx == 0 && sy == 0) throw std::logic_error("zero direction");
    if (sy < 0) return sx < 0 ? 0 : (sx == 0 ? 1 : 2);
    if (sy == 0) return sx > 0 ? 3 : 7;
    return sx > 0 ? 4 : (sx == 0 ? 5 : 6);
}

// -1/0/+1 comparing principal arguments
int argcmp(const QP& u, const QP& v) {
    int ru = arg_region(u), rv = arg_region(v);
    if (ru != rv) return ru < rv ? -1 : 1;
    Rat c = cross(u, v);
    if (c > 0) return -1;  // v counterclockwise of u within the region
    if (c < 0) return 1;
    return 0;
}

// ceil((Arg d1 - Arg d0)/pi) for non-parallel directions
int ceil_arg_ratio(const QP& d0, const QP& d1) {
    QP nd0{-d0.x, -d0.y};
    int c = argcmp(d1, d0);
    if (c == 0 || argcmp(d1, nd0) == 0) throw std::logic_error("parallel directions at crossing");
    bool a_pos = arg_region(d0) >= 4 || arg_region(d0) == 7;  // Arg d0 > 0
    if (c > 0) {  // B > A
        if (!a_pos && argcmp(d1, nd0) > 0) return 2;
        return 1;
    }
    // B < A
    if (a_pos && argcmp(d1, nd0) < 0) return -1;
    return 0;
}

// change of the phase-lift integer across a direction chord d -> d1
// (straight path in direction space, branch cut on the negative x ray)
int wrap_delta(const QP& d, const QP& d1) {
    int s0 = sgn(d.y), s1 = sgn(d1.y);
    if (s0 == 0 && s1 == 0) {
        if (dot(d, d1) <= 0) throw std::logic_error("U-turn in direction path");
        return 0;
    }
    if (s0 == 0) return (d.x < 0 && s1 < 0) ? 2 : 0;
    if (s1 == 0) return (d1.x < 0 && s0 < 0) ? -2 : 0;
    if (s0 == s1) return 0;
    // strict crossing of y = 0 at x*
    Rat xs = d.x + (Rat(0) - d.y) * (d1.x - d.x) / (d1.y - d.y);
    if (xs == 0) throw std::logic_error("direction path through origin");
    if (xs > 0) return 0;
    return s0 > 0 ? 2 : -2;
}

}  // namespace

/******** CombCurve basics ********/

void CombCurve::validate() const {
    if (surf.n < 1) throw std::invalid_argument("surface needs n >= 1");
    auto in_disk = [&](int64_t p) { return p >= 0 && p <= surf.n; };
    if (!surf.cylinder && (!in_disk(start) || !in_disk(end)))
        throw std::invalid_argument("disk endpoint out of range");
    std::vector<int64_t> slabs = slab_track();  // throws on inconsistency
    (void)slabs;
    if (!surf.cylinder)
        for (const auto& cr : word)
            if (cr.cut < 0 || cr.cut > surf.n)
                throw std::invalid_argument("disk crossing out of range");
    if (surf.cylinder && (((start % surf.m()) + surf.m()) % surf.m()) ==
                             (((end % surf.m()) + surf.m()) % surf.m()) &&
        start == end && word.empty())
        throw std::invalid_argument("degenerate curve");
}

std::vector<int64_t> CombCurve::slab_track() const {
    std::vector<int64_t> slabs;
    int64_t cur = start_side == SIDE_R ? start : start - 1;
    slabs.push_back(cur);
    for (const auto& cr : word) {
        if (cr.cut == cur) cur -= 1;
        else if (cr.cut == cur + 1) cur += 1;
        else throw std::invalid_argument("crossing not on a wall of the current slab");
        slabs.push_back(cur);
    }
    int64_t want = end_side == SIDE_R ? end : end - 1;
    if (cur != want) throw std::invalid_argument("end germ inconsistent with word");
    return slabs;
}

bool CombCurve::reduced() const {
    for (size_t i = 0; i + 1 < word.size(); ++i)
        if (word[i] == word[i + 1]) return false;
    return true;
}

CombCurve CombCurve::reduce() const {
    CombCurve r = *this;
    std::vector<CurveCrossing> stack;
    for (const auto& cr : r.word) {
        if (!stack.empty() && stack.back() == cr) stack.pop_back();
        else stack.push_back(cr);
    }
    r.word = std::move(stack);
    return r;
}

CombCurve CombCurve::reduce_randomized(std::mt19937_64& rng) const {
    CombCurve r = *this;
    while (true) {
        std::vector<size_t> cancelable;
        for (size_t i = 0; i + 1 < r.word.size(); ++i)
            if (r.word[i] == r.word[i + 1]) cancelable.push_back(i);
        if (cancelable.empty()) break;
        size_t pick = cancelable[rng() % cancelable.size()];
        r.word.erase(r.word.begin() + pick, r.word.begin() + pick + 2);
    }
    return r;
}

CombCurve CombCurve::translated(int64_t dx) const {
    CombCurve r = *this;
    r.start += dx;
    r.end += dx;
    for (auto& cr : r.word) cr.cut += dx;
    return r;
}

CombCurve CombCurve::reversed() const {
    CombCurve r = *this;
    std::swap(r.start, r.end);
    std::swap(r.start_side, r.end_side);
    std::reverse(r.word.begin(), r.word.end());
    return r;
}

CombCurve CombCurve::canonical_translate() const {
    if (!surf.cylinder) return *this;
    int64_t res = ((start % surf.m()) + surf.m()) % surf.m();
    return translated(res - start);
}

bool CombCurve::operator==(const CombCurve& o) const {
    return surf == o.surf && start == o.start && end == o.end && start_side == o.start_side &&
           end_side == o.end_side && word == o.word;
}

GradedCurve standard_curve(const Surface& s, int i) {
    GradedCurve g;
    g.c.surf = s;
    g.grading = 0;
    if (s.cylinder) {
        if (i < 0 || i > s.n) throw std::invalid_argument("standard curve index out of range");
        g.c.start = i;
        g.c.end = i + 1;
    } else {
        if (i < 1 || i > s.n) throw std::invalid_argument("standard curve index out of range");
        g.c.start = i - 1;
        g.c.end = i;
    }
    g.c.start_side = SIDE_R;
    g.c.end_side = SIDE_L;
    return g;
}

GradedCurve shift_grading(const GradedCurve& c, int64_t k) {
    GradedCurve r = c;
    r.grading += k;
    return r;
}

GradedCurve reduce_graded(const GradedCurve& g) {
    GradedCurve r = g;
    r.c = r.c.reduce();
    bool changed = true;
    while (changed) {
        changed = false;
        if (!r.c.word.empty() && r.c.word.front().cut == r.c.start) {
            int side = r.c.word.front().side;
            r.c.word.erase(r.c.word.begin());
            if (side == RAY_D) r.grading += (r.c.start_side == SIDE_R) ? -2 : 2;
            r.c.start_side = 1 - r.c.start_side;
            changed = true;
        }
        if (!r.c.word.empty() && r.c.word.back().cut == r.c.end) {
            r.c.word.pop_back();
            r.c.end_side = 1 - r.c.end_side;
            changed = true;
        }
        if (changed) r.c = r.c.reduce();
    }
    return r;
}

bool fully_reduced(const CombCurve& c) {
    if (!c.reduced()) return false;
    if (!c.word.empty() && (c.word.front().cut == c.start || c.word.back().cut == c.end))
        return false;
    return true;
}

bool same_unoriented_class(const CombCurve& a0, const CombCurve& b0) {
    if (!(a0.surf == b0.surf)) return false;
    auto full = [](const CombCurve& c) {
        return reduce_graded(GradedCurve{c, 0}).c.canonical_translate();
    };
    CombCurve a = full(a0);
    CombCurve b = full(b0);
    if (a == b) return true;
    CombCurve br = full(b0.reversed());
    return a == br;
}

/******** canonical joint realization ********/

namespace {

struct CurveCtx {
    const CombCurve* c;
    std::vector<int64_t> slabs;
};

struct SideItin {
    const CurveCtx* ctx;
    int pos;  // just crossed word[pos] (or germ boundary for pos<0 / >=W)
    int dir;  // +1 forward, -1 backward
};

struct Event {
    bool term;
    int64_t cut;  // crossing
    int side;
    int64_t pt;  // termination
};

Event next_event(const SideItin& it) {
    int idx = it.pos + it.dir;
    int w = static_cast<int>(it.ctx->c->word.size());
    if (idx >= 0 && idx < w) {
        const auto& cr = it.ctx->c->word[idx];
        return Event{false, cr.cut, cr.side, 0};
    }
    return Event{true, 0, 0, it.dir > 0 ? it.ctx->c->end : it.ctx->c->start};
}

int item_of(const Event& e, int64_t slabL) {
    if (e.term) {
        if (e.pt == slabL) return 2;
        if (e.pt == slabL + 1) return 5;
        throw std::logic_error("termination outside slab");
    }
    if (e.cut == slabL) return e.side == RAY_U ? 1 : 3;
    if (e.cut == slabL + 1) return e.side == RAY_U ? 6 : 4;
    throw std::logic_error("crossing outside slab");
}

// -1: a exits earlier (counterclockwise-first from the shared entry edge);
// 0: identical itineraries
int cmp_oneside(SideItin a, SideItin b, int64_t slabL, int entry_item) {
    while (true) {
        Event ea = next_event(a), eb = next_event(b);
        int ia = item_of(ea, slabL), ib = item_of(eb, slabL);
        int ra = ((ia - entry_item) % 6 + 6) % 6;
        int rb = ((ib - entry_item) % 6 + 6) % 6;
        if (ra == 0 || rb == 0) throw std::logic_error("exit through the entry edge");
        if (ra != rb) return ra < rb ? -1 : 1;
        if (ea.term) return 0;
        a.pos += a.dir;
        b.pos += b.dir;
        if (ea.cut == slabL) {
            slabL -= 1;
            entry_item = ea.side == RAY_U ? 6 : 4;
        } else {
            slabL += 1;
            entry_item = ea.side == RAY_U ? 1 : 3;
        }
    }
}

struct StrandRef {
    int ci;
    int occ;
};

// itinerary of the strand into the slab with left cut slabL
SideItin itinerary_into(const std::vector<CurveCtx>& ctxs, const StrandRef& s, int64_t slabL) {
    const CurveCtx& ctx = ctxs[s.ci];
    SideItin it;
    it.ctx = &ctx;
    it.pos = s.occ;
    it.dir = ctx.slabs[s.occ + 1] == slabL ? 1 : -1;
    if (it.dir == -1 && ctx.slabs[s.occ] != slabL) throw std::logic_error("strand not adjacent to slab");
    return it;
}

// true iff strand A crosses the ray closer to its marked point than B
bool closer_on_ray(const std::vector<CurveCtx>& ctxs, int64_t cut, int side, const StrandRef& A,
                   const StrandRef& B) {
    int entry_r = side == RAY_U ? 1 : 3;
    int r = cmp_oneside(itinerary_into(ctxs, A, cut), itinerary_into(ctxs, B, cut), cut, entry_r);
    if (r != 0) {
        bool a_first = r < 0;
        return (entry_r == 3) ? !a_first : a_first;
    }
    int entry_l = side == RAY_U ? 6 : 4;
    int l = cmp_oneside(itinerary_into(ctxs, A, cut - 1), itinerary_into(ctxs, B, cut - 1), cut - 1,
                        entry_l);
    if (l != 0) {
        bool a_first = l < 0;
        return (entry_l == 6) ? !a_first : a_first;
    }
    // fully parallel strands never cross; any fixed order works
    return std::tie(A.ci, A.occ) < std::tie(B.ci, B.occ);
}

struct Realization {
    std::vector<std::vector<QP>> pts;      // polyline per curve
    std::vector<std::vector<int64_t>> kk;  // phase-lift integer per segment
    std::vector<std::vector<int>> ranks;   // per occurrence, 1 = closest
};

int64_t germ_k0(const CombCurve& c, int64_t grading, const QP& d0) {
    if (c.start_side == SIDE_R) return grading;
    return grading + (sgn(d0.y) < 0 ? 2 : 0);
}

// joint canonical realization of reduced curves on the cover
Realization realize(const Surface& surf, const std::vector<const CombCurve*>& curves,
                    const std::vector<int64_t>& gradings) {
    (void)surf;
    std::vector<CurveCtx> ctxs;
    for (const auto* c : curves) {
        if (!fully_reduced(*c)) throw std::invalid_argument("realize needs fully reduced curves");
        ctxs.push_back({c, c->slab_track()});
    }
    // group strands by ray, sort by closeness
    std::map<std::pair<int64_t, int>, std::vector<StrandRef>> rays;
    for (size_t ci = 0; ci < curves.size(); ++ci)
        for (size_t o = 0; o < curves[ci]->word.size(); ++o) {
            const auto& cr = curves[ci]->word[o];
            rays[{cr.cut, cr.side}].push_back({static_cast<int>(ci), static_cast<int>(o)});
        }
    std::map<std::pair<int, int>, int> rank_of;  // (ci, occ) -> rank
    for (auto& [key, strands] : rays) {
        std::sort(strands.begin(), strands.end(), [&](const StrandRef& A, const StrandRef& B) {
            return closer_on_ray(ctxs, key.first, key.second, A, B);
        });
        for (size_t r = 0; r < strands.size(); ++r)
            rank_of[{strands[r].ci, strands[r].occ}] = static_cast<int>(r) + 1;
    }
    // anchor points
    auto anchor = [&](int ci, int occ) {
        const auto& cr = curves[ci]->word[occ];
        int rank = rank_of.at({ci, occ});
        return QP{Rat(cr.cut), cr.side == RAY_U ? Rat(rank) : Rat(-rank)};
    };
    // corners: nodes around a marked point between same-cut neighbors
    struct Corner {
        int ci;
        int node;  // index into the pending vertex list where the corner goes
        int64_t cut;
        int sign;        // +1: slab right of the cut
        int hi, lo;      // wall ranks, 0 = germ anchor at the point
        Rat ylo, yhi;    // y-span
    };
    std::vector<std::vector<QP>> pts(curves.size());
    std::vector<Corner> corners;
    for (size_t ci = 0; ci < curves.size(); ++ci) {
        const CombCurve& c = *curves[ci];
        const auto& slabs = ctxs[ci].slabs;
        auto& poly = pts[ci];
        poly.push_back({Rat(c.start), Rat(0)});
        for (size_t o = 0; o < c.word.size(); ++o) {
            QP a = anchor(ci, o);
            const QP& prev = poly.back();
            if (prev.x == a.x) {  // corner around the marked point at this cut
                Corner corner;
                corner.ci = static_cast<int>(ci);
                corner.node = static_cast<int>(poly.size());
                corner.cut = c.word[o].cut;
                corner.sign = slabs[o] == c.word[o].cut ? 1 : -1;
                Rat y0 = prev.y, y1 = a.y;
                corner.ylo = std::min(y0, y1);
                corner.yhi = std::max(y0, y1);
                auto rank_at = [&](const Rat& y) {
                    if (y == 0) return 0;
                    return static_cast<int>(y > 0 ? Rat(y).convert_to<int64_t>()
                                                  : Rat(-y).convert_to<int64_t>());
                };
                corner.hi = std::max(rank_at(y0), rank_at(y1));
                corner.lo = std::min(rank_at(y0), rank_at(y1));
                corners.push_back(corner);
                poly.push_back({Rat(0), Rat(0)});  // placeholder, filled below
            }
            poly.push_back(a);
        }
        QP endp{Rat(c.end), Rat(0)};
        if (poly.back().x == endp.x) {
            Corner corner;
            corner.ci = static_cast<int>(ci);
            corner.node = static_cast<int>(poly.size());
            corner.cut = c.end;
            corner.sign = slabs.back() == c.end ? 1 : -1;
            Rat y0 = poly.back().y;
            corner.ylo = std::min(y0, Rat(0));
            corner.yhi = std::max(y0, Rat(0));
            corner.hi = static_cast<int>((y0 > 0 ? y0 : Rat(-y0)).convert_to<int64_t>());
            corner.lo = 0;
            corners.push_back(corner);
            poly.push_back({Rat(0), Rat(0)});
        }
        poly.push_back(endp);
    }
    // nesting offsets per (cut, sign): tighter corners hug the point
    std::map<std::pair<int64_t, int>, std::vector<size_t>> families;
    for (size_t i = 0; i < corners.size(); ++i)
        families[{corners[i].cut, corners[i].sign}].push_back(i);
    for (auto& [key, idxs] : families) {
        std::sort(idxs.begin(), idxs.end(), [&](size_t a, size_t b) {
            const Corner &ca = corners[a], &cb = corners[b];
            return std::tie(ca.hi, ca.lo, ca.ci, ca.node) < std::tie(cb.hi, cb.lo, cb.ci, cb.node);
        });
        int K = static_cast<int>(idxs.size());
        for (int k = 0; k < K; ++k) {
            const Corner& c = corners[idxs[k]];
            Rat rho = Rat(k + 1, 3 * (K + 1));
            Rat x = Rat(c.cut) + Rat(c.sign) * rho;
            Rat y;
            bool placed = false;
            for (int num : {1, 2, 3}) {
                Rat beta = num == 1 ? Rat(1, 2) : (num == 2 ? Rat(2, 5) : Rat(3, 7));
                y = c.ylo + (c.yhi - c.ylo) * beta;
                if (y != 0) { placed = true; break; }
            }
            if (!placed) throw std::logic_error("corner placement failed");
            pts[c.ci][c.node] = QP{x, y};
        }
    }
    // drop repeated consecutive points (possible for trivial words)
    for (auto& poly : pts) {
        std::vector<QP> out;
        for (const auto& p : poly)
            if (out.empty() || !(out.back() == p)) out.push_back(p);
        poly = std::move(out);
    }
    // phase-lift integers per segment
    Realization real;
    real.pts = std::move(pts);
    real.kk.resize(curves.size());
    real.ranks.resize(curves.size());
    for (size_t ci = 0; ci < curves.size(); ++ci) {
        const auto& poly = real.pts[ci];
        if (poly.size() < 2) throw std::logic_error("degenerate realization");
        QP d0 = poly[1] - poly[0];
        int64_t k = germ_k0(*curves[ci], gradings[ci], d0);
        real.kk[ci].push_back(k);
        for (size_t s = 1; s + 1 < poly.size(); ++s) {
            QP a = poly[s] - poly[s - 1];
            QP b = poly[s + 1] - poly[s];
            k += wrap_delta(a, b);
            real.kk[ci].push_back(k);
        }
        for (size_t o = 0; o < curves[ci]->word.size(); ++o)
            real.ranks[ci].push_back(rank_of.at({static_cast<int>(ci), static_cast<int>(o)}));
    }
    return real;
}

/******** word extraction from a polyline ********/

struct ExtractedCurve {
    CombCurve c;
    QP first_dir;  // direction of the initial segment
};

ExtractedCurve extract_word(const Surface& surf, const std::vector<QP>& poly) {
    ExtractedCurve out;
    out.c.surf = surf;
    const QP& p0 = poly.front();
    const QP& pn = poly.back();
    if (p0.y != 0 || denominator(p0.x) != 1 || pn.y != 0 || denominator(pn.x) != 1)
        throw std::logic_error("polyline endpoints are not marked points");
    out.c.start = numerator(p0.x).convert_to<int64_t>();
    out.c.end = numerator(pn.x).convert_to<int64_t>();
    out.first_dir = poly[1] - poly[0];
    // crossings: sorted sweep over every integer cut in range
    Rat lo = p0.x, hi = p0.x;
    for (const auto& p : poly) {
        lo = std::min(lo, p.x);
        hi = std::max(hi, p.x);
    }
    int64_t clo = numerator(lo).convert_to<int64_t>() / denominator(lo).convert_to<int64_t>() - 2;
    int64_t chi = numerator(hi).convert_to<int64_t>() / denominator(hi).convert_to<int64_t>() + 2;
    struct Hit {
        size_t seg;
        Rat t;
        int64_t cut;
        int side;
        bool operator<(const Hit& o) const { return std::tie(seg, t) < std::tie(o.seg, o.t); }
    };
    std::vector<Hit> hits;
    for (int64_t cut = clo; cut <= chi; ++cut) {
        Rat cx(cut);
        // walk signs of x - cut along the polyline; emit a hit at each sign change
        size_t i = 0;
        while (i + 1 < poly.size()) {
            int s0 = sgn(poly[i].x - cx);
            if (s0 == 0) { ++i; continue; }
            // find next strictly nonzero sign
            size_t j = i + 1;
            while (j < poly.size() && sgn(poly[j].x - cx) == 0) ++j;
            if (j == poly.size()) break;
            int s1 = sgn(poly[j].x - cx);
            if (s1 != s0) {
                // crossing happens at the single touch point or inside segment (i, i+1=j)
                Rat y;
                size_t seg;
                Rat t;
                if (j == i + 1) {
                    seg = i;
                    t = (cx - poly[i].x) / (poly[j].x - poly[i].x);
                    y = poly[i].y + t * (poly[j].y - poly[i].y);
                } else {
                    if (j != i + 2) throw std::logic_error("polyline runs along a cut line");
                    seg = i;
                    t = 1;
                    y = poly[i + 1].y;
                }
                if (y == 0) throw std::logic_error("polyline passes through a marked point");
                hits.push_back({seg, t, cut, y > 0 ? RAY_U : RAY_D});
            }
            i = j;
        }
    }
    std::sort(hits.begin(), hits.end());
    for (const auto& h : hits) out.c.word.push_back({h.cut, h.side});
    // germ sides from the first / last x deviation
    auto side_from = [&](bool from_start) {
        if (from_start) {
            for (size_t i = 1; i < poly.size(); ++i) {
                int s = sgn(poly[i].x - p0.x);
                if (s != 0) return s > 0 ? SIDE_R : SIDE_L;
            }
        } else {
            for (size_t i = poly.size() - 1; i-- > 0;) {
                int s = sgn(poly[i].x - pn.x);
                if (s != 0) return s > 0 ? SIDE_R : SIDE_L;
            }
        }
        throw std::logic_error("curve with no x extent");
    };
    out.c.start_side = side_from(true);
    out.c.end_side = side_from(false);
    return out;
}

/******** exact PL half twist via point slides ********/

struct Slide {
    QP from, to;
    Rat clear;  // support = bounding box of {from,to} padded by clear
    QP c[4];    // rectangle corners, counterclockwise

    void build() {
        Rat x0 = std::min(from.x, to.x) - clear, x1 = std::max(from.x, to.x) + clear;
        Rat y0 = std::min(from.y, to.y) - clear, y1 = std::max(from.y, to.y) + clear;
        c[0] = {x0, y0};
        c[1] = {x1, y0};
        c[2] = {x1, y1};
        c[3] = {x0, y1};
    }
    bool inside(const QP& p) const {
        return p.x >= c[0].x && p.x <= c[1].x && p.y >= c[0].y && p.y <= c[2].y;
    }
    bool strictly_inside(const QP& p) const {
        return p.x > c[0].x && p.x < c[1].x && p.y > c[0].y && p.y < c[2].y;
    }
};

Rat orient(const QP& a, const QP& b, const QP& c) { return cross(b - a, c - a); }

bool in_triangle(const QP& a, const QP& b, const QP& c, const QP& p) {
    Rat d1 = orient(a, b, p), d2 = orient(b, c, p), d3 = orient(c, a, p);
    bool has_neg = d1 < 0 || d2 < 0 || d3 < 0;
    bool has_pos = d1 > 0 || d2 > 0 || d3 > 0;
    return !(has_neg && has_pos);
}

// affine map of the fan triangle (c_i, c_j, P) -> (c_i, c_j, Q) applied to p
QP tri_map(const QP& ci, const QP& cj, const QP& P, const QP& Q, const QP& p) {
    // solve p = ci + u (cj - ci) + v (P - ci); image = ci + u (cj - ci) + v (Q - ci)
    QP e1 = cj - ci, e2 = P - ci, r = p - ci;
    Rat det = cross(e1, e2);
    if (det == 0) throw std::logic_error("degenerate slide triangle");
    Rat u = cross(r, e2) / det;
    Rat v = cross(e1, r) / det;
    QP f2 = Q - ci;
    return {ci.x + u * e1.x + v * f2.x, ci.y + u * e1.y + v * f2.y};
}

QP tri_map_dir(const QP& ci, const QP& cj, const QP& P, const QP& Q, const QP& d) {
    QP e1 = cj - ci, e2 = P - ci;
    Rat det = cross(e1, e2);
    Rat u = cross(d, e2) / det;
    Rat v = cross(e1, d) / det;
    QP f2 = Q - ci;
    return {u * e1.x + v * f2.x, u * e1.y + v * f2.y};
}

// segment-segment intersection parameters on [a,b] (0..1), proper or touching
std::vector<Rat> seg_cut_params(const QP& a, const QP& b, const QP& c, const QP& d) {
    std::vector<Rat> out;
    QP ab = b - a, cd = d - c;
    Rat den = cross(ab, cd);
    if (den == 0) return out;
    Rat t = cross(c - a, cd) / den;
    Rat u = cross(c - a, ab) / den;
    if (t > 0 && t < 1 && u >= 0 && u <= 1) out.push_back(t);
    return out;
}

struct SlideCtx {
    Slide s;
    bool periodic;
    int64_t period;

    // translate indices whose support can touch x-range [lo, hi]
    std::vector<int64_t> translates(const Rat& lo, const Rat& hi) const {
        if (!periodic) return {0};
        std::vector<int64_t> out;
        // support x in [c0.x, c1.x] + k*period
        Rat w0 = s.c[0].x, w1 = s.c[1].x;
        // k from (lo - w1)/period to (hi - w0)/period
        auto floor_div = [](const Rat& a, int64_t b) {
            BigInt num = numerator(a) * b, den = denominator(a) * b * b;
            (void)num; (void)den;
            // integer floor of a / b with b > 0
            BigInt n = numerator(a), d0 = denominator(a) * b;
            BigInt q = n / d0;
            if (n % d0 != 0 && ((n < 0) != (d0 < 0))) q -= 1;
            return q.convert_to<int64_t>();
        };
        int64_t k0 = floor_div(lo - w1, period) - 1;
        int64_t k1 = floor_div(hi - w0, period) + 2;
        for (int64_t k = k0; k <= k1; ++k) out.push_back(k);
        return out;
    }

    Slide at(int64_t k) const {
        Slide t = s;
        Rat dx(k * period);
        t.from.x += dx;
        t.to.x += dx;
        for (auto& p : t.c) p.x += dx;
        return t;
    }
};

// apply one slide to a polyline
std::vector<QP> apply_slide(const SlideCtx& sc, const std::vector<QP>& poly) {
    std::vector<QP> out;
    auto map_point = [&](const Slide& sl, const QP& p) {
        if (!sl.inside(p)) return p;
        for (int i = 0; i < 4; ++i) {
            const QP& a = sl.c[i];
            const QP& b = sl.c[(i + 1) % 4];
            if (in_triangle(a, b, sl.from, p)) return tri_map(a, b, sl.from, sl.to, p);
        }
        throw std::logic_error("point in support but in no fan triangle");
    };
    for (size_t i = 0; i + 1 < poly.size(); ++i) {
        const QP& A = poly[i];
        const QP& B = poly[i + 1];
        Rat lo = std::min(A.x, B.x), hi = std::max(A.x, B.x);
        std::vector<Rat> ts{Rat(0), Rat(1)};
        for (int64_t k : sc.translates(lo, hi)) {
            Slide sl = sc.at(k);
            for (int e = 0; e < 4; ++e) {
                for (Rat t : seg_cut_params(A, B, sl.c[e], sl.c[(e + 1) % 4])) ts.push_back(t);
                for (Rat t : seg_cut_params(A, B, sl.c[e], sl.from)) ts.push_back(t);
            }
        }
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        for (size_t j = 0; j + 1 < ts.size(); ++j) {
            QP p{A.x + ts[j] * (B.x - A.x), A.y + ts[j] * (B.y - A.y)};
            QP q;
            // locate by which translate's support contains the piece midpoint
            Rat tm = (ts[j] + ts[j + 1]) / 2;
            QP mid{A.x + tm * (B.x - A.x), A.y + tm * (B.y - A.y)};
            bool mapped = false;
            for (int64_t k : sc.translates(std::min(p.x, mid.x), std::max(p.x, mid.x))) {
                Slide sl = sc.at(k);
                if (sl.inside(mid)) {
                    q = map_point(sl, p);
                    mapped = true;
                    break;
                }
            }
            if (!mapped) q = p;
            if (out.empty() || !(out.back() == q)) out.push_back(q);
        }
    }
    // final point
    {
        const QP& B = poly.back();
        QP q = B;
        for (int64_t k : sc.translates(B.x, B.x)) {
            Slide sl = sc.at(k);
            if (sl.inside(B)) { q = map_point(sl, B); break; }
        }
        if (out.empty() || !(out.back() == q)) out.push_back(q);
    }
    return out;
}

// transport of the germ state (position, direction, lift integer)
void transport_germ(const SlideCtx& sc, QP& pos, QP& dir, int64_t& k) {
    for (int64_t t : sc.translates(pos.x, pos.x)) {
        Slide sl = sc.at(t);
        if (!sl.inside(pos)) continue;
        // pick the fan triangle containing pos with dir pointing inside
        Rat eps(1, 1 << 20);
        QP probe{pos.x + dir.x * eps, pos.y + dir.y * eps};
        int chosen = -1;
        for (int i = 0; i < 4; ++i) {
            const QP& a = sl.c[i];
            const QP& b = sl.c[(i + 1) % 4];
            if (in_triangle(a, b, sl.from, pos) && in_triangle(a, b, sl.from, probe)) {
                chosen = i;
                break;
            }
        }
        if (chosen < 0) {
            for (int i = 0; i < 4 && chosen < 0; ++i)
                if (in_triangle(sl.c[i], sl.c[(i + 1) % 4], sl.from, pos)) chosen = i;
        }
        if (chosen < 0) throw std::logic_error("germ transport: no triangle");
        const QP& a = sl.c[chosen];
        const QP& b = sl.c[(chosen + 1) % 4];
        QP npos = tri_map(a, b, sl.from, sl.to, pos);
        QP ndir = tri_map_dir(a, b, sl.from, sl.to, dir);
        k += wrap_delta(dir, ndir);
        pos = npos;
        dir = ndir;
        return;
    }
}

}  // namespace

GradedCurve reverse_graded(const GradedCurve& gc) {
    GradedCurve rg = reduce_graded(gc);
    const CombCurve& red = rg.c;
    Realization real = realize(red.surf, {&red}, {rg.grading});
    const auto& poly = real.pts[0];
    size_t last = poly.size() - 2;
    QP dlast = poly[last + 1] - poly[last];
    int64_t k_end = real.kk[0][last];
    // switch the lift representative to the away-pointing germ direction
    bool arg_pos = dlast.y > 0 || (dlast.y == 0 && dlast.x < 0);
    int64_t k_away = k_end + (arg_pos ? 1 : -1);
    QP daway{-dlast.x, -dlast.y};
    GradedCurve out;
    out.c = red.reversed();
    if (out.c.start_side == SIDE_R) out.grading = k_away;
    else out.grading = k_away - (sgn(daway.y) < 0 ? 2 : 0);
    return out;
}

GradedCurve canonical_graded(const GradedCurve& gc) {
    GradedCurve a = reduce_graded(gc);
    a.c = a.c.canonical_translate();
    GradedCurve b = reverse_graded(a);
    b.c = b.c.canonical_translate();
    auto key = [](const CombCurve& c) {
        std::vector<int64_t> k{c.start, c.end, c.start_side, c.end_side};
        for (const auto& cr : c.word) {
            k.push_back(cr.cut);
            k.push_back(cr.side);
        }
        return k;
    };
    return key(a.c) <= key(b.c) ? a : b;
}

bool same_graded_class(const GradedCurve& a, const GradedCurve& b) {
    GradedCurve ca = canonical_graded(a), cb = canonical_graded(b);
    return ca.c == cb.c && ca.grading == cb.grading;
}

GradedCurve half_twist(int i, int sign, const GradedCurve& gc) {
    const Surface& surf = gc.c.surf;
    if (sign != 1 && sign != -1) throw std::invalid_argument("half_twist sign must be +-1");
    int64_t p;
    if (surf.cylinder) {
        if (surf.n < 2) throw std::invalid_argument("cylinder twists need n >= 2");
        if (i < 0 || i > surf.n) throw std::invalid_argument("twist index out of range");
        p = i;
    } else {
        if (i < 1 || i > surf.n) throw std::invalid_argument("twist index out of range");
        p = i - 1;
    }
    GradedCurve rgc = reduce_graded(gc);
    const CombCurve& red = rgc.c;
    Realization real = realize(surf, {&red}, {rgc.grading});
    std::vector<QP> poly = real.pts[0];
    QP pos = poly[0];
    QP dir = poly[1] - poly[0];
    int64_t k = real.kk[0][0];

    Rat h(1, 4), w(1, 8);
    QP A{Rat(p), Rat(0)}, B{Rat(p + 1), Rat(0)};
    Rat hy = sign == 1 ? h : -h;  // +1: right point over the top
    std::vector<Slide> slides;
    auto mk = [&](QP f, QP t) {
        Slide s;
        s.from = f;
        s.to = t;
        s.clear = w;
        s.build();
        slides.push_back(s);
    };
    mk(B, {B.x, hy});                  // B out of the axis
    mk(A, {A.x, -hy});                 // A to the other side
    mk({A.x, -hy}, {B.x, -hy});        // A across
    mk({B.x, hy}, {A.x, hy});          // B across
    mk({B.x, -hy}, B);                 // A lands on B's spot
    mk({A.x, hy}, A);                  // B lands on A's spot

    for (const auto& s : slides) {
        SlideCtx sc{s, surf.cylinder, surf.m()};
        transport_germ(sc, pos, dir, k);
        poly = apply_slide(sc, poly);
    }

    ExtractedCurve ex = extract_word(surf, poly);
    if (cross(dir, ex.first_dir) != 0 || dot(dir, ex.first_dir) <= 0)
        throw std::logic_error("germ transport disagrees with the slid polyline");
    GradedCurve out;
    out.c = ex.c;
    // canonical grading integer from the transported germ lift
    if (out.c.start_side == SIDE_R) out.grading = k;
    else out.grading = k - (sgn(dir.y) < 0 ? 2 : 0);
    out = reduce_graded(out);
    out.c = out.c.canonical_translate();
    return out;
}

/******** intersections ********/

namespace {

struct PairGeometry {
    int interior = 0;
    std::vector<int> interior_mu;
};

// proper crossings and Maslov indices between two realized polylines
PairGeometry pair_geometry(const Realization& real) {
    PairGeometry out;
    const auto& P0 = real.pts[0];
    const auto& P1 = real.pts[1];
    for (size_t i = 0; i + 1 < P0.size(); ++i)
        for (size_t j = 0; j + 1 < P1.size(); ++j) {
            const QP &a = P0[i], &b = P0[i + 1], &c = P1[j], &d = P1[j + 1];
            Rat d1 = orient(c, d, a), d2 = orient(c, d, b), d3 = orient(a, b, c), d4 = orient(a, b, d);
            bool proper = ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
                          ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
            if (!proper) {
                // degenerate contact other than shared endpoints is a bug
                bool shares = a == c || a == d || b == c || b == d;
                if (!shares && (d1 == 0 || d2 == 0 || d3 == 0 || d4 == 0)) {
                    // touching without crossing is fine only when the zero
                    // orientation comes from a point outside the other segment
                    auto on_seg = [&](const QP& u, const QP& v, const QP& q) {
                        if (orient(u, v, q) != 0) return false;
                        return std::min(u.x, v.x) <= q.x && q.x <= std::max(u.x, v.x) &&
                               std::min(u.y, v.y) <= q.y && q.y <= std::max(u.y, v.y);
                    };
                    if (on_seg(c, d, a) || on_seg(c, d, b) || on_seg(a, b, c) || on_seg(a, b, d))
                        throw std::logic_error("degenerate segment contact in realization");
                }
                continue;
            }
            ++out.interior;
            QP d0 = b - a, dd1 = d - c;
            int mu = static_cast<int>(real.kk[1][j] - real.kk[0][i]) + ceil_arg_ratio(d0, dd1);
            out.interior_mu.push_back(mu);
        }
    return out;
}

int endpoint_mu(const Realization& real, bool start0, bool start1) {
    const auto& P0 = real.pts[0];
    const auto& P1 = real.pts[1];
    auto germ = [&](const std::vector<QP>& poly, const std::vector<int64_t>& kk, bool at_start) {
        QP d;
        int64_t k;
        if (at_start) {
            d = poly[1] - poly[0];
            k = kk.front();
        } else {
            size_t last = poly.size() - 2;
            QP dl = poly[last + 1] - poly[last];
            bool arg_pos = dl.y > 0 || (dl.y == 0 && dl.x < 0);
            k = kk[last] + (arg_pos ? 1 : -1);
            d = QP{-dl.x, -dl.y};
        }
        return std::make_pair(d, k);
    };
    auto [d0, k0] = germ(P0, real.kk[0], start0);
    auto [d1, k1] = germ(P1, real.kk[1], start1);
    int c = argcmp(d1, d0);
    if (c == 0) throw std::logic_error("parallel germs at shared endpoint");
    return static_cast<int>(k1 - k0) + (c > 0 ? 2 : 0);
}

}  // namespace

CurveIntersections intersections(const GradedCurve& gc0raw, const GradedCurve& gc1raw) {
    if (!(gc0raw.c.surf == gc1raw.c.surf)) throw std::invalid_argument("surface mismatch");
    const Surface& surf = gc0raw.c.surf;
    GradedCurve gc0 = reduce_graded(gc0raw);
    GradedCurve gc1 = reduce_graded(gc1raw);
    CurveIntersections out;
    out.I = 0;
    if (same_unoriented_class(gc0.c, gc1.c)) {
        int64_t d = canonical_graded(gc1).grading - canonical_graded(gc0).grading;
        out.I = 1;
        out.endpoint_mu = {static_cast<int>(d), static_cast<int>(d + 2)};
        out.igr[static_cast<int>(d)] += 1;
        out.igr[static_cast<int>(d + 2)] += 1;
        return out;
    }
    // translate window (cylinder); the disk uses the single translate 0
    std::vector<int64_t> shifts{0};
    if (surf.cylinder) {
        auto range = [](const CombCurve& c) {
            int64_t lo = std::min(c.start, c.end), hi = std::max(c.start, c.end);
            for (const auto& cr : c.word) {
                lo = std::min(lo, cr.cut);
                hi = std::max(hi, cr.cut);
            }
            return std::make_pair(lo, hi);
        };
        auto [lo0, hi0] = range(gc0.c);
        auto [lo1, hi1] = range(gc1.c);
        shifts.clear();
        int64_t m = surf.m();
        int64_t kmin = (lo0 - hi1 - 2) / m - 2;
        int64_t kmax = (hi0 - lo1 + 2) / m + 2;
        for (int64_t k = kmin; k <= kmax; ++k) shifts.push_back(k);
    }
    int interior = 0, shared = 0;
    for (int64_t k : shifts) {
        CombCurve c1 = gc1.c.translated(k * (surf.cylinder ? surf.m() : 1));
        if (!surf.cylinder && k != 0) continue;
        Realization real = realize(surf, {&gc0.c, &c1}, {gc0.grading, gc1.grading});
        // self-check: the realization reproduces the words it was built from
        for (int ci = 0; ci < 2; ++ci) {
            ExtractedCurve ex = extract_word(surf, real.pts[ci]);
            const CombCurve& want = ci == 0 ? gc0.c : c1;
            if (!(ex.c.reduce() == want))
                throw std::logic_error("realization self-check failed");
        }
        PairGeometry pg = pair_geometry(real);
        interior += pg.interior;
        for (int mu : pg.interior_mu) {
            out.interior_mu.push_back(mu);
            out.igr[mu] += 1;
            out.igr[mu + 1] += 1;
        }
        // shared endpoints in this translate
        for (bool s0 : {true, false})
            for (bool s1 : {true, false}) {
                int64_t e0 = s0 ? gc0.c.start : gc0.c.end;
                int64_t e1 = s1 ? c1.start : c1.end;
                if (e0 != e1) continue;
                ++shared;
                int mu = endpoint_mu(real, s0, s1);
                out.endpoint_mu.push_back(mu);
                out.igr[mu] += 1;
            }
    }
    out.I = Rat(interior) + Rat(shared, 2);
    return out;
}

Rat geometric_intersection(const CombCurve& c0, const CombCurve& c1) {
    GradedCurve g0{c0, 0}, g1{c1, 0};
    return intersections(g0, g1).I;
}

std::map<int, int64_t> graded_intersection(const GradedCurve& c0, const GradedCurve& c1) {
    return intersections(c0, c1).igr;
}

std::vector<int> self_ranks(const CombCurve& c) {
    CombCurve red = reduce_graded(GradedCurve{c, 0}).c;
    Realization real = realize(red.surf, {&red}, {0});
    return real.ranks[0];
}

std::string render_svg(const Surface& s, const std::vector<GradedCurve>& curves) {
    std::vector<const CombCurve*> cs;
    std::vector<CombCurve> reduced;
    std::vector<int64_t> gs;
    for (const auto& g : curves) {
        GradedCurve r = reduce_graded(g);
        reduced.push_back(r.c);
        gs.push_back(r.grading);
    }
    for (const auto& r : reduced) cs.push_back(&r);
    Realization real = realize(s, cs, gs);
    std::ostringstream os;
    auto px = [](const Rat& v) { return 60.0 * v.convert_to<double>() + 120.0; };
    auto py = [](const Rat& v) { return -24.0 * v.convert_to<double>() + 120.0; };
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='720' height='240'>\n";
    for (int i = -2; i <= 3 * s.m(); ++i)
        os << "<circle cx='" << px(Rat(i)) << "' cy='" << py(Rat(0)) << "' r='2' fill='black'/>\n";
    const char* colors[] = {"crimson", "steelblue", "seagreen", "darkorange"};
    for (size_t ci = 0; ci < real.pts.size(); ++ci) {
        os << "<path fill='none' stroke='" << colors[ci % 4] << "' d='";
        for (size_t i = 0; i < real.pts[ci].size(); ++i)
            os << (i == 0 ? "M" : "L") << px(real.pts[ci][i].x) << " " << py(real.pts[ci][i].y);
        os << "'/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace twistcat
