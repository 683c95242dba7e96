#include "twistcat/jsonio.hpp"

#include <sstream>

namespace twistcat {

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.field().scalar_to_string(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_json(const Field& f, const json& j, size_t rows, size_t cols) {
    Matrix m(f, rows, cols);
    if (j.size() != rows) throw std::invalid_argument("matrix row count mismatch");
    for (size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols) throw std::invalid_argument("matrix column count mismatch");
        for (size_t c = 0; c < cols; ++c) {
            const json& cell = j[i][c];
            if (cell.is_number_integer())
                m.at(i, c) = f.from_int(cell.get<int64_t>());
            else
                m.at(i, c) = f.scalar_parse(cell.get<std::string>());
        }
    }
    return m;
}

json module_to_json(const NilpotentModule& m) {
    json j;
    j["n"] = m.n();
    j["field"] = m.field().to_string();
    j["dims"] = m.dims();
    json a = json::array(), b = json::array();
    for (int i = 0; i < m.m(); ++i) {
        a.push_back(matrix_to_json(m.a(i)));
        b.push_back(matrix_to_json(m.b(i)));
    }
    j["a"] = a;
    j["b"] = b;
    return j;
}

NilpotentModule module_from_json(const json& j) {
    int n = j.at("n").get<int>();
    Field f = Field::parse(j.at("field").get<std::string>());
    std::vector<int> dims = j.at("dims").get<std::vector<int>>();
    NilpotentModule m(n, f, dims);
    for (int i = 0; i < m.m(); ++i) {
        int jv = (i + 1) % m.m();
        m.a(i) = matrix_from_json(f, j.at("a")[i], dims[jv], dims[i]);
        m.b(i) = matrix_from_json(f, j.at("b")[i], dims[i], dims[jv]);
    }
    m.validate();
    return m;
}

json complex_to_json(const TwistedComplex& x) {
    json j;
    j["n"] = x.n();
    j["field"] = x.field().to_string();
    json terms = json::array();
    for (const auto& t : x.terms()) terms.push_back({{"vertex", t.vertex}, {"shift", t.shift}});
    j["terms"] = terms;
    json diff = json::array();
    ZigzagCategory zz = x.cat();
    for (const auto& [st, c] : x.diff()) {
        auto b = zz.basis_in_degree(x.terms()[st.first].vertex, x.terms()[st.second].vertex,
                                    x.entry_basis_degree(st.first, st.second));
        json entry;
        entry["from"] = st.first;
        entry["to"] = st.second;
        entry["coeffs"] = json::array({{{"kind", std::string(1, hom_kind_char(b->kind))},
                                        {"index", b->index},
                                        {"scalar", x.field().scalar_to_string(c)}}});
        diff.push_back(entry);
    }
    j["diff"] = diff;
    return j;
}

TwistedComplex complex_from_json(const json& j) {
    int n = j.at("n").get<int>();
    Field f = Field::parse(j.at("field").get<std::string>());
    TwistedComplex x(n, f);
    for (const auto& t : j.at("terms")) x.add_term(t.at("vertex").get<int>(), t.at("shift").get<int>());
    for (const auto& e : j.at("diff")) {
        size_t s = e.at("from").get<size_t>();
        size_t t = e.at("to").get<size_t>();
        Scalar total = f.zero();
        for (const auto& co : e.at("coeffs")) {
            HomKind kind = hom_kind_from_char(co.at("kind").get<std::string>().at(0));
            int idx = co.at("index").get<int>();
            int p = x.entry_basis_degree(s, t);
            auto want = x.cat().basis_in_degree(x.terms()[s].vertex, x.terms()[t].vertex, p);
            if (!want || want->kind != kind || want->index != idx)
                throw std::invalid_argument("differential coefficient has the wrong basis element");
            const json& sc = co.at("scalar");
            Scalar v = sc.is_number_integer() ? f.from_int(sc.get<int64_t>())
                                              : f.scalar_parse(sc.get<std::string>());
            total = f.add(total, v);
        }
        x.set_diff(s, t, total);
    }
    x.validate();
    return x;
}

json curve_to_json(const GradedCurve& g) {
    GradedCurve rg = reduce_graded(g);
    CombCurve c = rg.c.canonical_translate();
    json j;
    j["surface"] = c.surf.cylinder ? "cylinder" : "disk";
    j["n"] = c.surf.n;
    j["endpoints"] = json::array({c.start, c.end});
    j["sides"] = json::array({c.start_side == SIDE_R ? "R" : "L", c.end_side == SIDE_R ? "R" : "L"});
    std::vector<int> ranks = self_ranks(c);
    json crossings = json::array();
    int64_t m = c.surf.m();
    for (size_t o = 0; o < c.word.size(); ++o) {
        int64_t cut = c.word[o].cut;
        int64_t res = ((cut % m) + m) % m;
        json cr;
        cr["cut"] = res;
        cr["lift"] = (cut - res) / m;
        cr["side"] = c.word[o].side == RAY_U ? "U" : "D";
        cr["rank"] = ranks[o];
        crossings.push_back(cr);
    }
    j["crossings"] = crossings;
    j["grading"] = rg.grading;
    return j;
}

GradedCurve curve_from_json(const json& j) {
    GradedCurve g;
    g.c.surf.cylinder = j.at("surface").get<std::string>() == "cylinder";
    g.c.surf.n = j.at("n").get<int>();
    g.c.start = j.at("endpoints")[0].get<int64_t>();
    g.c.end = j.at("endpoints")[1].get<int64_t>();
    if (j.contains("sides")) {
        g.c.start_side = j.at("sides")[0].get<std::string>() == "R" ? SIDE_R : SIDE_L;
        g.c.end_side = j.at("sides")[1].get<std::string>() == "R" ? SIDE_R : SIDE_L;
    }
    int64_t m = g.c.surf.m();
    for (const auto& cr : j.at("crossings")) {
        int64_t cut = cr.at("cut").get<int64_t>();
        if (cr.contains("lift")) cut += m * cr.at("lift").get<int64_t>();
        g.c.word.push_back({cut, cr.at("side").get<std::string>() == "U" ? RAY_U : RAY_D});
    }
    g.grading = j.value("grading", 0);
    g.c.validate();
    return g;
}

json charge_to_json(const CentralCharge& z) {
    json coords = json::array();
    for (const auto& c : z.z) {
        auto rat = [](const Rat& q) {
            std::string s = numerator(q).str();
            if (denominator(q) != 1) s += "/" + denominator(q).str();
            return s;
        };
        coords.push_back(json::array({rat(c.re), rat(c.im)}));
    }
    return coords;
}

CentralCharge charge_from_json(const json& j) {
    CentralCharge z;
    Field q = Field::rationals();
    for (const auto& c : j) {
        RatComplex v;
        v.re = q.scalar_parse(c[0].get<std::string>()).q;
        v.im = q.scalar_parse(c[1].get<std::string>()).q;
        z.z.push_back(v);
    }
    return z;
}

CentralCharge charge_from_string(const std::string& s, int n) {
    CentralCharge z;
    Field q = Field::rationals();
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("charge entry needs re:im");
        RatComplex v;
        v.re = q.scalar_parse(tok.substr(0, colon)).q;
        v.im = q.scalar_parse(tok.substr(colon + 1)).q;
        z.z.push_back(v);
    }
    if (z.n() != n) throw std::invalid_argument("charge has the wrong number of coordinates");
    return z;
}

json lattice_to_json(const LatticeVector& v) {
    json out = json::array();
    for (int64_t c : v.c) out.push_back(c);
    return out;
}

}  // namespace twistcat
