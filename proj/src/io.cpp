#include "lieembed/io.hpp"

#include "lieembed/errors.hpp"

#include <fstream>
#include <sstream>

namespace lieembed::io {

json to_json(const Rational& r) { return r.str(); }

json to_json(const Scalar& s) {
    return json{{"a", s.a().str()}, {"b", s.b().str()}, {"d", s.d()}};
}

json to_json(const QVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

json to_json(const KVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

json to_json(const Subspace& s) {
    json a = json::array();
    for (const auto& v : s.basis()) a.push_back(to_json(v));
    return a;
}

json to_json(const KSubspace& s) {
    json a = json::array();
    for (const auto& v : s.basis()) a.push_back(to_json(v));
    return a;
}

json to_json(const LieAlgebra& L) {
    json br = json::array();
    for (const auto& e : L.entries()) {
        json c = json::object();
        for (const auto& [k, v] : e.terms) c[std::to_string(k)] = v.str();
        br.push_back(json{{"i", e.i}, {"j", e.j}, {"c", c}});
    }
    return json{{"dim", L.dim()}, {"basis", L.names()}, {"brackets", br}};
}

json to_json(const GeneratorCatalog& c) {
    json fields = json::array();
    for (const auto& f : c.fields) {
        json comps = json::array();
        for (const auto& p : f.components) {
            json terms = json::array();
            for (const auto& [m, v] : p.terms()) terms.push_back(json::array({m, v.str()}));
            comps.push_back(terms);
        }
        fields.push_back(json{{"name", f.name}, {"components", comps}});
    }
    return json{{"name", c.name}, {"vars", c.vars}, {"fields", fields}};
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

}  // namespace

json to_json(const Signature& s) {
    return json{{"n_pos", s.n_pos}, {"n_neg", s.n_neg}, {"n_zero", s.n_zero}};
}

json to_json(const RootSpaceDecomposition& d) {
    json cartan = json::array();
    for (const auto& h : d.cartan) cartan.push_back(to_json(h));
    json roots = json::array();
    for (const auto& rs : d.roots)
        roots.push_back(json{{"root", to_json(rs.root)}, {"dim", rs.space.dim()}, {"space", to_json(rs.space)}});
    return json{{"cartan", cartan}, {"roots", roots}, {"zero_space", to_json(d.zero_space)}};
}

json to_json(const DynkinDiagram& d) {
    json nodes = json::array();
    for (const auto& n : d.nodes) nodes.push_back(to_json(n));
    json bonds = json::array();
    for (const auto& b : d.bonds) bonds.push_back(json::array({b.i, b.j, b.multiplicity, b.from, b.to}));
    return json{{"type", d.type}, {"nodes", nodes}, {"bonds", bonds}};
}

json to_json(const CartanData& c) {
    return json{{"cartan", to_json(c.cartan)}, {"real_part", to_json(c.real_part)}, {"compact_part", to_json(c.compact_part)}};
}

json text(const LieAlgebra& L, const Subspace& s) {
    json a = json::array();
    for (const auto& v : s.basis()) a.push_back(L.format(v));
    return a;
}

json to_json(const EmbeddingTrace& t, const LieAlgebra& L) {
    json steps = json::array();
    for (const auto& s : t.steps) {
        json adj = json::array(), adj_text = json::array();
        for (const auto& v : s.adjoined) {
            adj.push_back(to_json(v));
            adj_text.push_back(L.format(v));
        }
        steps.push_back(json{{"label", s.label}, {"adjoined", adj}, {"adjoined_text", adj_text}, {"result", to_json(s.result)}});
    }
    return json{{"algorithm", t.algorithm}, {"input", to_json(t.input)}, {"steps", steps}, {"result", to_json(t.result)}};
}

json to_json(const Sl2Triple& t) { return json{{"X", to_json(t.X)}, {"Y", to_json(t.Y)}, {"H", to_json(t.H)}}; }

EmbeddingTrace trace_from_json(const json& j, std::size_t ambient) {
    try {
        EmbeddingTrace t;
        t.algorithm = j.at("algorithm").get<std::string>();
        t.input = subspace_from_json(j.at("input"), ambient);
        for (const auto& s : j.at("steps")) {
            TraceStep st;
            st.label = s.at("label").get<std::string>();
            for (const auto& v : s.at("adjoined")) st.adjoined.push_back(qvec_from_json(v));
            st.result = subspace_from_json(s.at("result"), ambient);
            t.steps.push_back(std::move(st));
        }
        t.result = subspace_from_json(j.at("result"), ambient);
        return t;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed trace: ") + e.what());
    }
}

Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    bad("expected a rational string, got " + j.dump());
}

Scalar scalar_from_json(const json& j) {
    if (j.is_object()) {
        if (!j.contains("a")) bad("scalar object without 'a'");
        Rational a = rational_from_json(j.at("a"));
        Rational b = j.contains("b") ? rational_from_json(j.at("b")) : Rational(0);
        long d = j.contains("d") ? j.at("d").get<long>() : 0;
        if (!b.is_zero() && d == 0) bad("scalar with b != 0 needs d != 0");
        return b.is_zero() ? Scalar(a) : Scalar(a, b, d);
    }
    return Scalar(rational_from_json(j));
}

QVec qvec_from_json(const json& j) {
    if (!j.is_array()) bad("expected a vector");
    QVec v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

KVec kvec_from_json(const json& j) {
    if (!j.is_array()) bad("expected a vector");
    KVec v;
    for (const auto& x : j) v.push_back(scalar_from_json(x));
    return v;
}

Subspace subspace_from_json(const json& j, std::size_t ambient) {
    if (!j.is_array()) bad("expected a list of vectors");
    std::vector<QVec> rows;
    for (const auto& r : j) {
        rows.push_back(qvec_from_json(r));
        if (rows.back().size() != ambient) bad("vector length does not match algebra dimension");
    }
    return Subspace::span(ambient, rows);
}

LieAlgebra algebra_from_json(const json& j, bool validate) {
    try {
        if (!j.is_object() || !j.contains("dim")) bad("algebra JSON needs 'dim'");
        const std::size_t n = j.at("dim").get<std::size_t>();
        std::vector<std::string> names;
        if (j.contains("basis")) {
            names = j.at("basis").get<std::vector<std::string>>();
            if (names.size() != n) bad("basis length does not match dim");
        } else {
            for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
        }
        std::vector<BracketEntry> entries;
        if (j.contains("brackets")) {
            for (const auto& b : j.at("brackets")) {
                BracketEntry e{b.at("i").get<std::size_t>(), b.at("j").get<std::size_t>(), {}};
                for (const auto& [k, v] : b.at("c").items()) {
                    std::size_t idx = 0;
                    try {
                        idx = std::stoul(k);
                    } catch (const std::exception&) {
                        bad("bracket key '" + k + "' is not an index");
                    }
                    e.terms.emplace_back(idx, rational_from_json(v));
                }
                entries.push_back(std::move(e));
            }
        }
        return LieAlgebra(names, entries, validate);
    } catch (const json::exception& e) {
        bad(std::string("malformed algebra JSON: ") + e.what());
    }
}

GeneratorCatalog catalog_from_json(const json& j) {
    try {
        GeneratorCatalog c;
        c.name = j.value("name", std::string("input"));
        c.vars = j.at("vars").get<std::vector<std::string>>();
        const std::size_t n = c.vars.size();
        for (const auto& f : j.at("fields")) {
            PolyVectorField pf{f.value("name", "F" + std::to_string(c.fields.size() + 1)), c.vars, {}};
            const json& comps = f.at("components");
            if (comps.size() != n) bad("field '" + pf.name + "' needs one component per variable");
            for (const auto& poly : comps) {
                if (poly.is_string()) {
                    pf.components.push_back(parse_polynomial(poly.get<std::string>(), c.vars));
                    continue;
                }
                Polynomial p(n);
                for (const auto& term : poly) {
                    auto exps = term.at(0).get<std::vector<int>>();
                    if (exps.size() != n) bad("exponent vector length mismatch in field '" + pf.name + "'");
                    p.add_term(exps, rational_from_json(term.at(1)));
                }
                pf.components.push_back(std::move(p));
            }
            c.fields.push_back(std::move(pf));
        }
        return c;
    } catch (const json::exception& e) {
        bad(std::string("malformed vector-field JSON: ") + e.what());
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        bad("'" + path + "': " + e.what());
    }
}

std::string dump(const json& j) { return j.dump(2); }

}  // namespace lieembed::io
