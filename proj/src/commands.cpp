#include "lieembed/commands.hpp"

#include "lieembed/errors.hpp"
#include "lieembed/linalg.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

namespace lieembed::cmd {

namespace {

std::vector<Element> elements(const LieAlgebra& L, const std::string& spec) {
    if (spec.find_first_not_of(" \t") == std::string::npos) return {};
    return L.parse_elements(spec);
}

json sub_json(const LieAlgebra& L, const Subspace& S) {
    return json{{"dim", S.dim()}, {"text", io::text(L, S)}, {"basis", io::to_json(S)}};
}

json ksub_text(const LieAlgebra& L, const KSubspace& S) {
    json a = json::array();
    for (const auto& v : S.basis()) a.push_back(L.format(v));
    return a;
}

json cartan_json(const LieAlgebra& L, const CartanData& c) {
    return json{{"cartan", sub_json(L, c.cartan)}, {"real_part", sub_json(L, c.real_part)},
                {"compact_part", sub_json(L, c.compact_part)}};
}

json trace_json(const LieAlgebra& L, const EmbeddingTrace& t) {
    json j = io::to_json(t, L);
    j["replay_ok"] = replay(L, t);
    return j;
}

json root_texts(const std::vector<Root>& rs) {
    json a = json::array();
    for (const auto& r : rs) a.push_back(root_str(r));
    return a;
}

CartanData cartan_of(const LieAlgebra& L, const Subspace& C) {
    auto s = torus_split(L, C);
    return {C, s.real_part, s.compact_part};
}

}  // namespace

Input load_input(const std::string& ref, const std::string& base_dir) {
    if (is_catalog_name(ref)) {
        GeneratorCatalog c = catalog(ref);
        return {ref, structure_constants(c), c};
    }
    std::filesystem::path p(ref);
    if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
    json j = io::read_json_file(p.string());
    if (j.contains("fields")) {
        GeneratorCatalog c = io::catalog_from_json(j);
        if (c.name.empty()) c.name = p.stem().string();
        return {c.name, structure_constants(c), c};
    }
    return {j.contains("name") ? j["name"].get<std::string>() : p.stem().string(), io::algebra_from_json(j), std::nullopt};
}

json analyze(const Input& in) {
    const LieAlgebra& L = in.algebra;
    QMatrix K = killing_form(L);
    Rational det = determinant(K);
    auto levi = levi_decomposition(L, whole(L));
    return json{{"algebra", in.name},
                {"dim", L.dim()},
                {"basis", L.names()},
                {"killing", {{"determinant", det.str()}, {"signature", io::to_json(congruence_signature(K))}}},
                {"semisimple", !det.is_zero()},
                {"solvable", is_solvable(L, whole(L))},
                {"nilpotent", is_nilpotent_algebra(L, whole(L))},
                {"center", sub_json(L, center(L, whole(L)))},
                {"derived", sub_json(L, derived_algebra(L, whole(L)))},
                {"radical", sub_json(L, levi.radical)},
                {"levi", sub_json(L, levi.levi)}};
}

json embed(const Input& in, const EmbedArgs& a) {
    const LieAlgebra& L = in.algebra;
    Subspace U = span(L, elements(L, a.subspace));
    json out{{"algebra", in.name}, {"mode", a.mode}, {"input", sub_json(L, U)}};
    if (a.mode == "torus") {
        auto r = embed_real_torus(L, U, a.search);
        out["max_real_torus"] = sub_json(L, r.max_real_torus);
        out["cartan"] = cartan_json(L, r.cartan);
        out["trace"] = trace_json(L, r.trace);
    } else if (a.mode == "compact-torus") {
        auto r = embed_compact_torus(L, U, a.search);
        out["cartan"] = cartan_json(L, r.cartan);
        out["trace"] = trace_json(L, r.trace);
    } else if (a.mode == "abelian-nilpotent") {
        auto r = embed_abelian_nilpotent(L, U, a.search);
        out["max_abelian_nilpotent"] = sub_json(L, r.max_abelian_nilpotent);
        out["trace"] = trace_json(L, r.trace);
    } else if (a.mode == "nilpotent") {
        auto r = embed_nilpotent(L, U, a.search);
        out["max_nilpotent"] = sub_json(L, r.max_nilpotent);
        out["normalizer"] = sub_json(L, normalizer(L, r.max_nilpotent));
        out["torus"] = sub_json(L, r.torus);
        out["torus_A"] = sub_json(L, r.torus_A);
        out["split_cartan"] = cartan_json(L, r.split_cartan);
        out["trace"] = trace_json(L, r.trace);
        out["torus_trace"] = trace_json(L, r.torus_trace);
    } else if (a.mode == "maximal-compact") {
        CartanData c = cartan_of(L, U);
        Subspace K;
        json gens = json::array();
        if (a.route == "split") {
            std::optional<std::vector<Root>> pos;
            if (!a.positive_on.empty())
                pos = decompose(L, U.basis(), span(L, elements(L, a.positive_on))).root_list();
            for (const auto& g : split_circles(L, c, pos)) gens.push_back(L.format(g));
            K = maximal_compact_split(L, c, pos);
        } else if (a.route == "cartan") {
            K = maximal_compact_from_cartan(L, c);
            json parts = json::array();
            for (const auto& k : compact_root_algebras(L, root_space_decomposition(L, U.basis())))
                parts.push_back(io::text(L, k));
            out["compact_root_algebras"] = parts;
        } else {
            throw ParseError("unknown route '" + a.route + "' (split, cartan)");
        }
        out["route"] = a.route;
        if (!gens.empty()) out["generators"] = gens;
        out["maximal_compact"] = sub_json(L, K);
        out["ambient_signature"] = io::to_json(ambient_killing_signature(L, K));
    } else {
        throw ParseError("unknown mode '" + a.mode + "' (torus, compact-torus, abelian-nilpotent, nilpotent, maximal-compact)");
    }
    return out;
}

namespace {

struct RootRun {
    RootSpaceDecomposition d;
    std::vector<Root> positives;
};

RootRun root_run(const Input& in, const RootsArgs& a) {
    const LieAlgebra& L = in.algebra;
    auto C = elements(L, a.cartan);
    Subspace amb = a.ambient.empty() ? whole(L) : span(L, elements(L, a.ambient));
    RootRun r{decompose(L, C, amb), {}};
    if (a.positivity == "lex") r.positives = positive_roots(r.d);
    else if (a.positivity == "all") r.positives = r.d.root_list();
    else throw ParseError("unknown positivity '" + a.positivity + "' (lex, all)");
    return r;
}

}  // namespace

json roots(const Input& in, const RootsArgs& a) {
    const LieAlgebra& L = in.algebra;
    RootRun r = root_run(in, a);
    json list = json::array();
    for (const auto& rs : r.d.roots)
        list.push_back(json{{"root", io::to_json(rs.root)}, {"text", root_str(rs.root)}, {"dim", rs.space.dim()},
                            {"space", ksub_text(L, rs.space)}});
    json cart = json::array();
    for (const auto& h : r.d.cartan) cart.push_back(L.format(h));
    json out{{"algebra", in.name}, {"cartan", cart}, {"roots", list}, {"zero_space", ksub_text(L, r.d.zero_space)},
             {"positive", root_texts(r.positives)}};
    if (!r.positives.empty()) {
        auto simples = simple_roots(r.positives);
        out["simple"] = root_texts(simples);
        json coords = json::object();
        for (const auto& p : r.positives) {
            auto c = simple_coordinates(p, simples);
            coords[root_str(p)] = c ? json(*c) : json(nullptr);
        }
        out["simple_coordinates"] = coords;
        out["dynkin"] = io::to_json(dynkin_type(simples, r.positives));
    }
    json conj = json::array();
    for (const auto& [x, y] : conjugation_pairing(r.d)) conj.push_back(json::array({root_str(x), root_str(y)}));
    out["conjugation"] = conj;
    return out;
}

json dynkin(const Input& in, const RootsArgs& a) {
    RootRun r = root_run(in, a);
    auto simples = simple_roots(r.positives);
    json d = io::to_json(dynkin_type(simples, r.positives));
    d["simple"] = root_texts(simples);
    return d;
}

json vf_brackets(const Input& in, const std::string& pair) {
    if (!in.catalog) throw ParseError("vf-brackets needs a vector-field catalog");
    const auto& C = *in.catalog;
    if (pair.empty()) return json{{"catalog", C.name}, {"vars", C.vars}, {"algebra", io::to_json(in.algebra)}};
    auto els = elements(in.algebra, pair);
    if (els.size() != 2) throw ParseError("--pair needs exactly two elements");
    auto a = vf_combine(C.fields, els[0], in.algebra.format(els[0]));
    auto b = vf_combine(C.fields, els[1], in.algebra.format(els[1]));
    auto br = vf_bracket(a, b);
    return json{{"catalog", C.name},
                {"pair", json::array({a.name, b.name})},
                {"field", br.str()},
                {"element", in.algebra.format(in.algebra.bracket(els[0], els[1]))}};
}

json vf_invariants(const Input& in, const std::string& fields) {
    if (!in.catalog) throw ParseError("vf-invariants needs a vector-field catalog");
    const auto& C = *in.catalog;
    std::vector<PolyVectorField> fs;
    json names = json::array();
    for (const auto& e : elements(in.algebra, fields)) {
        fs.push_back(vf_combine(C.fields, e, in.algebra.format(e)));
        names.push_back(fs.back().name);
    }
    std::size_t count = invariant_count(fs, C.vars.size());
    return json{{"catalog", C.name},
                {"fields", names},
                {"n_vars", C.vars.size()},
                {"rank", C.vars.size() - count},
                {"invariants", count}};
}

json run(const std::string& command, const Input& in, const json& args, const SearchOptions& search) {
    auto str = [&](const char* k, const std::string& dflt = {}) {
        return args.contains(k) ? args.at(k).get<std::string>() : dflt;
    };
    if (command == "analyze") return analyze(in);
    if (command == "embed") {
        EmbedArgs a{str("mode"), str("subspace"), str("route", "split"), str("positive_on"), search};
        return embed(in, a);
    }
    if (command == "roots") return roots(in, {str("cartan"), str("ambient"), str("positivity", "lex")});
    if (command == "dynkin") return dynkin(in, {str("cartan"), str("ambient"), str("positivity", "lex")});
    if (command == "vf-brackets") return vf_brackets(in, str("pair"));
    if (command == "vf-invariants") return vf_invariants(in, str("fields"));
    throw ParseError("unknown command '" + command + "'");
}

namespace {

const json* lookup(const json& j, const std::string& path) {
    const json* cur = &j;
    std::stringstream ss(path);
    std::string part;
    while (std::getline(ss, part, '.')) {
        if (cur->is_object()) {
            auto it = cur->find(part);
            if (it == cur->end()) return nullptr;
            cur = &*it;
        } else if (cur->is_array() && !part.empty() && std::all_of(part.begin(), part.end(), ::isdigit)) {
            std::size_t i = std::stoul(part);
            if (i >= cur->size()) return nullptr;
            cur = &(*cur)[i];
        } else {
            return nullptr;
        }
    }
    return cur;
}

}  // namespace

VerifyResult verify(const json& corpus, const std::string& base_dir, const SearchOptions& search) {
    std::vector<json> cases;
    if (corpus.contains("cases"))
        for (const auto& c : corpus.at("cases")) cases.push_back(c);
    std::sort(cases.begin(), cases.end(),
              [](const json& a, const json& b) { return a.at("name").get<std::string>() < b.at("name").get<std::string>(); });
    VerifyResult res;
    json results = json::array();
    std::size_t passed = 0;
    for (const auto& c : cases) {
        json r{{"name", c.at("name")}};
        if (c.contains("provenance")) r["provenance"] = c["provenance"];
        json diffs = json::array();
        try {
            Input in = load_input(c.at("input").get<std::string>(), base_dir);
            json out = run(c.at("command").get<std::string>(), in, c.value("args", json::object()), search);
            if (c.contains("expect_error")) {
                diffs.push_back(json{{"path", "error"}, {"expected", c["expect_error"]}, {"actual", nullptr}});
            }
            const json expect = c.value("expect", json::object());
            for (const auto& [path, want] : expect.items()) {
                const json* got = lookup(out, path);
                if (!got || *got != want)
                    diffs.push_back(json{{"path", path}, {"expected", want}, {"actual", got ? *got : json(nullptr)}});
            }
        } catch (const std::exception& e) {
            std::string kind = error_kind(e);
            if (!c.contains("expect_error") || c["expect_error"].get<std::string>() != kind)
                diffs.push_back(json{{"path", "error"},
                                     {"expected", c.contains("expect_error") ? c["expect_error"] : json(nullptr)},
                                     {"actual", kind + ": " + e.what()}});
        }
        r["status"] = diffs.empty() ? "pass" : "fail";
        if (!diffs.empty()) r["diffs"] = diffs;
        else ++passed;
        results.push_back(r);
    }
    res.ok = passed == cases.size();
    res.report = json{{"cases", cases.size()}, {"passed", passed}, {"failed", cases.size() - passed}, {"results", results}};
    return res;
}

std::string error_kind(const std::exception& e) {
#define LIEEMBED_KIND(Name) \
    if (dynamic_cast<const Name*>(&e)) return #Name;
    LIEEMBED_KIND(ExtensionDegreeTooHigh)
    LIEEMBED_KIND(ParseError)
    LIEEMBED_KIND(InvariantViolation)
    LIEEMBED_KIND(NotASubalgebra)
    LIEEMBED_KIND(CenterObstruction)
    LIEEMBED_KIND(NotATorus)
    LIEEMBED_KIND(UnrecognizedBondPattern)
    LIEEMBED_KIND(UnrecognizedDiagram)
    LIEEMBED_KIND(DegenerateRoot)
    LIEEMBED_KIND(NoRealSemisimpleFound)
    LIEEMBED_KIND(NoCompactFound)
    LIEEMBED_KIND(NotAbelianNilpotent)
    LIEEMBED_KIND(NotNilpotent)
    LIEEMBED_KIND(NotSplit)
    LIEEMBED_KIND(VariableMismatch)
    LIEEMBED_KIND(NotClosed)
#undef LIEEMBED_KIND
    if (dynamic_cast<const json::exception*>(&e)) return "ParseError";
    return "Error";
}

int exit_code(const std::exception& e) {
    std::string k = error_kind(e);
    if (k == "ParseError" || k == "VariableMismatch") return 2;
    if (k == "InvariantViolation" || k == "NotClosed" || k == "Error") return 3;
    if (k == "ExtensionDegreeTooHigh") return 4;
    return 5;
}

namespace {

bool all_strings(const json& a) {
    return std::all_of(a.begin(), a.end(), [](const json& x) { return x.is_string(); });
}

bool is_scalar_obj(const json& j) { return j.is_object() && j.size() == 3 && j.contains("a") && j.contains("d"); }

void render(std::ostringstream& os, const json& j, int indent) {
    std::string pad(indent, ' ');
    for (const auto& [k, v] : j.items()) {
        if (k == "basis" || k == "root" || k == "space_coords" || (k == "adjoined" && v.is_array())) continue;
        if (v.is_object() && v.contains("text") && v.contains("dim")) {
            os << pad << k << ": <";
            bool first = true;
            for (const auto& t : v["text"]) os << (first ? "" : ", ") << t.get<std::string>(), first = false;
            os << ">\n";
        } else if (v.is_object() && !is_scalar_obj(v)) {
            os << pad << k << ":\n";
            render(os, v, indent + 2);
        } else if (v.is_array() && all_strings(v)) {
            os << pad << k << ": <";
            for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get<std::string>();
            os << ">\n";
        } else if (v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_array(); })) {
            continue;
        } else if (v.is_array()) {
            os << pad << k << ":\n";
            for (const auto& x : v) {
                if (x.is_object()) {
                    os << pad << "  -\n";
                    render(os, x, indent + 4);
                } else {
                    os << pad << "  - " << x.dump() << "\n";
                }
            }
        } else if (v.is_string()) {
            os << pad << k << ": " << v.get<std::string>() << "\n";
        } else {
            os << pad << k << ": " << v.dump() << "\n";
        }
    }
}

}  // namespace

std::string render_text(const json& j) {
    std::ostringstream os;
    render(os, j, 0);
    return os.str();
}

}  // namespace lieembed::cmd
