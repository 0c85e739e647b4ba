#include "lieembed/errors.hpp"
#include "lieembed/vecfield.hpp"

#include <regex>

namespace lieembed {

namespace {

PolyVectorField make_field(const std::string& name, const std::vector<std::string>& vars,
                           const std::vector<std::string>& comps) {
    PolyVectorField f{name, vars, {}};
    for (const auto& c : comps) f.components.push_back(parse_polynomial(c, vars));
    return f;
}

const std::vector<std::string> kWaveVars{"t", "x", "y", "z", "u"};

std::vector<PolyVectorField> wave_fields() {
    const auto& v = kWaveVars;
    return {
        make_field("e1", v, {"y*t", "x*y", "1/2*(y^2+t^2-x^2-z^2)", "y*z", "-u*y"}),
        make_field("e2", v, {"y", "0", "t", "0", "0"}),
        make_field("e3", v, {"x*t", "1/2*(x^2+t^2-y^2-z^2)", "x*y", "x*z", "-u*x"}),
        make_field("e4", v, {"x", "t", "0", "0", "0"}),
        make_field("e5", v, {"z*t", "z*x", "y*z", "1/2*(z^2+t^2-y^2-x^2)", "-u*z"}),
        make_field("e6", v, {"z", "0", "0", "t", "0"}),
        make_field("e7", v, {"t", "x", "y", "z", "0"}),
        make_field("e8", v, {"1", "0", "0", "0", "0"}),
        make_field("e9", v, {"t^2+x^2+y^2+z^2", "2*t*x", "2*t*y", "2*t*z", "-2*u*t"}),
        make_field("e10", v, {"0", "0", "1", "0", "0"}),
        make_field("e11", v, {"0", "1", "0", "0", "0"}),
        make_field("e12", v, {"0", "0", "0", "1", "0"}),
        make_field("e13", v, {"0", "0", "z", "-y", "0"}),
        make_field("e14", v, {"0", "z", "0", "-x", "0"}),
        make_field("e15", v, {"0", "-y", "x", "0", "0"}),
        make_field("e16", v, {"0", "0", "0", "0", "u"}),
    };
}

// Generators (xi, eta, zeta) on (x, u, v) for v' = (u'')^2 with u1 = u', u2 = u'';
// prolonged to (x, u, v, u1, u2) so that the ordinary bracket closes.
const std::vector<std::string> kG2Jet{"x", "u", "v", "u1", "u2", "u3"};
const std::vector<std::string> kG2Vars{"x", "u", "v", "u1", "u2"};

struct PointField {
    std::string name, xi, eta, zeta;
};

const std::vector<PointField> kG2Point{
    {"X1", "2/3*u1^2-u*u2", "1/2*u*v+4/9*u1^3-u*u1*u2", "1/2*v^2-1/3*u*u2^3"},
    {"X2", "4/3*x^2*u1-2*x*u-1/3*x^3*u2", "1/6*x^3*v+2/3*x^2*u1^2-2*u^2-1/3*x^3*u1*u2",
     "2*x*u1*v-2*u*v-1/9*x^3*u2^3-8/9*u1^3"},
    {"X3", "8/3*x*u1-2*u-x^2*u2", "1/2*x^2*v+4/3*x*u1^2-x^2*u1*u2", "2*v*u1-1/3*x^2*u2^3"},
    {"X4", "8/3*u1-2*x*u2", "x*v+4/3*u1^2-2*x*u1*u2", "-2/3*x*u2^3"},
    {"X5", "-2*u2", "v-2*u1*u2", "-2/3*u2^3"},
    {"X6", "0", "1/2*u", "v"},
    {"X7", "-1/2*x^2", "-3/2*x*u", "-2*u1^2"},
    {"X8", "-x", "-3/2*u", "0"},
    {"X9", "1", "0", "0"},
    {"X10", "0", "1/6*x^3", "2*(x*u1-u)"},
    {"X11", "0", "1/2*x^2", "2*u1"},
    {"X12", "0", "x", "0"},
    {"X13", "0", "1", "0"},
    {"X14", "0", "0", "1"},
};

Polynomial total_derivative(const Polynomial& F) {
    const std::size_t n = kG2Jet.size();
    auto var = [&](std::size_t i) { return Polynomial::variable(n, i); };
    // D = d/dx + u1 d/du + u2^2 d/dv + u2 d/du1 + u3 d/du2
    return F.derivative(0) + var(3) * F.derivative(1) + var(4) * var(4) * F.derivative(2) +
           var(4) * F.derivative(3) + var(5) * F.derivative(4);
}

Polynomial drop_u3(const Polynomial& p) {
    if (p.degree_in(5) > 0) throw InvariantViolation("prolonged G2 field depends on u'''");
    Polynomial r(kG2Vars.size());
    for (const auto& [m, c] : p.terms()) r.add_term(Monomial(m.begin(), m.begin() + 5), c);
    return r;
}

std::vector<PolyVectorField> g2_fields() {
    std::vector<PolyVectorField> out;
    const auto& J = kG2Jet;
    for (const auto& pf : kG2Point) {
        Polynomial xi = parse_polynomial(pf.xi, J);
        Polynomial eta = parse_polynomial(pf.eta, J);
        Polynomial zeta = parse_polynomial(pf.zeta, J);
        Polynomial Dxi = total_derivative(xi);
        Polynomial u1 = Polynomial::variable(J.size(), 3), u2 = Polynomial::variable(J.size(), 4);
        Polynomial eta1 = total_derivative(eta) - u1 * Dxi;
        Polynomial eta2 = total_derivative(eta1) - u2 * Dxi;
        out.push_back(PolyVectorField{
            pf.name, kG2Vars, {drop_u3(xi), drop_u3(eta), drop_u3(zeta), drop_u3(eta1), drop_u3(eta2)}});
    }
    return out;
}

}  // namespace

std::vector<QMatrix> so_pq_matrices(int p, int q) {
    if (p < 0 || q < 0 || p + q < 2) throw ParseError("so(p,q) needs p, q >= 0 and p + q >= 2");
    const std::size_t n = static_cast<std::size_t>(p + q);
    std::vector<QMatrix> out;
    auto sig = [&](std::size_t i) { return i < static_cast<std::size_t>(p) ? 1 : -1; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            QMatrix m(n, n);
            m(i, j) = Rational(1);
            m(j, i) = Rational(sig(i) * sig(j) == 1 ? -1 : 1);
            out.push_back(std::move(m));
        }
    return out;
}

GeneratorCatalog so_pq_generators(int p, int q) {
    const std::size_t n = static_cast<std::size_t>(p + q);
    GeneratorCatalog cat;
    cat.name = "so(" + std::to_string(p) + "," + std::to_string(q) + ")";
    for (std::size_t i = 0; i < n; ++i) cat.vars.push_back("x" + std::to_string(i + 1));
    std::size_t k = 0;
    for (const auto& M : so_pq_matrices(p, q)) {
        PolyVectorField f{"e" + std::to_string(++k), cat.vars, {}};
        for (std::size_t i = 0; i < n; ++i) {
            Polynomial c(n);
            for (std::size_t j = 0; j < n; ++j)
                if (!M(i, j).is_zero()) c += Polynomial::variable(n, j, -M(i, j));
            f.components.push_back(c);
        }
        cat.fields.push_back(std::move(f));
    }
    return cat;
}

bool is_catalog_name(const std::string& name) {
    static const std::regex sopq(R"(so\(\s*\d+\s*(,\s*\d+\s*)?\))");
    return name == "wave16" || name == "wave15" || name == "g2" || std::regex_match(name, sopq);
}

GeneratorCatalog catalog(const std::string& name) {
    if (name == "wave16") return {"wave16", kWaveVars, wave_fields()};
    if (name == "wave15") {
        auto w = wave_fields();
        std::vector<PolyVectorField> f(w.begin(), w.begin() + 6);
        QVec c(16, Rational(0));
        c[6] = Rational(1);
        c[15] = Rational(-1);
        f.push_back(vf_combine(w, c, "e7m16"));
        f.insert(f.end(), w.begin() + 7, w.begin() + 15);
        return {"wave15", kWaveVars, f};
    }
    if (name == "g2") return {"g2", kG2Vars, g2_fields()};
    static const std::regex sopq(R"(so\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?\))");
    std::smatch m;
    if (std::regex_match(name, m, sopq))
        return so_pq_generators(std::stoi(m[1]), m[2].matched ? std::stoi(m[2]) : 0);
    throw ParseError("unknown catalog '" + name + "'");
}

}  // namespace lieembed
