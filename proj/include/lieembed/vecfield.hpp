#pragma once

#include "lieembed/lie_algebra.hpp"

#include <map>
#include <string>
#include <vector>

namespace lieembed {

/// Exponent vector, one entry per variable.
using Monomial = std::vector<int>;

/// Graded lexicographic order on exponent vectors.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Multivariate polynomial with rational coefficients in a fixed number of variables.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t i, const Rational& c = Rational(1));
    static Polynomial term(const Monomial& m, const Rational& c);

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    /// Adds c * m.
    void add_term(const Monomial& m, const Rational& c);

    Polynomial derivative(std::size_t var) const;
    Rational eval(const std::vector<Rational>& point) const;
    /// Degree in one variable.
    int degree_in(std::size_t var) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, Polynomial a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    std::string str(const std::vector<std::string>& vars) const;

private:
    void check(const Polynomial& o) const;
    std::size_t nvars_ = 0;
    Terms terms_;
};

/// Vector field sum_i components[i] d/d vars[i].
struct PolyVectorField {
    std::string name;
    std::vector<std::string> vars;
    std::vector<Polynomial> components;

    bool is_zero() const;
    std::string str() const;
};

struct GeneratorCatalog {
    std::string name;
    std::vector<std::string> vars;
    std::vector<PolyVectorField> fields;
};

/// [V, W]_i = sum_j V_j d_j W_i - W_j d_j V_i. Throws VariableMismatch.
PolyVectorField vf_bracket(const PolyVectorField& V, const PolyVectorField& W);
/// Linear combination sum c_k F_k of same-variable fields.
PolyVectorField vf_combine(const std::vector<PolyVectorField>& fields, const QVec& c, std::string name = {});

/// Structure constants of the span of the catalog fields (NotClosed when a
/// bracket leaves the span, InvariantViolation when Jacobi fails).
LieAlgebra structure_constants(const GeneratorCatalog& catalog);

/// Number of joint invariants: n_vars minus the generic rank of the
/// coefficient matrix, taken as the maximum rank over fixed sample points.
std::size_t invariant_count(const std::vector<PolyVectorField>& fields, std::size_t n_vars);

/// Built-in catalogs: "wave16", "wave15", "g2", "so(p,q)".
GeneratorCatalog catalog(const std::string& name);
bool is_catalog_name(const std::string& name);
/// Linear vector fields x -> -(M x) for the basis of so(p,q); their bracket
/// reproduces the matrix commutator.
GeneratorCatalog so_pq_generators(int p, int q);
/// The matrices themselves (row-major p+q square), same order as so_pq_generators.
std::vector<QMatrix> so_pq_matrices(int p, int q);

}  // namespace lieembed

namespace lieembed {

/// Parses expressions such as "1/2*(y^2+t^2-x^2-z^2)" or "-u*y" over the named variables.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars);

}  // namespace lieembed
