#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pbsym/calogero.hpp"
#include "pbsym/diffop.hpp"

namespace pbsym {

// Parse tree for the operator expression language.
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*            ('/' also, in scalar position)
//   factor := atom | '(' expr ')' | 'comm(' expr ',' expr ')'
//           | 'exp(' scalar-expr ',' expr ')'
//   atom   := x<i> | d<i> | OE | OL | LAP | X2 | omega | nu
//           | integer | integer '/' integer
//
// '*' binds tighter than '+'/'-'; both associate to the left.  The first
// argument of exp() is parsed as a scalar expression, where '/' is a general
// division operator (e.g. "1/(4*omega)"); elsewhere '/' only forms rational
// literals.
struct OpAst {
    enum class Kind {
        add,
        sub,
        mul,
        div,
        number,
        omega,
        nu,
        coordinate,
        derivative,
        euler,
        deformed_laplacian,
        laplacian,
        coord_square,
        commutator,
        exponential,
    };

    Kind kind = Kind::number;
    Rational value = 0;  // number leaves
    int index = 0;       // coordinate/derivative leaves, 0-based
    std::vector<OpAst> children;

    bool operator==(const OpAst& o) const;
    bool operator!=(const OpAst& o) const { return !(*this == o); }

    // Canonical rendering; re-parsing it yields a structurally identical tree.
    std::string str() const;
};

// Parses an expression over nvars variables (coordinate and derivative
// indices are range-checked against it). Throws parse_error with a 0-based
// position on syntax errors, unknown identifiers, and out-of-range indices.
OpAst parse_opdsl(const std::string& text, int nvars);

// Values for the symbolic leaves and the variable count, plus a lazily built
// operator table for the named atoms (OE, OL, LAP, X2).
class EvalContext {
public:
    EvalContext(int nvars, const Rational& omega, const Rational& nu);

    int nvars() const { return nvars_; }
    const Rational& omega() const { return omega_; }
    const Rational& nu() const { return nu_; }
    const CalogeroModel& model() const;

private:
    int nvars_;
    Rational omega_;
    Rational nu_;
    mutable std::shared_ptr<const CalogeroModel> model_;
};

// True when the tree contains an exponential node anywhere.
bool contains_exponential(const OpAst& ast);

// Evaluates a tree built from scalar leaves only (numbers, omega, nu).
// Throws value_error on operator content or division by a non-invertible
// scalar.
RadScalar eval_scalar(const OpAst& ast, const EvalContext& ctx);

// Evaluates to a differential operator. Scalar subtrees become multiples of
// the identity. Throws value_error on exponential nodes (those act on
// functions, see apply_ast_*) and on division by operators.
DiffOp eval_operator(const OpAst& ast, const EvalContext& ctx);

// Applies the tree to a function, handling exponential factors via the exact
// (terminating) or truncated operator-exponential machinery. Products apply
// right factor first; sums apply both sides and combine.
Element apply_ast_exact(const OpAst& ast, const Element& f, const EvalContext& ctx);
GradedSeries apply_ast_truncated(const OpAst& ast, const GradedSeries& f, const EvalContext& ctx);

// An element literal is an operator expression applied to the constant 1:
// "x1*x1 - 1/2" is a polynomial, "exp(-1/2, X2)" the unit Gaussian.
Element parse_element(const std::string& text, const EvalContext& ctx);

}
