#include "pbsym/opdsl.hpp"

#include <cctype>

#include "pbsym/errors.hpp"

namespace pbsym {

namespace {

using Kind = OpAst::Kind;

struct Token {
    enum class Type { number, ident, symbol, end };
    Type type = Type::end;
    std::string text;
    Rational num = 0;
    std::size_t pos = 0;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Token t;
        t.pos = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            t.type = Token::Type::number;
            t.text = text.substr(i, j - i);
            t.num = Rational(Integer(t.text));
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                       text[j] == '_'))
                ++j;
            t.type = Token::Type::ident;
            t.text = text.substr(i, j - i);
            i = j;
        } else if (std::string("+-*/(),").find(c) != std::string::npos) {
            t.type = Token::Type::symbol;
            t.text = std::string(1, c);
            ++i;
        } else {
            throw parse_error(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.pos = text.size();
    out.push_back(end);
    return out;
}

OpAst leaf(Kind k) {
    OpAst n;
    n.kind = k;
    return n;
}

OpAst number_leaf(const Rational& v) {
    OpAst n;
    n.kind = Kind::number;
    n.value = v;
    return n;
}

OpAst indexed_leaf(Kind k, int index) {
    OpAst n;
    n.kind = k;
    n.index = index;
    return n;
}

OpAst binary(Kind k, OpAst lhs, OpAst rhs) {
    OpAst n;
    n.kind = k;
    n.children.push_back(std::move(lhs));
    n.children.push_back(std::move(rhs));
    return n;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, int nvars) : tokens_(std::move(tokens)), nvars_(nvars) {}

    OpAst parse() {
        OpAst out = expr(false);
        if (!at_end()) throw parse_error("unexpected trailing input", peek().pos);
        return out;
    }

private:
    std::vector<Token> tokens_;
    int nvars_;
    std::size_t cursor_ = 0;

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = cursor_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    const Token& advance() { return tokens_[cursor_++]; }
    bool at_end() const { return peek().type == Token::Type::end; }

    bool match_symbol(const char* s) {
        if (peek().type == Token::Type::symbol && peek().text == s) {
            ++cursor_;
            return true;
        }
        return false;
    }
    void expect_symbol(const char* s, const char* what) {
        if (!match_symbol(s))
            throw parse_error(std::string("expected '") + s + "' " + what, peek().pos);
    }

    OpAst expr(bool scalar_mode) {
        OpAst node;
        if (match_symbol("-")) {
            node = binary(Kind::sub, number_leaf(0), term(scalar_mode));
        } else {
            node = term(scalar_mode);
        }
        while (true) {
            if (match_symbol("+")) {
                node = binary(Kind::add, std::move(node), term(scalar_mode));
            } else if (match_symbol("-")) {
                node = binary(Kind::sub, std::move(node), term(scalar_mode));
            } else {
                return node;
            }
        }
    }

    OpAst term(bool scalar_mode) {
        OpAst node = factor(scalar_mode);
        while (true) {
            if (match_symbol("*")) {
                node = binary(Kind::mul, std::move(node), factor(scalar_mode));
            } else if (scalar_mode && peek().type == Token::Type::symbol && peek().text == "/") {
                ++cursor_;
                node = binary(Kind::div, std::move(node), factor(scalar_mode));
            } else {
                return node;
            }
        }
    }

    OpAst factor(bool scalar_mode) {
        const Token& t = peek();
        if (t.type == Token::Type::number) {
            advance();
            // A '/' directly between two integer tokens is a rational literal
            // in every position; general scalar division is handled in term().
            if (peek().type == Token::Type::symbol && peek().text == "/" &&
                peek(1).type == Token::Type::number) {
                ++cursor_;
                const Token& den = advance();
                if (den.num == 0) throw parse_error("zero denominator", den.pos);
                return number_leaf(t.num / den.num);
            }
            return number_leaf(t.num);
        }
        if (t.type == Token::Type::ident) return ident_factor(scalar_mode);
        if (match_symbol("(")) {
            OpAst inner = expr(scalar_mode);
            expect_symbol(")", "to close the group");
            return inner;
        }
        throw parse_error("expected an atom or '('", t.pos);
    }

    OpAst ident_factor(bool scalar_mode) {
        const Token& t = advance();
        const std::string& name = t.text;
        if (name == "omega") return leaf(Kind::omega);
        if (name == "nu") return leaf(Kind::nu);
        if (name == "OE") return leaf(Kind::euler);
        if (name == "OL") return leaf(Kind::deformed_laplacian);
        if (name == "LAP") return leaf(Kind::laplacian);
        if (name == "X2") return leaf(Kind::coord_square);
        if (name == "comm") {
            expect_symbol("(", "after comm");
            OpAst a = expr(scalar_mode);
            expect_symbol(",", "between commutator arguments");
            OpAst b = expr(scalar_mode);
            expect_symbol(")", "to close comm");
            return binary(Kind::commutator, std::move(a), std::move(b));
        }
        if (name == "exp") {
            expect_symbol("(", "after exp");
            OpAst rate = expr(true);
            expect_symbol(",", "between exponential arguments");
            OpAst body = expr(scalar_mode);
            expect_symbol(")", "to close exp");
            return binary(Kind::exponential, std::move(rate), std::move(body));
        }
        if ((name[0] == 'x' || name[0] == 'd') && name.size() > 1) {
            bool digits = true;
            for (std::size_t i = 1; i < name.size(); ++i)
                digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
            if (digits) {
                int index = std::stoi(name.substr(1));
                if (index < 1 || index > nvars_)
                    throw parse_error("index out of range for " + std::to_string(nvars_) +
                                          " variables",
                                      t.pos);
                return indexed_leaf(name[0] == 'x' ? Kind::coordinate : Kind::derivative,
                                    index - 1);
            }
        }
        throw parse_error("unknown identifier '" + name + "'", t.pos);
    }
};

// Rendering precedence: sums 1, products 2, atoms and calls 3.
int precedence(Kind k) {
    switch (k) {
        case Kind::add:
        case Kind::sub: return 1;
        case Kind::mul:
        case Kind::div: return 2;
        default: return 3;
    }
}

void render(const OpAst& n, std::string& out) {
    auto child = [&](const OpAst& c, int min_prec) {
        bool parens = precedence(c.kind) < min_prec;
        if (parens) out += "(";
        render(c, out);
        if (parens) out += ")";
    };
    switch (n.kind) {
        case Kind::add:
            child(n.children[0], 1);
            out += " + ";
            child(n.children[1], 2);
            return;
        case Kind::sub:
            child(n.children[0], 1);
            out += " - ";
            child(n.children[1], 2);
            return;
        case Kind::mul:
            child(n.children[0], 2);
            out += "*";
            child(n.children[1], 3);
            return;
        case Kind::div:
            child(n.children[0], 2);
            out += "/";
            child(n.children[1], 3);
            return;
        case Kind::number: out += to_string(n.value); return;
        case Kind::omega: out += "omega"; return;
        case Kind::nu: out += "nu"; return;
        case Kind::coordinate: out += "x" + std::to_string(n.index + 1); return;
        case Kind::derivative: out += "d" + std::to_string(n.index + 1); return;
        case Kind::euler: out += "OE"; return;
        case Kind::deformed_laplacian: out += "OL"; return;
        case Kind::laplacian: out += "LAP"; return;
        case Kind::coord_square: out += "X2"; return;
        case Kind::commutator:
            out += "comm(";
            render(n.children[0], out);
            out += ", ";
            render(n.children[1], out);
            out += ")";
            return;
        case Kind::exponential:
            out += "exp(";
            render(n.children[0], out);
            out += ", ";
            render(n.children[1], out);
            out += ")";
            return;
    }
}

bool is_scalar_tree(const OpAst& n) {
    switch (n.kind) {
        case Kind::number:
        case Kind::omega:
        case Kind::nu: return true;
        case Kind::add:
        case Kind::sub:
        case Kind::mul:
        case Kind::div:
            return is_scalar_tree(n.children[0]) && is_scalar_tree(n.children[1]);
        default: return false;
    }
}

}  // namespace

bool OpAst::operator==(const OpAst& o) const {
    if (kind != o.kind || index != o.index || children.size() != o.children.size()) return false;
    if (kind == Kind::number && value != o.value) return false;
    for (std::size_t i = 0; i < children.size(); ++i)
        if (!(children[i] == o.children[i])) return false;
    return true;
}

std::string OpAst::str() const {
    std::string out;
    render(*this, out);
    return out;
}

OpAst parse_opdsl(const std::string& text, int nvars) {
    if (text.empty()) throw parse_error("empty expression", 0);
    return Parser(tokenize(text), nvars).parse();
}

EvalContext::EvalContext(int nvars, const Rational& omega, const Rational& nu)
    : nvars_(nvars), omega_(omega), nu_(nu) {
    if (nvars != 2 && nvars != 3) throw value_error("expressions support 2 or 3 variables");
}

const CalogeroModel& EvalContext::model() const {
    // The named operator atoms only need the drift coupling, so the model is
    // built at unit frequency with the small-coupling guard relaxed.
    if (!model_) model_ = std::make_shared<CalogeroModel>(nvars_, Rational(1), nu_, true);
    return *model_;
}

bool contains_exponential(const OpAst& ast) {
    if (ast.kind == Kind::exponential) return true;
    for (const OpAst& c : ast.children)
        if (contains_exponential(c)) return true;
    return false;
}

RadScalar eval_scalar(const OpAst& ast, const EvalContext& ctx) {
    switch (ast.kind) {
        case Kind::number: return RadScalar(ast.value);
        case Kind::omega: return RadScalar(ctx.omega());
        case Kind::nu: return RadScalar(ctx.nu());
        case Kind::add: return eval_scalar(ast.children[0], ctx) + eval_scalar(ast.children[1], ctx);
        case Kind::sub: return eval_scalar(ast.children[0], ctx) - eval_scalar(ast.children[1], ctx);
        case Kind::mul: return eval_scalar(ast.children[0], ctx) * eval_scalar(ast.children[1], ctx);
        case Kind::div: {
            RadScalar den = eval_scalar(ast.children[1], ctx);
            if (den.is_zero()) throw value_error("division by zero");
            return eval_scalar(ast.children[0], ctx) * den.inverse();
        }
        default: throw value_error("expected a scalar expression, got: " + ast.str());
    }
}

DiffOp eval_operator(const OpAst& ast, const EvalContext& ctx) {
    if (is_scalar_tree(ast))
        return DiffOp::identity(ctx.nvars()).scaled(eval_scalar(ast, ctx));
    switch (ast.kind) {
        case Kind::coordinate: return DiffOp::coordinate(ctx.nvars(), ast.index + 1);
        case Kind::derivative: return DiffOp::partial(ctx.nvars(), ast.index + 1);
        case Kind::euler: return ctx.model().euler();
        case Kind::deformed_laplacian: return ctx.model().deformed_laplacian();
        case Kind::laplacian: return ctx.model().laplacian();
        case Kind::coord_square: return ctx.model().coord_square();
        case Kind::add: return eval_operator(ast.children[0], ctx) + eval_operator(ast.children[1], ctx);
        case Kind::sub: return eval_operator(ast.children[0], ctx) - eval_operator(ast.children[1], ctx);
        case Kind::mul:
            return eval_operator(ast.children[0], ctx).compose(eval_operator(ast.children[1], ctx));
        case Kind::div: throw value_error("division by an operator expression: " + ast.str());
        case Kind::commutator:
            return commutator(eval_operator(ast.children[0], ctx),
                              eval_operator(ast.children[1], ctx));
        case Kind::exponential:
            throw value_error("operator exponentials act on functions; use an apply mode");
        default: throw value_error("unsupported operator expression: " + ast.str());
    }
}

Element apply_ast_exact(const OpAst& ast, const Element& f, const EvalContext& ctx) {
    if (!contains_exponential(ast)) return eval_operator(ast, ctx).apply(f);
    switch (ast.kind) {
        case Kind::exponential:
            return apply_exp_exact(eval_scalar(ast.children[0], ctx),
                                   eval_operator(ast.children[1], ctx), f);
        case Kind::mul:
            return apply_ast_exact(ast.children[0], apply_ast_exact(ast.children[1], f, ctx), ctx);
        case Kind::add:
            return apply_ast_exact(ast.children[0], f, ctx) +
                   apply_ast_exact(ast.children[1], f, ctx);
        case Kind::sub:
            return apply_ast_exact(ast.children[0], f, ctx) -
                   apply_ast_exact(ast.children[1], f, ctx);
        default:
            throw value_error("exponential factors may only be combined by +, -, *: " + ast.str());
    }
}

GradedSeries apply_ast_truncated(const OpAst& ast, const GradedSeries& f, const EvalContext& ctx) {
    if (!contains_exponential(ast)) return eval_operator(ast, ctx).apply(f);
    switch (ast.kind) {
        case Kind::exponential:
            return apply_exp_truncated(eval_scalar(ast.children[0], ctx),
                                       eval_operator(ast.children[1], ctx), f);
        case Kind::mul:
            return apply_ast_truncated(ast.children[0],
                                       apply_ast_truncated(ast.children[1], f, ctx), ctx);
        case Kind::add:
            return apply_ast_truncated(ast.children[0], f, ctx) +
                   apply_ast_truncated(ast.children[1], f, ctx);
        case Kind::sub:
            return apply_ast_truncated(ast.children[0], f, ctx) -
                   apply_ast_truncated(ast.children[1], f, ctx);
        default:
            throw value_error("exponential factors may only be combined by +, -, *: " + ast.str());
    }
}

Element parse_element(const std::string& text, const EvalContext& ctx) {
    return apply_ast_exact(parse_opdsl(text, ctx.nvars()), Element::one(ctx.nvars()), ctx);
}

}
