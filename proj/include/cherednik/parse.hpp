#ifndef CHEREDNIK_PARSE_HPP
#define CHEREDNIK_PARSE_HPP

#include "cherednik/polyrep.hpp"

#include <cctype>
#include <memory>

namespace cherednik {

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& msg, size_t p)
        : std::runtime_error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

namespace ast {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

/// Parse tree of the expression grammar. Symbols keep their spelling and
/// optional integer argument; lowering decides what is legal in context.
struct Node {
    enum class Kind { Number, Symbol, Add, Sub, Mul, Pow, Neg };
    Kind kind;
    BigInt number;           // Number
    std::string sym;         // Symbol base name: sigma tau hbar k z u t s x y h U T
    long long index = 0;     // Symbol index
    bool has_index = false;
    NodePtr lhs, rhs;        // binary ops; lhs for Neg
    long long exponent = 0;  // Pow

    static NodePtr num(BigInt v) {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Number;
        n->number = std::move(v);
        return n;
    }
    static NodePtr symbol(std::string s, bool idx, long long i) {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Symbol;
        n->sym = std::move(s);
        n->has_index = idx;
        n->index = i;
        return n;
    }
    static NodePtr binary(Kind k, NodePtr a, NodePtr b) {
        auto n = std::make_shared<Node>();
        n->kind = k;
        n->lhs = std::move(a);
        n->rhs = std::move(b);
        return n;
    }
    static NodePtr pow(NodePtr a, long long e) {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Pow;
        n->lhs = std::move(a);
        n->exponent = e;
        return n;
    }
    static NodePtr neg(NodePtr a) {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Neg;
        n->lhs = std::move(a);
        return n;
    }
};

} // namespace ast

namespace detail {

struct Lexer {
    std::string src;
    size_t pos = 0;

    void skip() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool done() {
        skip();
        return pos >= src.size();
    }
    char peek() {
        skip();
        return pos < src.size() ? src[pos] : '\0';
    }
    bool eat(char c) {
        skip();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    BigInt number() {
        skip();
        size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (start == pos) throw ParseError("expected number", pos);
        return BigInt(src.substr(start, pos - start));
    }
    std::string ident() {
        skip();
        size_t start = pos;
        if (pos >= src.size() || !std::isalpha(static_cast<unsigned char>(src[pos])))
            throw ParseError("expected identifier", pos);
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos]))))
            ++pos;
        return src.substr(start, pos - start);
    }
    long long signed_int() {
        skip();
        bool negate = eat('-');
        BigInt v = number();
        long long out = v.convert_to<long long>();
        return negate ? -out : out;
    }
};

class Parser {
public:
    explicit Parser(std::string src) { lex_.src = std::move(src); }

    ast::NodePtr parse() {
        auto e = expr();
        if (!lex_.done()) throw ParseError("unexpected trailing input", lex_.pos);
        return e;
    }

private:
    ast::NodePtr expr() {
        auto acc = term();
        while (true) {
            if (lex_.eat('+')) acc = ast::Node::binary(ast::Node::Kind::Add, acc, term());
            else if (lex_.eat('-')) acc = ast::Node::binary(ast::Node::Kind::Sub, acc, term());
            else return acc;
        }
    }
    ast::NodePtr term() {
        auto acc = factor();
        while (lex_.eat('*')) acc = ast::Node::binary(ast::Node::Kind::Mul, acc, factor());
        return acc;
    }
    ast::NodePtr factor() {
        auto base = primary();
        if (lex_.eat('^')) return ast::Node::pow(base, lex_.signed_int());
        return base;
    }
    ast::NodePtr primary() {
        char c = lex_.peek();
        if (c == '(') {
            lex_.eat('(');
            auto e = expr();
            if (!lex_.eat(')')) throw ParseError("expected ')'", lex_.pos);
            return e;
        }
        if (c == '-') {
            lex_.eat('-');
            return ast::Node::neg(primary());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return ast::Node::num(lex_.number());
        std::string id = lex_.ident();
        // exact names first
        if (id == "sigma" || id == "tau" || id == "hbar" || id == "k" || id == "z")
            return maybe_call(id);
        // letter followed by digits: u1 t2 s1 x1 y1 h0 U1 T2
        if (id.size() >= 2) {
            std::string base = id.substr(0, 1);
            std::string digits = id.substr(1);
            if (is_gen_letter(base) &&
                std::all_of(digits.begin(), digits.end(),
                            [](char d) { return std::isdigit(static_cast<unsigned char>(d)); }))
                return ast::Node::symbol(base, true, std::stoll(digits));
        }
        if (is_gen_letter(id)) return maybe_call(id);
        throw ParseError("unknown token '" + id + "'", lex_.pos);
    }
    ast::NodePtr maybe_call(const std::string& id) {
        if ((id == "u" || id == "t" || id == "U" || id == "T") && lex_.peek() == '(') {
            lex_.eat('(');
            long long i = lex_.signed_int();
            if (!lex_.eat(')')) throw ParseError("expected ')'", lex_.pos);
            return ast::Node::symbol(id, true, i);
        }
        return ast::Node::symbol(id, false, 0);
    }
    static bool is_gen_letter(const std::string& s) {
        return s == "u" || s == "t" || s == "s" || s == "x" || s == "y" || s == "h" ||
               s == "U" || s == "T";
    }

    Lexer lex_;
};

} // namespace detail

inline ast::NodePtr parse_text(const std::string& src) {
    detail::Parser p(src);
    return p.parse();
}

/// Words for the images of the PBW generators inside the shifted
/// presentation: x_i = chi_i sigma upsilon_i^{-1}, y_i = upsilon_i tau chi_i^{-1},
/// as reduced transposition words around sigma/tau.
inline AWord x_image_word(unsigned ell, unsigned n, unsigned i) {
    if (i < 1 || i > n) throw std::invalid_argument("x index out of range");
    AWord::Word w;
    for (unsigned j = i; j >= 2; --j) w.push_back(AGen::transp(j - 1));
    w.push_back(AGen::sigma());
    for (unsigned j = n; j > i; --j) w.push_back(AGen::transp(j - 1));
    return AWord::word(ell, std::move(w));
}

inline AWord y_image_word(unsigned ell, unsigned n, unsigned i) {
    if (i < 1 || i > n) throw std::invalid_argument("y index out of range");
    AWord::Word w;
    for (unsigned j = i; j < n; ++j) w.push_back(AGen::transp(j));
    w.push_back(AGen::tau());
    for (unsigned j = 1; j < i; ++j) w.push_back(AGen::transp(j));
    return AWord::word(ell, std::move(w));
}

/// Lowers a parse tree to a scalar; only hbar, k, h_r, z and numbers are
/// legal here.
inline CycScalar ast_to_scalar(const ast::NodePtr& node, unsigned ell) {
    using K = ast::Node::Kind;
    switch (node->kind) {
        case K::Number: return CycScalar::from_rat(ell, Rat(node->number));
        case K::Add: return ast_to_scalar(node->lhs, ell) + ast_to_scalar(node->rhs, ell);
        case K::Sub: return ast_to_scalar(node->lhs, ell) - ast_to_scalar(node->rhs, ell);
        case K::Mul: return ast_to_scalar(node->lhs, ell) * ast_to_scalar(node->rhs, ell);
        case K::Neg: return -ast_to_scalar(node->lhs, ell);
        case K::Pow: {
            if (node->lhs->kind == K::Symbol && node->lhs->sym == "z")
                return CycScalar::zeta_pow(ell, node->exponent);
            if (node->exponent < 0) throw ParseError("negative exponent on scalar", 0);
            return ast_to_scalar(node->lhs, ell).pow(static_cast<unsigned>(node->exponent));
        }
        case K::Symbol: {
            if (node->sym == "hbar") return CycScalar::hbar(ell);
            if (node->sym == "k") return CycScalar::kparam(ell);
            if (node->sym == "z") return CycScalar::zeta_pow(ell, 1);
            if (node->sym == "h" && node->has_index) {
                if (node->index < 0 || node->index >= static_cast<long long>(ell))
                    throw ParseError("h index out of range", 0);
                return CycScalar::hparam(ell, static_cast<unsigned>(node->index));
            }
            throw ParseError("symbol '" + node->sym + "' is not a scalar", 0);
        }
    }
    throw std::logic_error("unreachable");
}

/// Lowers a parse tree to a word in the presentation generators; x_i and
/// y_i expand to their isomorphism words.
inline AWord ast_to_aword(const ast::NodePtr& node, unsigned ell, unsigned n) {
    using K = ast::Node::Kind;
    switch (node->kind) {
        case K::Number:
            return AWord::scalar(ell, CycScalar::from_rat(ell, Rat(node->number)));
        case K::Add: return ast_to_aword(node->lhs, ell, n) + ast_to_aword(node->rhs, ell, n);
        case K::Sub: return ast_to_aword(node->lhs, ell, n) - ast_to_aword(node->rhs, ell, n);
        case K::Mul: return ast_to_aword(node->lhs, ell, n) * ast_to_aword(node->rhs, ell, n);
        case K::Neg:
            return CycScalar::from_rat(ell, Rat(-1)) * ast_to_aword(node->lhs, ell, n);
        case K::Pow: {
            long long e = node->exponent;
            if (e >= 0) return ast_to_aword(node->lhs, ell, n).pow(static_cast<unsigned>(e));
            const auto& b = node->lhs;
            if (b->kind == K::Symbol && b->sym == "t") {
                long long l = ell;
                unsigned rep = static_cast<unsigned>(((e % l) + l) % l);
                return ast_to_aword(b, ell, n).pow(rep);
            }
            if (b->kind == K::Symbol && b->sym == "s")
                return ast_to_aword(b, ell, n).pow(static_cast<unsigned>((-e) % 2));
            if (b->kind == K::Symbol && b->sym == "z")
                return AWord::scalar(ell, CycScalar::zeta_pow(ell, e));
            throw ParseError("negative exponent is only defined for t, s and z", 0);
        }
        case K::Symbol: {
            const std::string& s = node->sym;
            if (s == "sigma") return AWord::gen(ell, AGen::sigma());
            if (s == "tau") return AWord::gen(ell, AGen::tau());
            if (s == "hbar" || s == "k" || s == "z" || s == "h")
                return AWord::scalar(ell, ast_to_scalar(node, ell));
            if (!node->has_index) throw ParseError("symbol '" + s + "' needs an index", 0);
            long long i = node->index;
            if (s == "u") return AWord::gen(ell, AGen::u(i));
            if (s == "t") return AWord::gen(ell, AGen::t(i));
            if (s == "s") {
                if (i < 1 || i >= static_cast<long long>(n))
                    throw ParseError("transposition index out of range", 0);
                return AWord::gen(ell, AGen::transp(i));
            }
            if (s == "x" || s == "y") {
                if (i < 1 || i > static_cast<long long>(n))
                    throw ParseError("generator index out of range", 0);
                return s == "x" ? x_image_word(ell, n, static_cast<unsigned>(i))
                                : y_image_word(ell, n, static_cast<unsigned>(i));
            }
            throw ParseError("symbol '" + s + "' is not a word generator", 0);
        }
    }
    throw std::logic_error("unreachable");
}

inline unsigned mod_exp_poly(unsigned ell, long long e) {
    long long l = ell;
    return static_cast<unsigned>(((e % l) + l) % l);
}

/// Lowers a parse tree to an element of the polynomial representation;
/// U_i, T_i (indices normalized through the shift rules) and scalars only.
inline PolyUT ast_to_poly(const ast::NodePtr& node, unsigned ell, unsigned n,
                          Convention conv = Convention::selected()) {
    using K = ast::Node::Kind;
    PolyRep rep(ell, n, conv);
    switch (node->kind) {
        case K::Number:
            return CycScalar::from_rat(ell, Rat(node->number)) * PolyUT::one(ell, n);
        case K::Add:
            return ast_to_poly(node->lhs, ell, n, conv) + ast_to_poly(node->rhs, ell, n, conv);
        case K::Sub:
            return ast_to_poly(node->lhs, ell, n, conv) - ast_to_poly(node->rhs, ell, n, conv);
        case K::Mul:
            return ast_to_poly(node->lhs, ell, n, conv) * ast_to_poly(node->rhs, ell, n, conv);
        case K::Neg:
            return CycScalar::from_rat(ell, Rat(-1)) * ast_to_poly(node->lhs, ell, n, conv);
        case K::Pow: {
            long long e = node->exponent;
            if (node->lhs->kind == K::Symbol && node->lhs->sym == "T") {
                PolyUT base = ast_to_poly(node->lhs, ell, n, conv);
                unsigned rep_e = mod_exp_poly(ell, e);
                PolyUT out = PolyUT::one(ell, n);
                for (unsigned r = 0; r < rep_e; ++r) out = out * base;
                return out;
            }
            if (node->lhs->kind == K::Symbol && node->lhs->sym == "z")
                return CycScalar::zeta_pow(ell, e) * PolyUT::one(ell, n);
            if (e < 0) throw ParseError("negative exponent on polynomial", 0);
            PolyUT base = ast_to_poly(node->lhs, ell, n, conv);
            PolyUT out = PolyUT::one(ell, n);
            for (long long r = 0; r < e; ++r) out = out * base;
            return out;
        }
        case K::Symbol: {
            const std::string& s = node->sym;
            if (s == "hbar" || s == "k" || s == "z" || s == "h")
                return ast_to_scalar(node, ell) * PolyUT::one(ell, n);
            if (!node->has_index) throw ParseError("symbol '" + s + "' needs an index", 0);
            if (s == "U") return rep.act(AGen::u(node->index), PolyUT::one(ell, n));
            if (s == "T") return rep.act(AGen::t(node->index), PolyUT::one(ell, n));
            throw ParseError("symbol '" + s + "' is not a polynomial variable", 0);
        }
    }
    throw std::logic_error("unreachable");
}

inline AWord parse_aword(const std::string& src, unsigned ell, unsigned n) {
    return ast_to_aword(parse_text(src), ell, n);
}
inline PolyUT parse_poly(const std::string& src, unsigned ell, unsigned n,
                         Convention conv = Convention::selected()) {
    return ast_to_poly(parse_text(src), ell, n, conv);
}
inline CycScalar parse_scalar(const std::string& src, unsigned ell) {
    return ast_to_scalar(parse_text(src), ell);
}

/// Canonical text of a word in the presentation generators; parseable by
/// the same grammar.
inline std::string aword_to_string(const AWord& w) {
    if (w.terms().empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, gens] : w.terms()) {
        std::string cs = c.to_string();
        if (!first) os << " + ";
        first = false;
        bool multi = c.terms().size() > 1;
        std::string prefix = multi ? "(" + cs + ")" : cs;
        std::string word;
        for (const auto& g : gens) {
            if (!word.empty()) word += "*";
            switch (g.kind) {
                case AGen::Kind::Sigma: word += "sigma"; break;
                case AGen::Kind::Tau: word += "tau"; break;
                case AGen::Kind::U: word += "u(" + std::to_string(g.index) + ")"; break;
                case AGen::Kind::T: word += "t(" + std::to_string(g.index) + ")"; break;
                case AGen::Kind::Transp: word += "s" + std::to_string(g.index); break;
                case AGen::Kind::Scalar: {
                    bool m2 = g.value.terms().size() > 1;
                    word += m2 ? "(" + g.value.to_string() + ")" : g.value.to_string();
                    break;
                }
            }
        }
        if (word.empty()) {
            os << prefix;
        } else if (cs == "1") {
            os << word;
        } else {
            os << prefix << "*" << word;
        }
    }
    return os.str();
}

} // namespace cherednik

#endif
