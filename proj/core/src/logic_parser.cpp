#include "emso/builtins.hpp"
#include "emso/logic.hpp"

#include <cctype>
#include <charconv>

namespace emso {

namespace {

enum class Tok : std::uint8_t {
    End,
    Ident,
    Number,
    LParen,
    RParen,
    Comma,
    Semicolon,
    Tilde,
    Equal,
    Bang,
    Amp,
    Bar,
    Arrow,
    DoubleArrow,
    At,
    Plus,
};

struct Token
{
    Tok kind = Tok::End;
    std::string text;
    std::size_t pos = 0;
};

class Lexer
{
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    [[nodiscard]] const Token& peek() const noexcept { return current_; }

    Token take()
    {
        auto t = current_;
        advance();
        return t;
    }

private:
    void advance()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        current_ = Token{Tok::End, "", pos_};
        if (pos_ >= text_.size()) {
            return;
        }
        auto c = text_[pos_];
        auto start = pos_;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            current_ = Token{Tok::Ident, std::string(text_.substr(start, pos_ - start)), start};
            return;
        }
        auto negative = c == '-' && pos_ + 1 < text_.size() &&
                        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]));
        if (std::isdigit(static_cast<unsigned char>(c)) || negative) {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            current_ = Token{Tok::Number, std::string(text_.substr(start, pos_ - start)), start};
            return;
        }
        auto rest = text_.substr(pos_);
        auto sym = [&](Tok kind, std::size_t len) {
            current_ = Token{kind, std::string(rest.substr(0, len)), start};
            pos_ += len;
        };
        if (rest.starts_with("<->")) {
            return sym(Tok::DoubleArrow, 3);
        }
        if (rest.starts_with("->")) {
            return sym(Tok::Arrow, 2);
        }
        switch (c) {
        case '(': return sym(Tok::LParen, 1);
        case ')': return sym(Tok::RParen, 1);
        case ',': return sym(Tok::Comma, 1);
        case ';': return sym(Tok::Semicolon, 1);
        case '~': return sym(Tok::Tilde, 1);
        case '=': return sym(Tok::Equal, 1);
        case '!': return sym(Tok::Bang, 1);
        case '&': return sym(Tok::Amp, 1);
        case '|': return sym(Tok::Bar, 1);
        case '@': return sym(Tok::At, 1);
        case '+': return sym(Tok::Plus, 1);
        default: break;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_;
};

bool is_keyword(const std::string& s)
{
    return s == "EX" || s == "ALL" || s == "EXSET" || s == "in" || s == "true" || s == "false";
}

std::unique_ptr<Node> make(NodeKind kind)
{
    auto n = std::make_unique<Node>();
    n->kind = kind;
    return n;
}

std::unique_ptr<Node> binary(NodeKind kind, std::unique_ptr<Node> lhs, std::unique_ptr<Node> rhs)
{
    auto n = make(kind);
    n->children.push_back(std::move(lhs));
    n->children.push_back(std::move(rhs));
    return n;
}

} // namespace

class FormulaParser
{
public:
    FormulaParser(std::string_view text, const ParseOptions& options) : lex_(text)
    {
        for (const auto& name : options.free_sets) {
            check_name(name, 0);
            scope_.push_back({name, true, declare(true, name)});
        }
        for (const auto& name : options.free_vertices) {
            check_name(name, 0);
            scope_.push_back({name, false, declare(false, name)});
        }
        formula_.free_sets_ = options.free_sets.size();
        formula_.free_vertices_ = options.free_vertices.size();
    }

    Formula parse()
    {
        formula_.root_ = parse_iff();
        if (lex_.peek().kind != Tok::End) {
            fail("unexpected '" + lex_.peek().text + "'");
        }
        classify(*formula_.root_, true);
        return std::move(formula_);
    }

private:
    struct Binding
    {
        std::string name;
        bool is_set;
        std::size_t slot;
    };

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, lex_.peek().pos); }

    void check_name(const std::string& name, std::size_t pos) const
    {
        if (name.empty() || is_keyword(name)) {
            throw ParseError("'" + name + "' cannot be used as a variable name", pos);
        }
    }

    std::size_t declare(bool is_set, const std::string& name)
    {
        auto& names = is_set ? formula_.set_names_ : formula_.vertex_names_;
        names.push_back(name);
        return names.size() - 1;
    }

    const Binding& lookup(const Token& t) const
    {
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
            if (it->name == t.text) {
                return *it;
            }
        }
        throw ParseError("unbound variable '" + t.text + "'", t.pos);
    }

    std::size_t vertex_slot(const Token& t) const
    {
        const auto& b = lookup(t);
        if (b.is_set) {
            throw ParseError("'" + t.text + "' is a set variable where a vertex variable is expected", t.pos);
        }
        return b.slot;
    }

    std::size_t set_slot(const Token& t) const
    {
        const auto& b = lookup(t);
        if (!b.is_set) {
            throw ParseError("'" + t.text + "' is a vertex variable where a set variable is expected", t.pos);
        }
        return b.slot;
    }

    Token expect(Tok kind, const std::string& what)
    {
        if (lex_.peek().kind != kind) {
            fail("expected " + what);
        }
        return lex_.take();
    }

    std::unique_ptr<Node> parse_iff()
    {
        auto lhs = parse_implies();
        while (lex_.peek().kind == Tok::DoubleArrow) {
            lex_.take();
            lhs = binary(NodeKind::Iff, std::move(lhs), parse_implies());
        }
        return lhs;
    }

    std::unique_ptr<Node> parse_implies()
    {
        auto lhs = parse_or();
        if (lex_.peek().kind == Tok::Arrow) {
            lex_.take();
            return binary(NodeKind::Implies, std::move(lhs), parse_implies());
        }
        return lhs;
    }

    std::unique_ptr<Node> parse_or()
    {
        auto lhs = parse_and();
        while (lex_.peek().kind == Tok::Bar) {
            lex_.take();
            lhs = binary(NodeKind::Or, std::move(lhs), parse_and());
        }
        return lhs;
    }

    std::unique_ptr<Node> parse_and()
    {
        auto lhs = parse_unary();
        while (lex_.peek().kind == Tok::Amp) {
            lex_.take();
            lhs = binary(NodeKind::And, std::move(lhs), parse_unary());
        }
        return lhs;
    }

    std::unique_ptr<Node> parse_unary()
    {
        const auto& t = lex_.peek();
        if (t.kind == Tok::Bang) {
            lex_.take();
            auto n = make(NodeKind::Not);
            n->children.push_back(parse_unary());
            return n;
        }
        if (t.kind == Tok::Ident && (t.text == "EX" || t.text == "ALL" || t.text == "EXSET")) {
            return parse_quantifier();
        }
        return parse_primary();
    }

    std::unique_ptr<Node> parse_quantifier()
    {
        auto head = lex_.take();
        bool is_set = head.text == "EXSET";
        auto kind = is_set ? NodeKind::ExistsSet : head.text == "EX" ? NodeKind::Exists : NodeKind::Forall;
        std::vector<Token> names{expect(Tok::Ident, "a variable name after " + head.text)};
        while (lex_.peek().kind == Tok::Comma) {
            lex_.take();
            names.push_back(expect(Tok::Ident, "a variable name"));
        }
        std::vector<std::unique_ptr<Node>> chain;
        for (const auto& name : names) {
            check_name(name.text, name.pos);
            auto n = make(kind);
            n->name = name.text;
            n->slot = declare(is_set, name.text);
            scope_.push_back({name.text, is_set, n->slot});
            chain.push_back(std::move(n));
        }
        auto body = parse_unary();
        scope_.resize(scope_.size() - names.size());
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            (*it)->children.push_back(std::move(body));
            body = std::move(*it);
        }
        return body;
    }

    std::unique_ptr<Node> parse_primary()
    {
        auto t = lex_.peek();
        switch (t.kind) {
        case Tok::LParen: {
            lex_.take();
            auto inner = parse_iff();
            expect(Tok::RParen, "')'");
            return inner;
        }
        case Tok::At: return parse_builtin();
        case Tok::Ident: break;
        default: fail(t.kind == Tok::End ? "unexpected end of formula" : "unexpected '" + t.text + "'");
        }
        lex_.take();
        if (t.text == "true") {
            return make(NodeKind::True);
        }
        if (t.text == "false") {
            return make(NodeKind::False);
        }
        if (lex_.peek().kind == Tok::LParen) {
            // X(x)
            auto set = set_slot(t);
            lex_.take();
            auto var = expect(Tok::Ident, "a vertex variable");
            expect(Tok::RParen, "')'");
            auto n = make(NodeKind::Member);
            n->slot = vertex_slot(var);
            n->slot2 = set;
            return n;
        }
        auto op = lex_.peek();
        if (op.kind == Tok::Ident && op.text == "in") {
            lex_.take();
            auto set = expect(Tok::Ident, "a set variable after 'in'");
            auto n = make(NodeKind::Member);
            n->slot = vertex_slot(t);
            n->slot2 = set_slot(set);
            return n;
        }
        if (op.kind != Tok::Tilde && op.kind != Tok::Equal) {
            fail("expected '~', '=' or 'in' after '" + t.text + "'");
        }
        lex_.take();
        auto rhs = expect(Tok::Ident, "a vertex variable");
        auto n = make(op.kind == Tok::Tilde ? NodeKind::Adjacent : NodeKind::Equal);
        n->slot = vertex_slot(t);
        n->slot2 = vertex_slot(rhs);
        return n;
    }

    std::unique_ptr<Node> parse_builtin()
    {
        auto at = lex_.take();
        auto name = expect(Tok::Ident, "a builtin name after '@'");
        auto index = find_builtin(name.text);
        if (!index) {
            throw ParseError("unknown builtin '@" + name.text + "'", name.pos);
        }
        const auto& spec = builtin_registry()[*index];
        auto n = make(NodeKind::Builtin);
        n->name = name.text;
        n->builtin = *index;
        n->params = spec.defaults;
        expect(Tok::LParen, "'(' after builtin name");

        std::vector<Token> first_tokens;
        if (lex_.peek().kind != Tok::RParen && lex_.peek().kind != Tok::Semicolon) {
            while (true) {
                std::vector<Token> parts{expect(Tok::Ident, "a variable")};
                while (lex_.peek().kind == Tok::Plus) {
                    lex_.take();
                    parts.push_back(expect(Tok::Ident, "a set variable after '+'"));
                }
                first_tokens.push_back(parts.front());
                auto position = n->args.size();
                auto kind = position < spec.args.size() ? spec.args[position]
                            : spec.variadic                ? spec.args.back()
                                                           : ArgKind::Set;
                BuiltinArg arg;
                arg.is_vertex = kind == ArgKind::Vertex;
                if (arg.is_vertex && parts.size() > 1) {
                    throw ParseError("a vertex argument cannot be a union", parts[1].pos);
                }
                for (const auto& p : parts) {
                    arg.slots.push_back(arg.is_vertex ? vertex_slot(p) : set_slot(p));
                }
                n->args.push_back(std::move(arg));
                if (lex_.peek().kind != Tok::Comma) {
                    break;
                }
                lex_.take();
            }
        }
        auto count = n->args.size();
        if (spec.variadic ? count < spec.args.size() : count != spec.args.size()) {
            throw ParseError("@" + spec.name + " expects " + (spec.variadic ? "at least " : "") +
                                 std::to_string(spec.args.size()) + " argument(s), got " + std::to_string(count),
                             at.pos);
        }
        if (lex_.peek().kind == Tok::Semicolon) {
            lex_.take();
            while (true) {
                auto key = expect(Tok::Ident, "a parameter name");
                if (!spec.defaults.contains(key.text)) {
                    throw ParseError("@" + spec.name + " has no parameter '" + key.text + "'", key.pos);
                }
                expect(Tok::Equal, "'=' after parameter name");
                auto value = expect(Tok::Number, "an integer parameter value");
                long v = 0;
                auto [ptr, ec] = std::from_chars(value.text.data(), value.text.data() + value.text.size(), v);
                if (ec != std::errc{} || ptr != value.text.data() + value.text.size()) {
                    throw ParseError("bad integer '" + value.text + "'", value.pos);
                }
                n->params[key.text] = v;
                if (lex_.peek().kind != Tok::Comma) {
                    break;
                }
                lex_.take();
            }
        }
        expect(Tok::RParen, "')' closing the builtin call");
        return n;
    }

    void classify(const Node& n, bool prefix)
    {
        if (n.kind == NodeKind::ExistsSet) {
            formula_.first_order_ = false;
            if (!prefix) {
                formula_.emso_ = false;
            }
            classify(*n.children.front(), prefix);
            return;
        }
        for (const auto& c : n.children) {
            classify(*c, false);
        }
    }

    Lexer lex_;
    Formula formula_;
    std::vector<Binding> scope_;
};

Formula parse_formula(std::string_view text, const ParseOptions& options)
{
    FormulaParser parser(text, options);
    return parser.parse();
}

namespace {

void render(const Formula& f, const Node& n, std::string& out)
{
    auto vname = [&](std::size_t slot) { return f.vertex_names()[slot]; };
    auto sname = [&](std::size_t slot) { return f.set_names()[slot]; };
    switch (n.kind) {
    case NodeKind::True: out += "true"; return;
    case NodeKind::False: out += "false"; return;
    case NodeKind::Exists:
    case NodeKind::Forall:
    case NodeKind::ExistsSet:
        out += n.kind == NodeKind::Exists ? "EX " : n.kind == NodeKind::Forall ? "ALL " : "EXSET ";
        out += n.name;
        out += " (";
        render(f, *n.children.front(), out);
        out += ")";
        return;
    case NodeKind::Not:
        out += "!(";
        render(f, *n.children.front(), out);
        out += ")";
        return;
    case NodeKind::And:
    case NodeKind::Or:
    case NodeKind::Implies:
    case NodeKind::Iff: {
        const char* op = n.kind == NodeKind::And ? " & " : n.kind == NodeKind::Or ? " | " : n.kind == NodeKind::Implies ? " -> " : " <-> ";
        out += "(";
        render(f, *n.children[0], out);
        out += op;
        render(f, *n.children[1], out);
        out += ")";
        return;
    }
    case NodeKind::Adjacent: out += vname(n.slot) + " ~ " + vname(n.slot2); return;
    case NodeKind::Equal: out += vname(n.slot) + " = " + vname(n.slot2); return;
    case NodeKind::Member: out += vname(n.slot) + " in " + sname(n.slot2); return;
    case NodeKind::Builtin: {
        out += "@" + n.name + "(";
        for (std::size_t k = 0; k < n.args.size(); ++k) {
            if (k > 0) {
                out += ", ";
            }
            for (std::size_t t = 0; t < n.args[k].slots.size(); ++t) {
                if (t > 0) {
                    out += " + ";
                }
                out += n.args[k].is_vertex ? vname(n.args[k].slots[t]) : sname(n.args[k].slots[t]);
            }
        }
        if (!n.params.empty()) {
            out += "; ";
            bool first = true;
            for (const auto& [k, v] : n.params) {
                out += (first ? "" : ", ") + k + "=" + std::to_string(v);
                first = false;
            }
        }
        out += ")";
        return;
    }
    }
}

} // namespace

std::string Formula::to_string() const
{
    std::string out;
    render(*this, *root_, out);
    return out;
}

} // namespace emso
