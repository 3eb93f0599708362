#include "rrlab/script.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rrlab {

namespace {

enum class Tok { ident, number, symbol, option, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    long value = 0;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : s_(text) { advance(); }

    const Token& peek() const { return cur_; }
    Token next() {
        Token t = cur_;
        advance();
        return t;
    }

    struct State {
        std::size_t pos;
        int line, col;
        Token cur;
    };
    State save() const { return {pos_, line_, col_, cur_}; }
    void restore(const State& s) {
        pos_ = s.pos;
        line_ = s.line;
        col_ = s.col;
        cur_ = s.cur;
    }

private:
    void advance() {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
            } else if (c == '\n') {
                ++pos_;
                ++line_;
                col_ = 1;
            } else if (c == ' ' || c == '\t' || c == '\r') {
                ++pos_;
                ++col_;
            } else {
                break;
            }
        }
        cur_ = Token{};
        cur_.line = line_;
        cur_.col = col_;
        if (pos_ >= s_.size()) {
            cur_.kind = Tok::end;
            return;
        }
        char c = s_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                take();
            cur_.kind = Tok::ident;
            cur_.text = s_.substr(start, pos_ - start);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) take();
            cur_.kind = Tok::number;
            cur_.text = s_.substr(start, pos_ - start);
            cur_.value = std::stol(cur_.text);
            return;
        }
        if (c == '-' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '-') {
            take();
            take();
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                take();
            cur_.kind = Tok::option;
            cur_.text = s_.substr(start, pos_ - start);
            return;
        }
        static const std::string symbols = "()<>[],;=/+-*^";
        if (symbols.find(c) != std::string::npos) {
            cur_.kind = Tok::symbol;
            cur_.text = std::string(1, c);
            take();
            return;
        }
        throw parse_error(line_, col_, std::string("unexpected character '") + c + "'");
    }

    void take() {
        ++pos_;
        ++col_;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token cur_;
};

struct RingInfo {
    Field field;
    std::vector<std::string> vars;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    SessionScript parse() {
        SessionScript script;
        while (lex_.peek().kind != Tok::end) {
            const Token& t = lex_.peek();
            if (t.kind != Tok::ident)
                throw parse_error(t.line, t.col, "expected a declaration or command");
            if (t.text == "ring") {
                script.statements.push_back(parse_ring());
            } else if (t.text == "module") {
                script.statements.push_back(parse_module());
            } else {
                script.statements.push_back(parse_command());
            }
        }
        return script;
    }

private:
    Token expect_symbol(const std::string& s) {
        Token t = lex_.next();
        if (t.kind != Tok::symbol || t.text != s)
            throw parse_error(t.line, t.col, "expected '" + s + "'");
        return t;
    }

    Token expect_ident() {
        Token t = lex_.next();
        if (t.kind != Tok::ident) throw parse_error(t.line, t.col, "expected an identifier");
        return t;
    }

    Token expect_number() {
        Token t = lex_.next();
        if (t.kind != Tok::number) throw parse_error(t.line, t.col, "expected a number");
        return t;
    }

    bool at_symbol(const std::string& s) const {
        return lex_.peek().kind == Tok::symbol && lex_.peek().text == s;
    }

    // ---- polynomial expressions ----

    std::size_t var_index(const RingInfo& ri, const Token& t) {
        for (std::size_t i = 0; i < ri.vars.size(); ++i)
            if (ri.vars[i] == t.text) return i;
        throw parse_error(t.line, t.col, "unknown variable '" + t.text + "'");
    }

    Polynomial parse_base(const RingInfo& ri) {
        const MonomialOrder ord = MonomialOrder::degrevlex();
        Token t = lex_.next();
        if (t.kind == Tok::ident) {
            std::size_t i = var_index(ri, t);
            return Polynomial::term(Monomial::variable(ri.vars.size(), i), Scalar::one(ri.field), ord);
        }
        if (t.kind == Tok::number)
            return Polynomial::constant(ri.field, t.value, ri.vars.size(), ord);
        if (t.kind == Tok::symbol && t.text == "(") {
            Polynomial p = parse_expr(ri);
            expect_symbol(")");
            return p;
        }
        throw parse_error(t.line, t.col, "expected a polynomial factor");
    }

    Polynomial parse_factor(const RingInfo& ri) {
        const MonomialOrder ord = MonomialOrder::degrevlex();
        Polynomial base = parse_base(ri);
        if (at_symbol("^")) {
            lex_.next();
            Token e = expect_number();
            Polynomial acc = Polynomial::constant(ri.field, 1, ri.vars.size(), ord);
            for (long i = 0; i < e.value; ++i) acc = poly_mul(acc, base, ord);
            return acc;
        }
        return base;
    }

    Polynomial parse_term(const RingInfo& ri) {
        const MonomialOrder ord = MonomialOrder::degrevlex();
        Polynomial p = parse_factor(ri);
        while (true) {
            if (at_symbol("*")) {
                lex_.next();
                p = poly_mul(p, parse_factor(ri), ord);
            } else if (at_symbol("/")) {
                lex_.next();
                Token d = expect_number();
                if (d.value == 0) throw parse_error(d.line, d.col, "division by zero");
                p = poly_scale(p, Scalar::of(ri.field, mpz_class(1), mpz_class(d.value)), ord);
            } else {
                break;
            }
        }
        return p;
    }

    Polynomial parse_expr(const RingInfo& ri) {
        const MonomialOrder ord = MonomialOrder::degrevlex();
        bool neg = false;
        if (at_symbol("-")) {
            lex_.next();
            neg = true;
        }
        Polynomial p = parse_term(ri);
        if (neg) p = poly_neg(p, ord);
        while (at_symbol("+") || at_symbol("-")) {
            bool minus = lex_.peek().text == "-";
            lex_.next();
            Polynomial q = parse_term(ri);
            p = minus ? poly_sub(p, q, ord) : poly_add(p, q, ord);
        }
        return p;
    }

    Polynomial parse_homogeneous(const RingInfo& ri, const char* what) {
        const Token& start = lex_.peek();
        int line = start.line, col = start.col;
        Polynomial p = parse_expr(ri);
        if (!p.is_zero() && !p.is_homogeneous())
            throw parse_error(line, col, std::string("inhomogeneous ") + what + " at " +
                                             std::to_string(line) + ":" + std::to_string(col));
        return p;
    }

    // ---- declarations ----

    Statement parse_ring() {
        Token kw = lex_.next(); // "ring"
        Token name = expect_ident();
        if (names_.count(name.text))
            throw parse_error(name.line, name.col, "name '" + name.text + "' already declared");
        expect_symbol("=");
        Token poly_kw = expect_ident();
        if (poly_kw.text != "poly") throw parse_error(poly_kw.line, poly_kw.col, "expected 'poly'");
        expect_symbol("(");
        Token f = expect_ident();
        Field field;
        if (f.text == "Q") {
            field = Field::rationals();
        } else if (f.text == "Fp") {
            expect_symbol("<");
            Token p = expect_number();
            try {
                field = Field::prime(static_cast<std::uint32_t>(p.value));
            } catch (const std::invalid_argument& ex) {
                throw parse_error(p.line, p.col, ex.what());
            }
            expect_symbol(">");
        } else {
            throw parse_error(f.line, f.col, "expected field 'Q' or 'Fp<prime>'");
        }
        expect_symbol(";");
        RingInfo ri;
        ri.field = field;
        ri.vars.push_back(expect_ident().text);
        while (at_symbol(",")) {
            lex_.next();
            ri.vars.push_back(expect_ident().text);
        }
        expect_symbol(")");

        RingDecl decl;
        decl.name = name.text;
        decl.field = field;
        decl.vars = ri.vars;
        decl.line = kw.line;
        decl.col = kw.col;
        if (at_symbol("/")) {
            lex_.next();
            expect_symbol("(");
            decl.defining.push_back(parse_homogeneous(ri, "defining ideal generator"));
            while (at_symbol(",")) {
                lex_.next();
                decl.defining.push_back(parse_homogeneous(ri, "defining ideal generator"));
            }
            expect_symbol(")");
        }
        expect_symbol(";");

        try {
            GradedRing::make(field, ri.vars, decl.defining);
        } catch (const algebra_error& ex) {
            throw parse_error(decl.line, decl.col, ex.what());
        }
        rings_[decl.name] = ri;
        names_.insert(decl.name);
        last_ring_ = decl.name;
        return decl;
    }

    Statement parse_module() {
        Token kw = lex_.next(); // "module"
        Token name = expect_ident();
        if (names_.count(name.text))
            throw parse_error(name.line, name.col, "name '" + name.text + "' already declared");
        expect_symbol("=");
        Token ctor = expect_ident();
        ModuleDecl decl;
        decl.name = name.text;
        decl.line = kw.line;
        decl.col = kw.col;
        if (ctor.text == "ideal") decl.kind = ModuleKind::ideal;
        else if (ctor.text == "cyclic") decl.kind = ModuleKind::cyclic;
        else if (ctor.text == "coker") decl.kind = ModuleKind::coker;
        else throw parse_error(ctor.line, ctor.col, "expected ideal(...), cyclic(...) or coker(...)");

        if (last_ring_.empty())
            throw parse_error(kw.line, kw.col, "module declared before any ring");
        // modules bind to the most recent ring unless a trailing 'over'
        // names another one; scan ahead so generators parse in the right ring
        decl.over = last_ring_;
        {
            auto mark = lex_.save();
            while (lex_.peek().kind != Tok::end) {
                Token t = lex_.next();
                if (t.kind == Tok::symbol && t.text == ";") break;
                if (t.kind == Tok::ident && t.text == "over" && lex_.peek().kind == Tok::ident)
                    decl.over = lex_.peek().text;
            }
            lex_.restore(mark);
        }
        auto ring_it = rings_.find(decl.over);
        if (ring_it == rings_.end())
            throw parse_error(kw.line, kw.col, "unknown ring '" + decl.over + "'");
        RingInfo ri = ring_it->second;

        expect_symbol("(");
        if (decl.kind == ModuleKind::coker) {
            expect_symbol("[");
            decl.matrix.push_back(parse_row(ri));
            while (at_symbol(",")) {
                lex_.next();
                decl.matrix.push_back(parse_row(ri));
            }
            expect_symbol("]");
        } else if (!at_symbol(")")) {
            decl.gens.push_back(parse_homogeneous(ri, "generator"));
            while (at_symbol(",")) {
                lex_.next();
                decl.gens.push_back(parse_homogeneous(ri, "generator"));
            }
        }
        expect_symbol(")");
        if (lex_.peek().kind == Tok::ident && lex_.peek().text == "over") {
            lex_.next();
            expect_ident();
        }
        expect_symbol(";");
        modules_[decl.name] = decl.over;
        names_.insert(decl.name);
        return decl;
    }

    std::vector<Polynomial> parse_row(const RingInfo& ri) {
        expect_symbol("[");
        std::vector<Polynomial> row;
        row.push_back(parse_expr(ri));
        while (at_symbol(",")) {
            lex_.next();
            row.push_back(parse_expr(ri));
        }
        expect_symbol("]");
        return row;
    }

    Statement parse_command() {
        static const std::vector<std::string> verbs = {"power",  "rr",     "rho",     "superficial",
                                                       "mfull",  "split",  "graded",  "resolve",
                                                       "depth",  "projdim", "reg",    "gdim",
                                                       "regcrit", "checks"};
        Token verb = expect_ident();
        if (std::find(verbs.begin(), verbs.end(), verb.text) == verbs.end())
            throw parse_error(verb.line, verb.col, "unknown command '" + verb.text + "'");
        Command cmd;
        cmd.verb = verb.text;
        cmd.line = verb.line;
        cmd.col = verb.col;
        while (!at_symbol(";")) {
            const Token& t = lex_.peek();
            if (t.kind == Tok::ident) {
                Token id = lex_.next();
                if (id.text == "in") continue;
                if (!names_.count(id.text))
                    throw parse_error(id.line, id.col, "unknown name '" + id.text + "'");
                cmd.names.push_back(id.text);
            } else if (t.kind == Tok::number) {
                Token n = lex_.next();
                cmd.index = static_cast<int>(n.value);
            } else if (t.kind == Tok::option) {
                Token opt = lex_.next();
                if (opt.text == "with") {
                    if (cmd.names.empty())
                        throw parse_error(opt.line, opt.col, "--with needs a module name first");
                    cmd.with = parse_expr(ring_of(cmd.names.front(), opt));
                } else if (opt.text == "mode") {
                    Token m = expect_ident();
                    if (m.text != "chain" && m.text != "certified")
                        throw parse_error(m.line, m.col, "mode must be chain or certified");
                    cmd.str_opts["mode"] = m.text;
                } else if (opt.text == "ambient" || opt.text == "evidence") {
                    cmd.int_opts[opt.text] = 1;
                } else if (opt.text == "length" || opt.text == "nmax" || opt.text == "bound") {
                    Token n = expect_number();
                    cmd.int_opts[opt.text] = static_cast<int>(n.value);
                } else {
                    throw parse_error(opt.line, opt.col, "unknown option '--" + opt.text + "'");
                }
            } else if (t.kind == Tok::end) {
                throw parse_error(t.line, t.col, "unterminated command, expected ';'");
            } else {
                throw parse_error(t.line, t.col, "unexpected token in command");
            }
        }
        expect_symbol(";");
        return cmd;
    }

    RingInfo ring_of(const std::string& name, const Token& at) {
        if (rings_.count(name)) return rings_.at(name);
        auto it = modules_.find(name);
        if (it != modules_.end()) return rings_.at(it->second);
        throw parse_error(at.line, at.col, "unknown name '" + name + "'");
    }

    Lexer lex_;
    std::map<std::string, RingInfo> rings_;
    std::map<std::string, std::string> modules_; // module -> ring
    std::set<std::string> names_;
    std::string last_ring_;
};

} // namespace

SessionScript parse_script(const std::string& text) {
    return Parser(text).parse();
}

std::string pretty_print(const SessionScript& script) {
    std::ostringstream os;
    std::map<std::string, std::vector<std::string>> ring_vars;
    std::map<std::string, std::string> module_ring;
    for (auto& st : script.statements) {
        if (auto* r = std::get_if<RingDecl>(&st)) {
            os << "ring " << r->name << " = poly(";
            os << (r->field.is_prime_field() ? "Fp<" + std::to_string(r->field.characteristic()) + ">"
                                             : std::string("Q"));
            os << "; ";
            for (std::size_t i = 0; i < r->vars.size(); ++i) {
                if (i) os << ", ";
                os << r->vars[i];
            }
            os << ")";
            if (!r->defining.empty()) {
                os << " / (";
                for (std::size_t i = 0; i < r->defining.size(); ++i) {
                    if (i) os << ", ";
                    os << r->defining[i].str(r->vars);
                }
                os << ")";
            }
            os << ";\n";
            ring_vars[r->name] = r->vars;
        } else if (auto* m = std::get_if<ModuleDecl>(&st)) {
            const auto& vars = ring_vars.at(m->over);
            os << "module " << m->name << " = ";
            if (m->kind == ModuleKind::ideal) os << "ideal(";
            else if (m->kind == ModuleKind::cyclic) os << "cyclic(";
            else os << "coker([";
            if (m->kind == ModuleKind::coker) {
                for (std::size_t r = 0; r < m->matrix.size(); ++r) {
                    if (r) os << ", ";
                    os << "[";
                    for (std::size_t c = 0; c < m->matrix[r].size(); ++c) {
                        if (c) os << ", ";
                        os << m->matrix[r][c].str(vars);
                    }
                    os << "]";
                }
                os << "]";
            } else {
                for (std::size_t i = 0; i < m->gens.size(); ++i) {
                    if (i) os << ", ";
                    os << m->gens[i].str(vars);
                }
            }
            os << ") over " << m->over << ";\n";
            module_ring[m->name] = m->over;
        } else if (auto* c = std::get_if<Command>(&st)) {
            os << c->verb;
            bool first_name = true;
            for (auto& n : c->names) {
                if (!first_name && (c->verb == "mfull" || c->verb == "split")) os << " in";
                os << " " << n;
                first_name = false;
            }
            if (c->index) os << " " << *c->index;
            for (auto& [k, v] : c->int_opts) {
                if (k == "ambient" || k == "evidence") os << " --" << k;
                else os << " --" << k << " " << v;
            }
            for (auto& [k, v] : c->str_opts) os << " --" << k << " " << v;
            if (c->with) {
                std::string owner = c->names.empty() ? "" : c->names.front();
                std::string ring = module_ring.count(owner) ? module_ring[owner] : owner;
                os << " --with " << c->with->str(ring_vars.at(ring));
            }
            os << ";\n";
        }
    }
    return os.str();
}

} // namespace rrlab
