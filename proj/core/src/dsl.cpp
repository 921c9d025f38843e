#include "computon/dsl.hpp"

#include <cctype>
#include <sstream>

namespace computon::dsl {

std::string Diagnostic::to_string() const {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

const Declaration* SourceDocument::find(const std::string& name) const {
    for (const Declaration& d : declarations)
        if (d.name == name)
            return &d;
    return nullptr;
}

namespace {

const Declaration& require(const SourceDocument& doc, const std::string& name,
                           Declaration::Kind kind, const char* what) {
    const Declaration* d = doc.find(name);
    if (!d || d->kind != kind)
        throw ElementNotFoundError("document has no " + std::string(what) + " named '" + name + "'");
    return *d;
}

} // namespace

const Computon& SourceDocument::computon(const std::string& name) const {
    return require(*this, name, Declaration::Kind::computon, "computon").computon;
}
const ComputonMorphism& SourceDocument::morphism(const std::string& name) const {
    return require(*this, name, Declaration::Kind::morphism, "morphism").morphism;
}
const Span& SourceDocument::span(const std::string& name) const {
    return require(*this, name, Declaration::Kind::span, "span").span;
}
const MarkedComputon& SourceDocument::marking(const std::string& name) const {
    return require(*this, name, Declaration::Kind::marking, "marking").marking;
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok {
    ident,
    string,
    nat,
    lbrace,
    rbrace,
    colon,
    semi,
    comma,
    arrow,   // ->
    darrow,  // =>
    equals,  // =
    eof,
};

struct Token {
    Tok kind = Tok::eof;
    std::string text;
    unsigned long number = 0;
    std::size_t line = 1, column = 1;
};

struct LexError {
    Diagnostic diagnostic;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        skip_space();
        Token t;
        t.line = line_;
        t.column = column_;
        if (pos_ >= text_.size()) {
            t.kind = Tok::eof;
            return t;
        }
        char c = text_[pos_];
        if (c == '{') return punct(t, Tok::lbrace);
        if (c == '}') return punct(t, Tok::rbrace);
        if (c == ':') return punct(t, Tok::colon);
        if (c == ';') return punct(t, Tok::semi);
        if (c == ',') return punct(t, Tok::comma);
        if (c == '-') {
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
                advance();
                advance();
                t.kind = Tok::arrow;
                return t;
            }
            throw LexError{{line_, column_, "stray '-'; expected '->'"}};
        }
        if (c == '=') {
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
                advance();
                advance();
                t.kind = Tok::darrow;
                return t;
            }
            advance();
            t.kind = Tok::equals;
            return t;
        }
        if (c == '"') {
            advance();
            std::string out;
            while (pos_ < text_.size() && text_[pos_] != '"') {
                char d = text_[pos_];
                if (d == '\\') {
                    advance();
                    if (pos_ >= text_.size())
                        throw LexError{{line_, column_, "unterminated escape in string"}};
                    d = text_[pos_];
                }
                out.push_back(d);
                advance();
            }
            if (pos_ >= text_.size())
                throw LexError{{t.line, t.column, "unterminated string"}};
            advance();  // closing quote
            t.kind = Tok::string;
            t.text = out;
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string out;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                out.push_back(text_[pos_]);
                advance();
            }
            t.kind = Tok::nat;
            t.text = out;
            t.number = std::stoul(out);
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string out;
            while (pos_ < text_.size()) {
                char d = text_[pos_];
                if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '.') {
                    out.push_back(d);
                    advance();
                } else {
                    break;
                }
            }
            t.kind = Tok::ident;
            t.text = out;
            return t;
        }
        throw LexError{{line_, column_, std::string("unexpected character '") + c + "'"}};
    }

private:
    Token punct(Token t, Tok kind) {
        advance();
        t.kind = kind;
        return t;
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1, column_ = 1;
};

// ---------------------------------------------------------------------------
// Parser

struct ParseFailure {
    Diagnostic diagnostic;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lexer_(text) { shift(); }

    SourceDocument document() {
        SourceDocument doc;
        if (current_.kind == Tok::eof)
            fail("empty document");
        while (current_.kind != Tok::eof) {
            Declaration d = declaration(doc);
            if (doc.find(d.name))
                fail("duplicate declaration name '" + d.name + "'");
            doc.declarations.push_back(std::move(d));
        }
        return doc;
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseFailure{{current_.line, current_.column, message}};
    }
    [[noreturn]] void fail_at(const Token& t, const std::string& message) const {
        throw ParseFailure{{t.line, t.column, message}};
    }

    void shift() {
        current_ = lexer_.next();
    }

    Token expect(Tok kind, const char* what) {
        if (current_.kind != kind)
            fail(std::string("expected ") + what);
        Token t = current_;
        shift();
        return t;
    }

    bool at_keyword(const char* kw) const {
        return current_.kind == Tok::ident && current_.text == kw;
    }

    void expect_keyword(const char* kw) {
        if (!at_keyword(kw))
            fail(std::string("expected '") + kw + "'");
        shift();
    }

    std::string name(const char* what) {
        if (current_.kind != Tok::ident && current_.kind != Tok::string)
            fail(std::string("expected ") + what);
        std::string out = current_.text;
        shift();
        return out;
    }

    unsigned long nat(const char* what) {
        Token t = expect(Tok::nat, what);
        return t.number;
    }

    bool list_done() const { return current_.kind == Tok::semi; }

    void list_separator() {
        if (current_.kind == Tok::comma)
            shift();
    }

    Declaration declaration(const SourceDocument& doc) {
        if (at_keyword("computon"))
            return computon_block();
        if (at_keyword("morphism"))
            return morphism_block(doc);
        if (at_keyword("span"))
            return span_block(doc);
        if (at_keyword("marking"))
            return marking_block(doc);
        fail("expected 'computon', 'morphism', 'span' or 'marking'");
    }

    void section_header(const char* kw) {
        expect_keyword(kw);
        expect(Tok::colon, "':'");
    }

    Declaration computon_block() {
        Declaration d;
        d.kind = Declaration::Kind::computon;
        d.line = current_.line;
        shift();  // computon
        d.name = name("computon name");
        expect(Tok::lbrace, "'{'");

        section_header("colours");
        while (!list_done()) {
            d.computon.add_colour(Colour{static_cast<unsigned>(nat("colour"))});
            list_separator();
        }
        expect(Tok::semi, "';'");

        section_header("ports");
        while (!list_done()) {
            Token at = current_;
            std::string port = name("port name");
            expect(Tok::colon, "':' after port name");
            unsigned long colour = nat("port colour");
            try {
                d.computon.add_port(port, Colour{static_cast<unsigned>(colour)});
            } catch (const MalformedInputError& e) {
                fail_at(at, e.what());
            }
            list_separator();
        }
        expect(Tok::semi, "';'");

        section_header("units");
        while (!list_done()) {
            Token at = current_;
            try {
                d.computon.add_unit(name("unit name"));
            } catch (const MalformedInputError& e) {
                fail_at(at, e.what());
            }
            list_separator();
        }
        expect(Tok::semi, "';'");

        section_header("edges");
        std::size_t next_e = 1, next_f = 1;
        while (!list_done()) {
            Token at = current_;
            std::string first = name("edge name or endpoint");
            std::string label;
            std::string from;
            if (current_.kind == Tok::colon) {
                shift();
                label = first;
                from = name("edge endpoint");
            } else {
                from = first;
            }
            expect(Tok::arrow, "'->'");
            std::string to = name("edge endpoint");

            bool from_port = d.computon.has_port(from), from_unit = d.computon.has_unit(from);
            bool to_port = d.computon.has_port(to), to_unit = d.computon.has_unit(to);
            if (!from_port && !from_unit)
                fail_at(at, "unknown edge endpoint '" + from + "'");
            if (!to_port && !to_unit)
                fail_at(at, "unknown edge endpoint '" + to + "'");
            try {
                if (from_port && to_unit) {
                    if (label.empty())
                        label = fresh_edge_name("f", next_f, d.computon);
                    d.computon.add_in_edge(label, from, to);
                } else if (from_unit && to_port) {
                    if (label.empty())
                        label = fresh_edge_name("e", next_e, d.computon);
                    d.computon.add_out_edge(label, from, to);
                } else {
                    fail_at(at, "edge must connect a port and a unit");
                }
            } catch (const MalformedInputError& e) {
                fail_at(at, e.what());
            }
            list_separator();
        }
        expect(Tok::semi, "';'");
        expect(Tok::rbrace, "'}'");
        return d;
    }

    static std::string fresh_edge_name(const char* prefix, std::size_t& counter, const Computon& c) {
        for (;;) {
            std::string candidate = prefix + std::to_string(counter++);
            if (prefix[0] == 'e' ? !c.has_out_edge(candidate) : !c.has_in_edge(candidate))
                return candidate;
        }
    }

    Declaration morphism_block(const SourceDocument& doc) {
        Declaration d;
        d.kind = Declaration::Kind::morphism;
        d.line = current_.line;
        shift();  // morphism
        d.name = name("morphism name");
        expect(Tok::colon, "':'");
        Token src_at = current_;
        d.source_name = name("source computon name");
        expect(Tok::arrow, "'->'");
        Token dst_at = current_;
        d.target_name = name("target computon name");

        const Declaration* src = doc.find(d.source_name);
        if (!src || src->kind != Declaration::Kind::computon)
            fail_at(src_at, "unresolved computon reference '" + d.source_name + "'");
        const Declaration* dst = doc.find(d.target_name);
        if (!dst || dst->kind != Declaration::Kind::computon)
            fail_at(dst_at, "unresolved computon reference '" + d.target_name + "'");
        d.morphism.source = src->computon;
        d.morphism.target = dst->computon;

        expect(Tok::lbrace, "'{'");
        section_header("ports");
        while (!list_done()) {
            Token at = current_;
            std::string from = name("port name");
            expect(Tok::darrow, "'=>'");
            std::string to = name("port name");
            if (!d.morphism.source.has_port(from))
                fail_at(at, "'" + from + "' is not a port of " + d.source_name);
            if (!d.morphism.target.has_port(to))
                fail_at(at, "'" + to + "' is not a port of " + d.target_name);
            d.morphism.port_map[from] = to;
            list_separator();
        }
        expect(Tok::semi, "';'");

        section_header("units");
        while (!list_done()) {
            Token at = current_;
            std::string from = name("unit name");
            expect(Tok::darrow, "'=>'");
            std::string to = name("unit name");
            if (!d.morphism.source.has_unit(from))
                fail_at(at, "'" + from + "' is not a unit of " + d.source_name);
            if (!d.morphism.target.has_unit(to))
                fail_at(at, "'" + to + "' is not a unit of " + d.target_name);
            d.morphism.unit_map[from] = to;
            list_separator();
        }
        expect(Tok::semi, "';'");

        section_header("edges");
        while (!list_done()) {
            Token at = current_;
            std::string from = name("edge name");
            expect(Tok::darrow, "'=>'");
            std::string to = name("edge name");
            bool matched = false;
            if (d.morphism.source.has_out_edge(from) && d.morphism.target.has_out_edge(to)) {
                d.morphism.out_edge_map[from] = to;
                matched = true;
            }
            if (d.morphism.source.has_in_edge(from) && d.morphism.target.has_in_edge(to)) {
                d.morphism.in_edge_map[from] = to;
                matched = true;
            }
            if (!matched)
                fail_at(at, "edge map entry '" + from + " => " + to +
                                "' matches no edge family of the two computons");
            list_separator();
        }
        expect(Tok::semi, "';'");
        expect(Tok::rbrace, "'}'");
        return d;
    }

    Declaration span_block(const SourceDocument& doc) {
        Declaration d;
        d.kind = Declaration::Kind::span;
        d.line = current_.line;
        shift();  // span
        d.name = name("span name");
        expect(Tok::lbrace, "'{'");

        section_header("apex");
        Token apex_at = current_;
        d.apex_name = name("computon name");
        expect(Tok::semi, "';'");
        section_header("left");
        Token left_at = current_;
        d.left_name = name("morphism name");
        expect(Tok::semi, "';'");
        section_header("right");
        Token right_at = current_;
        d.right_name = name("morphism name");
        expect(Tok::semi, "';'");
        expect(Tok::rbrace, "'}'");

        const Declaration* apex = doc.find(d.apex_name);
        if (!apex || apex->kind != Declaration::Kind::computon)
            fail_at(apex_at, "unresolved computon reference '" + d.apex_name + "'");
        const Declaration* left = doc.find(d.left_name);
        if (!left || left->kind != Declaration::Kind::morphism)
            fail_at(left_at, "unresolved morphism reference '" + d.left_name + "'");
        const Declaration* right = doc.find(d.right_name);
        if (!right || right->kind != Declaration::Kind::morphism)
            fail_at(right_at, "unresolved morphism reference '" + d.right_name + "'");
        if (left->source_name != d.apex_name)
            fail_at(left_at, "left leg '" + d.left_name + "' does not start at the apex");
        if (right->source_name != d.apex_name)
            fail_at(right_at, "right leg '" + d.right_name + "' does not start at the apex");

        d.span.apex = apex->computon;
        d.span.left = left->morphism;
        d.span.right = right->morphism;
        return d;
    }

    Declaration marking_block(const SourceDocument& doc) {
        Declaration d;
        d.kind = Declaration::Kind::marking;
        d.line = current_.line;
        shift();  // marking
        d.name = name("marking name");
        expect_keyword("on");
        Token on_at = current_;
        d.on_name = name("computon name");
        const Declaration* on = doc.find(d.on_name);
        if (!on || on->kind != Declaration::Kind::computon)
            fail_at(on_at, "unresolved computon reference '" + d.on_name + "'");

        expect(Tok::lbrace, "'{'");
        while (!list_done()) {
            Token at = current_;
            std::string port = name("port name");
            expect(Tok::equals, "'='");
            unsigned long count = nat("token count");
            if (!on->computon.has_port(port))
                fail_at(at, "'" + port + "' is not a port of " + d.on_name);
            d.counts.emplace_back(port, static_cast<unsigned>(count));
            list_separator();
        }
        expect(Tok::semi, "';'");
        expect(Tok::rbrace, "'}'");

        d.marking = make_marking(on->computon, d.counts);
        return d;
    }

    Lexer lexer_;
    Token current_;
};

} // namespace

ParseResult parse(const std::string& text) {
    ParseResult result;
    try {
        Parser parser(text);
        result.document = parser.document();
    } catch (const LexError& e) {
        result.diagnostics.push_back(e.diagnostic);
    } catch (const ParseFailure& e) {
        result.diagnostics.push_back(e.diagnostic);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Serializer

namespace {

bool plain_name(const std::string& s) {
    if (s.empty())
        return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.')
            return false;
    return true;
}

std::string quoted(const std::string& s) {
    if (plain_name(s))
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

template <typename Range, typename Fn>
void comma_list(std::ostringstream& out, const Range& range, Fn item) {
    bool first = true;
    for (const auto& x : range) {
        if (!first)
            out << ", ";
        item(x);
        first = false;
    }
}

} // namespace

std::string serialize(const Computon& c, const std::string& name) {
    std::ostringstream out;
    out << "computon " << quoted(name) << " {\n";

    out << "  colours: ";
    comma_list(out, c.colours, [&](Colour colour) { out << colour.value; });
    out << ";\n";

    out << "  ports: ";
    comma_list(out, c.ports, [&](const auto& p) { out << quoted(p.first) << ": " << p.second.value; });
    out << ";\n";

    out << "  units: ";
    comma_list(out, c.units, [&](const Id& u) { out << quoted(u); });
    out << ";\n";

    out << "  edges: ";
    bool first = true;
    for (const auto& [id, e] : c.out_edges) {
        out << (first ? "" : ", ") << quoted(id) << ": " << quoted(e.source_unit) << " -> "
            << quoted(e.target_port);
        first = false;
    }
    for (const auto& [id, f] : c.in_edges) {
        out << (first ? "" : ", ") << quoted(id) << ": " << quoted(f.source_port) << " -> "
            << quoted(f.target_unit);
        first = false;
    }
    out << ";\n}\n";
    return out.str();
}

std::string serialize(const ComputonMorphism& m, const std::string& name,
                      const std::string& source_name, const std::string& target_name) {
    std::ostringstream out;
    out << "morphism " << quoted(name) << " : " << quoted(source_name) << " -> "
        << quoted(target_name) << " {\n";
    out << "  ports: ";
    comma_list(out, m.port_map,
               [&](const auto& e) { out << quoted(e.first) << " => " << quoted(e.second); });
    out << ";\n  units: ";
    comma_list(out, m.unit_map,
               [&](const auto& e) { out << quoted(e.first) << " => " << quoted(e.second); });
    out << ";\n  edges: ";
    bool first = true;
    for (const auto& [from, to] : m.out_edge_map) {
        out << (first ? "" : ", ") << quoted(from) << " => " << quoted(to);
        first = false;
    }
    for (const auto& [from, to] : m.in_edge_map) {
        out << (first ? "" : ", ") << quoted(from) << " => " << quoted(to);
        first = false;
    }
    out << ";\n}\n";
    return out.str();
}

std::string serialize(const Span& s, const std::string& name, const std::string& apex_name,
                      const std::string& left_name, const std::string& right_name) {
    (void)s;
    std::ostringstream out;
    out << "span " << quoted(name) << " {\n";
    out << "  apex: " << quoted(apex_name) << ";\n";
    out << "  left: " << quoted(left_name) << ";\n";
    out << "  right: " << quoted(right_name) << ";\n";
    out << "}\n";
    return out.str();
}

std::string serialize(const MarkedComputon& m, const std::string& name,
                      const std::string& computon_name) {
    std::ostringstream out;
    out << "marking " << quoted(name) << " on " << quoted(computon_name) << " {\n  ";
    comma_list(out, m.queues, [&](const auto& q) {
        out << quoted(q.first) << " = " << q.second.size();
    });
    out << ";\n}\n";
    return out.str();
}

std::string serialize(const SourceDocument& doc) {
    std::ostringstream out;
    bool first = true;
    for (const Declaration& d : doc.declarations) {
        if (!first)
            out << "\n";
        first = false;
        switch (d.kind) {
        case Declaration::Kind::computon:
            out << serialize(d.computon, d.name);
            break;
        case Declaration::Kind::morphism:
            out << serialize(d.morphism, d.name, d.source_name, d.target_name);
            break;
        case Declaration::Kind::span:
            out << serialize(d.span, d.name, d.apex_name, d.left_name, d.right_name);
            break;
        case Declaration::Kind::marking:
            out << serialize(d.marking, d.name, d.on_name);
            break;
        }
    }
    return out.str();
}

} // namespace computon::dsl
