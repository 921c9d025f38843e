#include "computon/dot.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "computon/interface.hpp"

namespace computon::dot {

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string port_node(const Id& p) { return quote("port_" + p); }
std::string unit_node(const Id& u) { return quote("unit_" + u); }

std::string port_label(const Computon& c, const Id& p, std::size_t tokens) {
    // Ports are labelled by colour; the control colour is left implicit.
    Colour colour = c.colour_of(p);
    std::string label = colour.is_control() ? "" : std::to_string(colour.value);
    if (tokens > 0) {
        if (!label.empty())
            label += " ";
        label += "*" + std::to_string(tokens);
    }
    return label;
}

std::string emit(const Computon& c, const MarkedComputon* marking, Syntax syntax,
                 const std::string& name) {
    std::ostringstream out;
    out << "digraph " << quote(name) << " {\n";
    out << "  rankdir=LR;\n";

    auto tokens_on = [&](const Id& p) -> std::size_t {
        return marking ? marking->tokens_on(p) : 0;
    };

    if (syntax == Syntax::petri) {
        for (const auto& [p, colour] : c.ports) {
            out << "  " << port_node(p) << " [shape=circle, label="
                << quote(std::to_string(colour.value) +
                         (tokens_on(p) ? " *" + std::to_string(tokens_on(p)) : ""))
                << ", xlabel=" << quote(p) << "];\n";
        }
        for (const Id& u : c.units) {
            out << "  " << unit_node(u)
                << " [shape=box, style=filled, fillcolor=black, width=0.08, height=0.5, label=\"\""
                << ", xlabel=" << quote(u) << "];\n";
        }
        for (const auto& [id, f] : c.in_edges)
            out << "  " << port_node(f.source_port) << " -> " << unit_node(f.target_unit) << ";\n";
        for (const auto& [id, e] : c.out_edges)
            out << "  " << unit_node(e.source_unit) << " -> " << port_node(e.target_port) << ";\n";
    } else {
        for (const auto& [p, colour] : c.ports) {
            PortClass cls = port_class(c, p);
            const char* shape = cls.kind == PortKind::control ? "square" : "circle";
            const char* fill = "gray";  // e-inoutports and i-ports
            const char* fontcolor = "black";
            if (cls.direction == PortDirection::e_inport) {
                fill = "white";
            } else if (cls.direction == PortDirection::e_outport) {
                fill = "black";
                fontcolor = "white";
            }
            out << "  " << port_node(p) << " [shape=" << shape << ", style=filled, fillcolor="
                << fill << ", fontcolor=" << fontcolor << ", label="
                << quote(port_label(c, p, tokens_on(p))) << ", xlabel=" << quote(p) << "];\n";
        }
        for (const Id& u : c.units) {
            out << "  " << unit_node(u) << " [shape=box, style=filled, fillcolor=white, label="
                << quote(u) << "];\n";
        }
        // An edge carries control when its port endpoint is colour 0.
        for (const auto& [id, f] : c.in_edges) {
            bool control = c.colour_of(f.source_port).is_control();
            out << "  " << port_node(f.source_port) << " -> " << unit_node(f.target_unit)
                << (control ? " [style=dashed];" : " [style=solid];") << "\n";
        }
        for (const auto& [id, e] : c.out_edges) {
            bool control = c.colour_of(e.target_port).is_control();
            out << "  " << unit_node(e.source_unit) << " -> " << port_node(e.target_port)
                << (control ? " [style=dashed];" : " [style=solid];") << "\n";
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace

std::string export_dot(const Computon& c, Syntax syntax, const std::string& name) {
    return emit(c, nullptr, syntax, name);
}

std::string export_dot(const MarkedComputon& m, Syntax syntax, const std::string& name) {
    return emit(m.computon, &m, syntax, name);
}

// ---------------------------------------------------------------------------
// Validator

namespace {

struct DotToken {
    enum Kind { id, punct, end } kind = end;
    std::string text;  // for id
    char c = 0;        // for punct
};

class DotScanner {
public:
    explicit DotScanner(const std::string& text) : text_(text) {}

    bool next(DotToken& t) {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ >= text_.size()) {
            t = {DotToken::end, "", 0};
            return true;
        }
        char c = text_[pos_];
        if (c == '"') {
            ++pos_;
            std::string s;
            while (pos_ < text_.size() && text_[pos_] != '"') {
                if (text_[pos_] == '\\') {
                    ++pos_;
                    if (pos_ >= text_.size())
                        return false;
                }
                s.push_back(text_[pos_++]);
            }
            if (pos_ >= text_.size())
                return false;  // unbalanced quote
            ++pos_;
            t = {DotToken::id, s, 0};
            return true;
        }
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
            std::string s;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                    text_[pos_] == '.'))
                s.push_back(text_[pos_++]);
            t = {DotToken::id, s, 0};
            return true;
        }
        if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            pos_ += 2;
            t = {DotToken::punct, "", '>'};
            return true;
        }
        if (c == '{' || c == '}' || c == '[' || c == ']' || c == '=' || c == ',' || c == ';') {
            ++pos_;
            t = {DotToken::punct, "", c};
            return true;
        }
        return false;  // stray character
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

bool is_valid_dot(const std::string& text) {
    DotScanner scanner(text);
    std::vector<DotToken> tokens;
    DotToken t;
    do {
        if (!scanner.next(t))
            return false;
        tokens.push_back(t);
    } while (t.kind != DotToken::end);

    std::size_t i = 0;
    auto is_id = [&](std::size_t k) { return k < tokens.size() && tokens[k].kind == DotToken::id; };
    auto is_punct = [&](std::size_t k, char c) {
        return k < tokens.size() && tokens[k].kind == DotToken::punct && tokens[k].c == c;
    };

    if (!is_id(i) || tokens[i].text != "digraph")
        return false;
    ++i;
    if (is_id(i))
        ++i;  // optional graph name
    if (!is_punct(i, '{'))
        return false;
    ++i;

    auto attr_list = [&]() {
        if (!is_punct(i, '['))
            return true;  // absent
        ++i;
        while (!is_punct(i, ']')) {
            if (!is_id(i))
                return false;
            ++i;
            if (!is_punct(i, '='))
                return false;
            ++i;
            if (!is_id(i))
                return false;
            ++i;
            if (is_punct(i, ','))
                ++i;
        }
        ++i;  // ]
        return true;
    };

    while (!is_punct(i, '}')) {
        if (!is_id(i))
            return false;
        ++i;
        if (is_punct(i, '=')) {  // graph attribute: key=value;
            ++i;
            if (!is_id(i))
                return false;
            ++i;
        } else if (is_punct(i, '>')) {  // edge: a -> b [attrs];
            ++i;
            if (!is_id(i))
                return false;
            ++i;
            if (!attr_list())
                return false;
        } else {  // node: a [attrs];
            if (!attr_list())
                return false;
        }
        if (!is_punct(i, ';'))
            return false;
        ++i;
    }
    ++i;  // }
    return i < tokens.size() && tokens[i].kind == DotToken::end;
}

} // namespace computon::dot
