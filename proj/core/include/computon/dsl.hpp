#ifndef COMPUTON_DSL_HPP
#define COMPUTON_DSL_HPP

#include <optional>
#include <string>
#include <vector>

#include "computon/compose.hpp"
#include "computon/morphism.hpp"
#include "computon/semantics.hpp"

namespace computon::dsl {

struct Diagnostic {
    std::size_t line = 0;
    std::size_t column = 0;
    std::string message;

    std::string to_string() const;
};

// One named block of a document. Referenced declarations are resolved at
// parse time and embedded by value, so a Declaration stands on its own; the
// referenced names are kept for serialization.
struct Declaration {
    enum class Kind { computon, morphism, span, marking };

    Kind kind = Kind::computon;
    std::string name;
    std::size_t line = 0;

    Computon computon;           // kind == computon
    ComputonMorphism morphism;   // kind == morphism
    Span span;                   // kind == span
    MarkedComputon marking;      // kind == marking

    std::string source_name, target_name;          // morphism
    std::string apex_name, left_name, right_name;  // span
    std::string on_name;                           // marking
    std::vector<std::pair<Id, unsigned>> counts;   // marking, as written
};

struct SourceDocument {
    std::vector<Declaration> declarations;

    const Declaration* find(const std::string& name) const;
    bool has(const std::string& name) const { return find(name) != nullptr; }

    // Typed lookups; throw ElementNotFoundError on a missing or
    // differently-kinded declaration.
    const Computon& computon(const std::string& name) const;
    const ComputonMorphism& morphism(const std::string& name) const;
    const Span& span(const std::string& name) const;
    const MarkedComputon& marking(const std::string& name) const;
};

struct ParseResult {
    std::optional<SourceDocument> document;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return document.has_value(); }
};

// Grammar, one declaration per block, lists comma-separated and
// ';'-terminated, '#' starts a comment:
//
//   computon NAME { colours: 0, 1; ports: p: 0; units: u; edges: p -> u; }
//   morphism NAME : SRC -> DST { ports: a => q; units: ; edges: ; }
//   span NAME { apex: A; left: M1; right: M2; }
//   marking NAME on COMP { p = 1; }
//
// Edge direction is inferred from the endpoints: port -> unit is an in-edge,
// unit -> port an out-edge. Unnamed edges get deterministic names e1,e2,.../
// f1,f2,... in declaration order. Identifiers needing characters outside
// [A-Za-z0-9_.] are written as double-quoted strings.
ParseResult parse(const std::string& text);

// Canonical text: sections sorted by name, every edge named, quoting only
// where needed. parse(serialize(x)) reproduces x structurally.
std::string serialize(const Computon& c, const std::string& name);
std::string serialize(const ComputonMorphism& m, const std::string& name,
                      const std::string& source_name, const std::string& target_name);
std::string serialize(const Span& s, const std::string& name, const std::string& apex_name,
                      const std::string& left_name, const std::string& right_name);
std::string serialize(const MarkedComputon& m, const std::string& name,
                      const std::string& computon_name);
std::string serialize(const SourceDocument& doc);

} // namespace computon::dsl

#endif
