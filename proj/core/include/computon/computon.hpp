#ifndef COMPUTON_COMPUTON_HPP
#define COMPUTON_COMPUTON_HPP

#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace computon {

using Id = std::string;

// Colour 0 is the control colour; everything above it is a data type.
struct Colour {
    unsigned value = 0;

    constexpr bool is_control() const { return value == 0; }
    constexpr bool is_data() const { return value > 0; }

    auto operator<=>(const Colour&) const = default;
};

// Edge from a computation unit into a port.
struct OutEdge {
    Id source_unit;
    Id target_port;

    auto operator<=>(const OutEdge&) const = default;
};

// Edge from a port into a computation unit.
struct InEdge {
    Id source_port;
    Id target_unit;

    auto operator<=>(const InEdge&) const = default;
};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Duplicate identifiers, maps over unknown elements, and similar defects in
// raw input. Distinct from a validation failure, which concerns a
// structurally well-formed value.
class MalformedInputError : public Error {
public:
    using Error::Error;
};

class ElementNotFoundError : public Error {
public:
    using Error::Error;
};

class InvalidColourError : public Error {
public:
    using Error::Error;
};

// A computon: computation units and coloured ports joined by two directed
// edge families (unit->port and port->unit), with an explicit colour set.
// Identifiers are opaque strings, unique per element kind. Values are
// treated as immutable once built; every operation returns a fresh value.
struct Computon {
    std::set<Id> units;
    std::map<Id, Colour> ports;        // port id -> colour
    std::map<Id, OutEdge> out_edges;   // unit -> port
    std::map<Id, InEdge> in_edges;     // port -> unit
    std::set<Colour> colours;

    bool operator==(const Computon&) const = default;

    bool has_unit(const Id& id) const { return units.count(id) != 0; }
    bool has_port(const Id& id) const { return ports.count(id) != 0; }
    bool has_out_edge(const Id& id) const { return out_edges.count(id) != 0; }
    bool has_in_edge(const Id& id) const { return in_edges.count(id) != 0; }

    // Throws ElementNotFoundError for an unknown port.
    Colour colour_of(const Id& port) const;

    // Builder steps; throw MalformedInputError on duplicate identifiers.
    void add_unit(const Id& id);
    void add_port(const Id& id, Colour colour);
    void add_out_edge(const Id& id, const Id& unit, const Id& port);
    void add_in_edge(const Id& id, const Id& port, const Id& unit);
    void add_colour(Colour colour);
};

} // namespace computon

#endif
