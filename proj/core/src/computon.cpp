#include "computon/computon.hpp"

namespace computon {

Colour Computon::colour_of(const Id& port) const {
    auto it = ports.find(port);
    if (it == ports.end())
        throw ElementNotFoundError("unknown port '" + port + "'");
    return it->second;
}

void Computon::add_unit(const Id& id) {
    if (!units.insert(id).second)
        throw MalformedInputError("duplicate unit id '" + id + "'");
}

void Computon::add_port(const Id& id, Colour colour) {
    if (!ports.emplace(id, colour).second)
        throw MalformedInputError("duplicate port id '" + id + "'");
    colours.insert(colour);
}

void Computon::add_out_edge(const Id& id, const Id& unit, const Id& port) {
    if (!out_edges.emplace(id, OutEdge{unit, port}).second)
        throw MalformedInputError("duplicate out-edge id '" + id + "'");
}

void Computon::add_in_edge(const Id& id, const Id& port, const Id& unit) {
    if (!in_edges.emplace(id, InEdge{port, unit}).second)
        throw MalformedInputError("duplicate in-edge id '" + id + "'");
}

void Computon::add_colour(Colour colour) {
    colours.insert(colour);
}

} // namespace computon
