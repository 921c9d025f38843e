#ifndef COMPUTON_DOT_HPP
#define COMPUTON_DOT_HPP

#include <string>

#include "computon/semantics.hpp"

namespace computon::dot {

enum class Syntax {
    petri,     // circles for places, filled bars for transitions, solid arcs
    computon,  // squares for control ports, circles for data ports;
               // hollow = in, filled = out, half-filled = both or internal;
               // control-flow edges dashed, data-flow edges solid
};

std::string export_dot(const Computon& c, Syntax syntax, const std::string& name = "computon");
std::string export_dot(const MarkedComputon& m, Syntax syntax, const std::string& name = "computon");

// Small structural check of emitted DOT: digraph header, balanced braces,
// well-formed quoted identifiers, every statement of node / edge /
// attribute-assignment shape terminated by ';'.
bool is_valid_dot(const std::string& text);

} // namespace computon::dot

#endif
