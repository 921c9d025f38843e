#include "computon/classify.hpp"

#include <set>

#include "computon/interface.hpp"

namespace computon {

std::string to_string(ComputonClass cls) {
    switch (cls) {
    case ComputonClass::trivial: return "trivial";
    case ComputonClass::unit: return "unit";
    case ComputonClass::primitive_fork: return "primitive-fork";
    case ComputonClass::primitive_join: return "primitive-join";
    case ComputonClass::primitive_functional: return "primitive-functional";
    case ComputonClass::primitive_glue: return "primitive-glue";
    case ComputonClass::primitive_other: return "primitive-other";
    case ComputonClass::composite_or_other: return "composite-or-other";
    }
    return "?";
}

bool is_trivial(const Computon& c) {
    return c.units.empty();
}

bool is_primitive(const Computon& c) {
    if (c.units.size() != 1 || c.out_edges.empty() || c.in_edges.empty())
        return false;
    // P must equal the symmetric difference of the two edge images: every
    // port is attached, and none is attached in both directions.
    std::set<Id> im_s, im_t;
    for (const auto& [id, f] : c.in_edges)
        im_s.insert(f.source_port);
    for (const auto& [id, e] : c.out_edges)
        im_t.insert(e.target_port);
    for (const auto& [id, colour] : c.ports) {
        (void)colour;
        if (im_s.count(id) == im_t.count(id))
            return false;
    }
    return true;
}

ComputonClass classify(const Computon& c) {
    if (is_trivial(c)) {
        if (c.ports.size() == 1 && c.colours.size() == 1)
            return ComputonClass::unit;
        return ComputonClass::trivial;
    }
    if (!is_primitive(c))
        return ComputonClass::composite_or_other;

    const auto E = c.out_edges.size();
    const auto F = c.in_edges.size();
    const auto S = c.colours.size();
    if (E == 2 && F == 1 && S == 1)
        return ComputonClass::primitive_fork;
    if (E == 1 && F == 2 && S == 1)
        return ComputonClass::primitive_join;
    if (ec_inports(c).size() == 1 && ec_outports(c).size() == 1) {
        if (E == 1 && F == 1)
            return ComputonClass::primitive_glue;
        return ComputonClass::primitive_functional;
    }
    return ComputonClass::primitive_other;
}

} // namespace computon
