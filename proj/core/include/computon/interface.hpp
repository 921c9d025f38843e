#ifndef COMPUTON_INTERFACE_HPP
#define COMPUTON_INTERFACE_HPP

#include <set>

#include "computon/computon.hpp"

namespace computon {

enum class PortDirection {
    e_inport,    // no incoming out-edge, some outgoing in-edge
    e_outport,   // no outgoing in-edge, some incoming out-edge
    e_inoutport, // no edges at all
    internal,    // both kinds of edges (an i-port)
};

enum class PortKind { control, data };

struct PortClass {
    PortDirection direction;
    PortKind kind;

    bool operator==(const PortClass&) const = default;
};

// The interface of a computon towards the outside world. A port may sit in
// both sets at once (an e-inoutport).
struct Interface {
    std::set<Id> e_inports;   // ports with no incoming out-edge
    std::set<Id> e_outports;  // ports with no outgoing in-edge

    bool operator==(const Interface&) const = default;
};

Interface interface_of(const Computon& c);
PortClass port_class(const Computon& c, const Id& port);

// Control/data slices of the interface.
std::set<Id> ec_inports(const Computon& c);
std::set<Id> ec_outports(const Computon& c);
std::set<Id> ed_inports(const Computon& c);
std::set<Id> ed_outports(const Computon& c);
std::set<Id> i_ports(const Computon& c);

// Pre- and post-sets. For a unit these are ports; for a port, units.
std::set<Id> unit_pre_set(const Computon& c, const Id& unit);
std::set<Id> unit_post_set(const Computon& c, const Id& unit);
std::set<Id> port_pre_set(const Computon& c, const Id& port);
std::set<Id> port_post_set(const Computon& c, const Id& port);

// Directed information flow: a path p -> u1 -> p2 -> ... -> q alternating
// through in-edges and out-edges. With reflexive=false a path of length >= 1
// is required even when p == q.
bool flows_to(const Computon& c, const Id& from, const Id& to, bool reflexive = false);

// Every e-inport and every e-outport lie on a common chain of edges: for each
// pair, the two ports are joined by an alternating port/unit path of length
// >= 1, edges taken in either direction. The directed relation is too strong
// here: a composite whose second stage has private inputs would never count,
// yet its parts are glued into one flow structure.
bool is_connected(const Computon& c);

} // namespace computon

#endif
