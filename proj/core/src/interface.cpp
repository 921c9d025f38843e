#include "computon/interface.hpp"

#include <deque>
#include <map>
#include <vector>

namespace computon {

namespace {

void require_port(const Computon& c, const Id& port) {
    if (!c.has_port(port))
        throw ElementNotFoundError("unknown port '" + port + "'");
}

void require_unit(const Computon& c, const Id& unit) {
    if (!c.has_unit(unit))
        throw ElementNotFoundError("unknown unit '" + unit + "'");
}

} // namespace

Interface interface_of(const Computon& c) {
    Interface iface;
    for (const auto& [id, colour] : c.ports) {
        (void)colour;
        iface.e_inports.insert(id);
        iface.e_outports.insert(id);
    }
    for (const auto& [id, e] : c.out_edges)
        iface.e_inports.erase(e.target_port);
    for (const auto& [id, f] : c.in_edges)
        iface.e_outports.erase(f.source_port);
    return iface;
}

PortClass port_class(const Computon& c, const Id& port) {
    require_port(c, port);
    bool produced = false, consumed = false;
    for (const auto& [id, e] : c.out_edges)
        produced = produced || e.target_port == port;
    for (const auto& [id, f] : c.in_edges)
        consumed = consumed || f.source_port == port;

    PortDirection dir;
    if (!produced && !consumed)
        dir = PortDirection::e_inoutport;
    else if (!produced)
        dir = PortDirection::e_inport;
    else if (!consumed)
        dir = PortDirection::e_outport;
    else
        dir = PortDirection::internal;

    PortKind kind = c.colour_of(port).is_control() ? PortKind::control : PortKind::data;
    return {dir, kind};
}

namespace {

std::set<Id> filtered(const Computon& c, const std::set<Id>& ports, bool control) {
    std::set<Id> out;
    for (const Id& p : ports)
        if (c.colour_of(p).is_control() == control)
            out.insert(p);
    return out;
}

} // namespace

std::set<Id> ec_inports(const Computon& c) { return filtered(c, interface_of(c).e_inports, true); }
std::set<Id> ec_outports(const Computon& c) { return filtered(c, interface_of(c).e_outports, true); }
std::set<Id> ed_inports(const Computon& c) { return filtered(c, interface_of(c).e_inports, false); }
std::set<Id> ed_outports(const Computon& c) { return filtered(c, interface_of(c).e_outports, false); }

std::set<Id> i_ports(const Computon& c) {
    std::set<Id> produced, result;
    for (const auto& [id, e] : c.out_edges)
        produced.insert(e.target_port);
    for (const auto& [id, f] : c.in_edges)
        if (produced.count(f.source_port))
            result.insert(f.source_port);
    return result;
}

std::set<Id> unit_pre_set(const Computon& c, const Id& unit) {
    require_unit(c, unit);
    std::set<Id> out;
    for (const auto& [id, f] : c.in_edges)
        if (f.target_unit == unit)
            out.insert(f.source_port);
    return out;
}

std::set<Id> unit_post_set(const Computon& c, const Id& unit) {
    require_unit(c, unit);
    std::set<Id> out;
    for (const auto& [id, e] : c.out_edges)
        if (e.source_unit == unit)
            out.insert(e.target_port);
    return out;
}

std::set<Id> port_pre_set(const Computon& c, const Id& port) {
    require_port(c, port);
    std::set<Id> out;
    for (const auto& [id, e] : c.out_edges)
        if (e.target_port == port)
            out.insert(e.source_unit);
    return out;
}

std::set<Id> port_post_set(const Computon& c, const Id& port) {
    require_port(c, port);
    std::set<Id> out;
    for (const auto& [id, f] : c.in_edges)
        if (f.source_port == port)
            out.insert(f.target_unit);
    return out;
}

bool flows_to(const Computon& c, const Id& from, const Id& to, bool reflexive) {
    require_port(c, from);
    require_port(c, to);
    if (reflexive && from == to)
        return true;

    // Forward BFS alternating port -> unit -> port.
    std::map<Id, std::set<Id>> port_to_units, unit_to_ports;
    for (const auto& [id, f] : c.in_edges)
        port_to_units[f.source_port].insert(f.target_unit);
    for (const auto& [id, e] : c.out_edges)
        unit_to_ports[e.source_unit].insert(e.target_port);

    std::set<Id> seen_ports;
    std::deque<Id> frontier;
    for (const Id& u : port_to_units[from])
        for (const Id& p : unit_to_ports[u]) {
            if (p == to)
                return true;
            if (seen_ports.insert(p).second)
                frontier.push_back(p);
        }
    while (!frontier.empty()) {
        Id p = frontier.front();
        frontier.pop_front();
        for (const Id& u : port_to_units[p])
            for (const Id& q : unit_to_ports[u]) {
                if (q == to)
                    return true;
                if (seen_ports.insert(q).second)
                    frontier.push_back(q);
            }
    }
    return false;
}

bool is_connected(const Computon& c) {
    Interface iface = interface_of(c);

    // Undirected adjacency over ports and units; node keys are tagged to keep
    // the two id spaces apart. An empty interface side makes the condition
    // vacuous; valid computons never get there (control ports are guaranteed
    // on both sides).
    std::map<std::string, std::set<std::string>> adj;
    auto port_key = [](const Id& p) { return "p:" + p; };
    auto unit_key = [](const Id& u) { return "u:" + u; };
    auto link = [&](const std::string& a, const std::string& b) {
        adj[a].insert(b);
        adj[b].insert(a);
    };
    for (const auto& [id, e] : c.out_edges)
        link(unit_key(e.source_unit), port_key(e.target_port));
    for (const auto& [id, f] : c.in_edges)
        link(port_key(f.source_port), unit_key(f.target_unit));

    for (const Id& p : iface.e_inports) {
        std::set<std::string> reached; // reached by a path of length >= 1
        std::deque<std::string> frontier;
        for (const std::string& n : adj[port_key(p)]) {
            if (reached.insert(n).second)
                frontier.push_back(n);
        }
        while (!frontier.empty()) {
            std::string n = frontier.front();
            frontier.pop_front();
            for (const std::string& m : adj[n])
                if (reached.insert(m).second)
                    frontier.push_back(m);
        }
        for (const Id& q : iface.e_outports)
            if (!reached.count(port_key(q)))
                return false;
    }
    return true;
}

} // namespace computon
