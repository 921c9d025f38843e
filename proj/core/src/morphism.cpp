#include "computon/morphism.hpp"

#include <algorithm>

#include "computon/interface.hpp"

namespace computon {

namespace {

const Id& image_in(const std::map<Id, Id>& map, const Id& key, const char* what) {
    auto it = map.find(key);
    if (it == map.end())
        throw ElementNotFoundError(std::string("no image for ") + what + " '" + key + "'");
    return it->second;
}

} // namespace

const Id& ComputonMorphism::unit_image(const Id& u) const { return image_in(unit_map, u, "unit"); }
const Id& ComputonMorphism::port_image(const Id& p) const { return image_in(port_map, p, "port"); }
const Id& ComputonMorphism::out_edge_image(const Id& e) const { return image_in(out_edge_map, e, "out-edge"); }
const Id& ComputonMorphism::in_edge_image(const Id& f) const { return image_in(in_edge_map, f, "in-edge"); }

std::set<Id> ComputonMorphism::port_image_of(const std::set<Id>& ports) const {
    std::set<Id> out;
    for (const Id& p : ports)
        out.insert(port_image(p));
    return out;
}

std::set<Id> ComputonMorphism::unit_image_of(const std::set<Id>& units) const {
    std::set<Id> out;
    for (const Id& u : units)
        out.insert(unit_image(u));
    return out;
}

std::set<Id> ComputonMorphism::port_preimage_of(const std::set<Id>& target_ports) const {
    std::set<Id> out;
    for (const auto& [p, q] : port_map)
        if (target_ports.count(q))
            out.insert(p);
    return out;
}

namespace {

void check_total(const std::set<Id>& domain, const std::map<Id, Id>& map,
                 bool (Computon::*has)(const Id&) const, const Computon& target,
                 const char* what) {
    for (const Id& x : domain)
        if (!map.count(x))
            throw MalformedInputError(std::string("morphism is not total: ") + what + " '" + x +
                                      "' has no image");
    for (const auto& [x, y] : map) {
        if (!domain.count(x))
            throw MalformedInputError(std::string("morphism maps unknown ") + what + " '" + x + "'");
        if (!(target.*has)(y))
            throw MalformedInputError(std::string("morphism maps ") + what + " '" + x +
                                      "' to unknown element '" + y + "'");
    }
}

template <typename M>
std::set<Id> keys(const M& m) {
    std::set<Id> out;
    for (const auto& [k, v] : m) {
        (void)v;
        out.insert(k);
    }
    return out;
}

bool injective(const std::map<Id, Id>& map) {
    std::set<Id> seen;
    for (const auto& [k, v] : map) {
        (void)k;
        if (!seen.insert(v).second)
            return false;
    }
    return true;
}

} // namespace

ValidationReport validate_morphism(const ComputonMorphism& m) {
    check_total(m.source.units, m.unit_map, &Computon::has_unit, m.target, "unit");
    check_total(keys(m.source.ports), m.port_map, &Computon::has_port, m.target, "port");
    check_total(keys(m.source.out_edges), m.out_edge_map, &Computon::has_out_edge, m.target, "out-edge");
    check_total(keys(m.source.in_edges), m.in_edge_map, &Computon::has_in_edge, m.target, "in-edge");

    ValidationReport report;
    auto fail = [&](std::string clause, std::string element, std::string message) {
        report.violations.push_back({std::move(clause), std::move(element), std::move(message)});
    };

    if (!injective(m.unit_map))
        fail("unit-map-injective", "", "two units share an image");
    if (!injective(m.port_map))
        fail("port-map-injective", "", "two ports share an image");
    if (!injective(m.out_edge_map))
        fail("out-edge-map-injective", "", "two out-edges share an image");
    if (!injective(m.in_edge_map))
        fail("in-edge-map-injective", "", "two in-edges share an image");

    for (const Colour& colour : m.source.colours)
        if (!m.target.colours.count(colour))
            fail("colour-inclusion", std::to_string(colour.value),
                 "source colour is missing from the target colour set");

    for (const auto& [p, q] : m.port_map) {
        if (m.source.colour_of(p) != m.target.colour_of(q))
            fail("colour-square", p,
                 "port '" + p + "' maps to '" + q + "' of a different colour");
    }

    for (const auto& [e, e2] : m.out_edge_map) {
        const OutEdge& src = m.source.out_edges.at(e);
        const OutEdge& dst = m.target.out_edges.at(e2);
        if (dst.source_unit != m.unit_image(src.source_unit))
            fail("sigma-square", e, "out-edge image leaves the wrong unit");
        if (dst.target_port != m.port_image(src.target_port))
            fail("t-square", e, "out-edge image enters the wrong port");
    }
    for (const auto& [f, f2] : m.in_edge_map) {
        const InEdge& src = m.source.in_edges.at(f);
        const InEdge& dst = m.target.in_edges.at(f2);
        if (dst.target_unit != m.unit_image(src.target_unit))
            fail("tau-square", f, "in-edge image enters the wrong unit");
        if (dst.source_port != m.port_image(src.source_port))
            fail("s-square", f, "in-edge image leaves the wrong port");
    }

    if (report.ok()) {
        Interface iface = interface_of(m.source);
        for (const Id& p : i_vector(m))
            if (!iface.e_inports.count(p) && !iface.e_outports.count(p))
                fail("boundary", p, "internal port '" + p + "' gains a producer under the map");
        for (const Id& p : o_vector(m))
            if (!iface.e_inports.count(p) && !iface.e_outports.count(p))
                fail("boundary", p, "internal port '" + p + "' gains a consumer under the map");
    }

    return report;
}

std::set<Id> i_vector(const ComputonMorphism& m) {
    std::set<Id> out;
    for (const auto& [p, q] : m.port_map) {
        std::set<Id> there = port_pre_set(m.target, q);
        std::set<Id> mapped = m.unit_image_of(port_pre_set(m.source, p));
        for (const Id& u : there)
            if (!mapped.count(u)) {
                out.insert(p);
                break;
            }
    }
    return out;
}

std::set<Id> o_vector(const ComputonMorphism& m) {
    std::set<Id> out;
    for (const auto& [p, q] : m.port_map) {
        std::set<Id> there = port_post_set(m.target, q);
        std::set<Id> mapped = m.unit_image_of(port_post_set(m.source, p));
        for (const Id& u : there)
            if (!mapped.count(u)) {
                out.insert(p);
                break;
            }
    }
    return out;
}

ComputonMorphism compose_morphisms(const ComputonMorphism& g, const ComputonMorphism& f) {
    if (!(f.target == g.source))
        throw CompositionMismatchError("morphisms do not share the middle computon");

    ComputonMorphism out;
    out.source = f.source;
    out.target = g.target;
    for (const auto& [x, y] : f.unit_map)
        out.unit_map[x] = g.unit_image(y);
    for (const auto& [x, y] : f.port_map)
        out.port_map[x] = g.port_image(y);
    for (const auto& [x, y] : f.out_edge_map)
        out.out_edge_map[x] = g.out_edge_image(y);
    for (const auto& [x, y] : f.in_edge_map)
        out.in_edge_map[x] = g.in_edge_image(y);
    return out;
}

ComputonMorphism identity_morphism(const Computon& c) {
    ComputonMorphism m;
    m.source = c;
    m.target = c;
    for (const Id& u : c.units)
        m.unit_map[u] = u;
    for (const auto& [p, colour] : c.ports) {
        (void)colour;
        m.port_map[p] = p;
    }
    for (const auto& [e, edge] : c.out_edges) {
        (void)edge;
        m.out_edge_map[e] = e;
    }
    for (const auto& [f, edge] : c.in_edges) {
        (void)edge;
        m.in_edge_map[f] = f;
    }
    return m;
}

} // namespace computon
