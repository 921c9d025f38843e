#include <algorithm>

#include "computon/compose.hpp"
#include "computon/interface.hpp"
#include "span_check.hpp"

namespace computon {

namespace detail {

void require_valid_span(const Span& s) {
    if (!(s.left.source == s.apex) || !(s.right.source == s.apex))
        throw InvalidSpanError("span legs do not share the apex");
    if (!validate_computon(s.apex).ok())
        throw InvalidSpanError("span apex is not a valid computon");
    if (!validate_computon(s.left.target).ok())
        throw InvalidSpanError("left target is not a valid computon");
    if (!validate_computon(s.right.target).ok())
        throw InvalidSpanError("right target is not a valid computon");
    if (!validate_morphism(s.left).ok())
        throw InvalidSpanError("left leg is not a valid computon morphism:\n" +
                               validate_morphism(s.left).to_string());
    if (!validate_morphism(s.right).ok())
        throw InvalidSpanError("right leg is not a valid computon morphism:\n" +
                               validate_morphism(s.right).to_string());
}

} // namespace detail

namespace {

constexpr std::size_t kMediatorPortCap = 10;

// Renaming scheme of the gluing: merged elements take "L.<x>=R.<y>", the
// rest keep a side prefix.
struct Namer {
    std::map<Id, Id> left_partner;   // L element -> R element identified with it
    std::map<Id, Id> right_partner;  // R element -> L element

    Namer(const std::map<Id, Id>& apex_left, const std::map<Id, Id>& apex_right) {
        for (const auto& [z, l] : apex_left) {
            const Id& r = apex_right.at(z);
            left_partner[l] = r;
            right_partner[r] = l;
        }
    }

    Id left_name(const Id& x) const {
        auto it = left_partner.find(x);
        if (it != left_partner.end())
            return "L." + x + "=R." + it->second;
        return "L." + x;
    }

    Id right_name(const Id& y) const {
        auto it = right_partner.find(y);
        if (it != right_partner.end())
            return "L." + it->second + "=R." + y;
        return "R." + y;
    }
};

} // namespace

PushabilityReport is_pushable(const Span& s) {
    detail::require_valid_span(s);

    PushabilityReport report;
    auto grows_left = i_vector(s.left), shrinks_left = o_vector(s.left);
    auto grows_right = i_vector(s.right), shrinks_right = o_vector(s.right);

    Interface left_iface = interface_of(s.left.target);
    Interface right_iface = interface_of(s.right.target);
    auto external = [](const Interface& iface, const Id& p) {
        return iface.e_inports.count(p) || iface.e_outports.count(p);
    };

    std::set<Id> right_growth = grows_right;
    right_growth.insert(shrinks_right.begin(), shrinks_right.end());
    for (const Id& z : right_growth) {
        Id p = s.left.port_image(z);
        if (!external(left_iface, p))
            report.violations.push_back("apex port '" + z + "' grows on the right but '" + p +
                                        "' is internal on the left");
    }
    std::set<Id> left_growth = grows_left;
    left_growth.insert(shrinks_left.begin(), shrinks_left.end());
    for (const Id& z : left_growth) {
        Id p = s.right.port_image(z);
        if (!external(right_iface, p))
            report.violations.push_back("apex port '" + z + "' grows on the left but '" + p +
                                        "' is internal on the right");
    }

    report.pushable = report.violations.empty();
    return report;
}

PushoutResult raw_pushout(const Span& s) {
    detail::require_valid_span(s);
    const Computon& L = s.left.target;
    const Computon& R = s.right.target;

    Namer units(s.left.unit_map, s.right.unit_map);
    Namer ports(s.left.port_map, s.right.port_map);
    Namer oedges(s.left.out_edge_map, s.right.out_edge_map);
    Namer iedges(s.left.in_edge_map, s.right.in_edge_map);

    PushoutResult po;
    Computon& c = po.result;
    po.left_inj.source = L;
    po.right_inj.source = R;

    auto add_origin = [](std::map<Id, std::vector<Id>>& m, const Id& name, const Id& origin) {
        m[name].push_back(origin);
    };

    for (const Id& u : L.units) {
        Id name = units.left_name(u);
        if (!c.has_unit(name))
            c.add_unit(name);
        po.left_inj.unit_map[u] = name;
        add_origin(po.provenance.units, name, "L:" + u);
    }
    for (const Id& u : R.units) {
        Id name = units.right_name(u);
        if (!c.has_unit(name))
            c.add_unit(name);
        po.right_inj.unit_map[u] = name;
        add_origin(po.provenance.units, name, "R:" + u);
    }

    for (const auto& [p, colour] : L.ports) {
        Id name = ports.left_name(p);
        if (!c.has_port(name))
            c.add_port(name, colour);
        po.left_inj.port_map[p] = name;
        add_origin(po.provenance.ports, name, "L:" + p);
    }
    for (const auto& [p, colour] : R.ports) {
        Id name = ports.right_name(p);
        if (!c.has_port(name))
            c.add_port(name, colour);
        po.right_inj.port_map[p] = name;
        add_origin(po.provenance.ports, name, "R:" + p);
    }

    for (const auto& [e, edge] : L.out_edges) {
        Id name = oedges.left_name(e);
        if (!c.has_out_edge(name))
            c.add_out_edge(name, units.left_name(edge.source_unit), ports.left_name(edge.target_port));
        po.left_inj.out_edge_map[e] = name;
        add_origin(po.provenance.out_edges, name, "L:" + e);
    }
    for (const auto& [e, edge] : R.out_edges) {
        Id name = oedges.right_name(e);
        if (!c.has_out_edge(name))
            c.add_out_edge(name, units.right_name(edge.source_unit), ports.right_name(edge.target_port));
        po.right_inj.out_edge_map[e] = name;
        add_origin(po.provenance.out_edges, name, "R:" + e);
    }

    for (const auto& [f, edge] : L.in_edges) {
        Id name = iedges.left_name(f);
        if (!c.has_in_edge(name))
            c.add_in_edge(name, ports.left_name(edge.source_port), units.left_name(edge.target_unit));
        po.left_inj.in_edge_map[f] = name;
        add_origin(po.provenance.in_edges, name, "L:" + f);
    }
    for (const auto& [f, edge] : R.in_edges) {
        Id name = iedges.right_name(f);
        if (!c.has_in_edge(name))
            c.add_in_edge(name, ports.right_name(edge.source_port), units.right_name(edge.target_unit));
        po.right_inj.in_edge_map[f] = name;
        add_origin(po.provenance.in_edges, name, "R:" + f);
    }

    for (Colour colour : L.colours)
        c.add_colour(colour);
    for (Colour colour : R.colours)
        c.add_colour(colour);

    po.left_inj.target = c;
    po.right_inj.target = c;
    return po;
}

PushoutResult pushout(const Span& s) {
    PushabilityReport report = is_pushable(s);
    if (!report.pushable) {
        std::string why;
        for (const std::string& v : report.violations)
            why += "\n  " + v;
        throw PushoutUndefinedError("span is not pushable:" + why);
    }
    return raw_pushout(s);
}

bool verify_universal_property(const Span& s, const PushoutResult& po,
                               const Computon& candidate,
                               const ComputonMorphism& candidate_left,
                               const ComputonMorphism& candidate_right) {
    if (s.left.target.ports.size() > kMediatorPortCap ||
        s.right.target.ports.size() > kMediatorPortCap)
        throw CapacityError("mediator search is capped at spans with <= " +
                            std::to_string(kMediatorPortCap) + " ports per operand");

    // The candidate must be a commuting cocone over the span.
    if (!(candidate_left.source == s.left.target) || !(candidate_right.source == s.right.target))
        return false;
    if (!(candidate_left.target == candidate) || !(candidate_right.target == candidate))
        return false;
    if (!validate_morphism(candidate_left).ok() || !validate_morphism(candidate_right).ok())
        return false;
    if (!(compose_morphisms(candidate_left, s.left) == compose_morphisms(candidate_right, s.right)))
        return false;

    // Each triangle pins the image of every glued element, so the search
    // space collapses to a single consistent assignment per component (or
    // none). Conflicting constraints mean no mediator exists.
    ComputonMorphism mediator;
    mediator.source = po.result;
    mediator.target = candidate;

    auto force = [](std::map<Id, Id>& out, const std::map<Id, Id>& inj,
                    const std::map<Id, Id>& cand) {
        for (const auto& [x, glued] : inj) {
            auto it = out.find(glued);
            const Id& image = cand.at(x);
            if (it == out.end())
                out.emplace(glued, image);
            else if (it->second != image)
                return false;
        }
        return true;
    };

    if (!force(mediator.unit_map, po.left_inj.unit_map, candidate_left.unit_map) ||
        !force(mediator.unit_map, po.right_inj.unit_map, candidate_right.unit_map) ||
        !force(mediator.port_map, po.left_inj.port_map, candidate_left.port_map) ||
        !force(mediator.port_map, po.right_inj.port_map, candidate_right.port_map) ||
        !force(mediator.out_edge_map, po.left_inj.out_edge_map, candidate_left.out_edge_map) ||
        !force(mediator.out_edge_map, po.right_inj.out_edge_map, candidate_right.out_edge_map) ||
        !force(mediator.in_edge_map, po.left_inj.in_edge_map, candidate_left.in_edge_map) ||
        !force(mediator.in_edge_map, po.right_inj.in_edge_map, candidate_right.in_edge_map))
        return false;

    try {
        if (!validate_morphism(mediator).ok())
            return false;
    } catch (const MalformedInputError&) {
        return false;  // some glued element escaped both injections
    }

    return compose_morphisms(mediator, po.left_inj) == candidate_left &&
           compose_morphisms(mediator, po.right_inj) == candidate_right;
}

CoproductResult coproduct(const Computon& a, const Computon& b) {
    // A gluing over nothing shares the element naming with raw_pushout but
    // needs no apex, so it is spelled out directly.
    CoproductResult cp;
    Computon& c = cp.result;
    cp.left_inj.source = a;
    cp.right_inj.source = b;

    for (const Id& u : a.units) {
        c.add_unit("L." + u);
        cp.left_inj.unit_map[u] = "L." + u;
    }
    for (const Id& u : b.units) {
        c.add_unit("R." + u);
        cp.right_inj.unit_map[u] = "R." + u;
    }
    for (const auto& [p, colour] : a.ports) {
        c.add_port("L." + p, colour);
        cp.left_inj.port_map[p] = "L." + p;
    }
    for (const auto& [p, colour] : b.ports) {
        c.add_port("R." + p, colour);
        cp.right_inj.port_map[p] = "R." + p;
    }
    for (const auto& [e, edge] : a.out_edges) {
        c.add_out_edge("L." + e, "L." + edge.source_unit, "L." + edge.target_port);
        cp.left_inj.out_edge_map[e] = "L." + e;
    }
    for (const auto& [e, edge] : b.out_edges) {
        c.add_out_edge("R." + e, "R." + edge.source_unit, "R." + edge.target_port);
        cp.right_inj.out_edge_map[e] = "R." + e;
    }
    for (const auto& [f, edge] : a.in_edges) {
        c.add_in_edge("L." + f, "L." + edge.source_port, "L." + edge.target_unit);
        cp.left_inj.in_edge_map[f] = "L." + f;
    }
    for (const auto& [f, edge] : b.in_edges) {
        c.add_in_edge("R." + f, "R." + edge.source_port, "R." + edge.target_unit);
        cp.right_inj.in_edge_map[f] = "R." + f;
    }
    for (Colour colour : a.colours)
        c.add_colour(colour);
    for (Colour colour : b.colours)
        c.add_colour(colour);

    cp.left_inj.target = c;
    cp.right_inj.target = c;
    return cp;
}

} // namespace computon
