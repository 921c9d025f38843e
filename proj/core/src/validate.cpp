#include "computon/validate.hpp"

#include <algorithm>
#include <sstream>

namespace computon {

bool ValidationReport::has_clause(const std::string& clause) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.clause == clause; });
}

std::string ValidationReport::to_string() const {
    if (ok())
        return "ok";
    std::ostringstream out;
    for (const auto& v : violations) {
        out << v.clause;
        if (!v.element.empty())
            out << " [" << v.element << "]";
        out << ": " << v.message << "\n";
    }
    return out.str();
}

ValidationReport validate_computon(const Computon& c) {
    ValidationReport report;
    auto fail = [&](std::string clause, std::string element, std::string message) {
        report.violations.push_back({std::move(clause), std::move(element), std::move(message)});
    };

    if (c.ports.empty())
        fail("ports-nonempty", "", "a computon has at least one port");
    if (c.colours.empty())
        fail("colours-nonempty", "", "a computon has at least one colour");

    for (const auto& [id, colour] : c.ports) {
        if (!c.colours.count(colour))
            fail("colour-in-set", id,
                 "port colour " + std::to_string(colour.value) + " is not in the colour set");
    }
    for (const Colour& colour : c.colours) {
        bool used = std::any_of(c.ports.begin(), c.ports.end(),
                                [&](const auto& p) { return p.second == colour; });
        if (!used)
            fail("colour-surjective", std::to_string(colour.value),
                 "colour is assigned to no port");
    }

    for (const auto& [id, e] : c.out_edges) {
        if (!c.has_unit(e.source_unit))
            fail("sigma-total", id, "out-edge leaves unknown unit '" + e.source_unit + "'");
        if (!c.has_port(e.target_port))
            fail("t-total", id, "out-edge enters unknown port '" + e.target_port + "'");
    }
    for (const auto& [id, f] : c.in_edges) {
        if (!c.has_port(f.source_port))
            fail("s-total", id, "in-edge leaves unknown port '" + f.source_port + "'");
        if (!c.has_unit(f.target_unit))
            fail("tau-total", id, "in-edge enters unknown unit '" + f.target_unit + "'");
    }

    for (const Id& u : c.units) {
        bool has_out = std::any_of(c.out_edges.begin(), c.out_edges.end(),
                                   [&](const auto& e) { return e.second.source_unit == u; });
        bool has_in = std::any_of(c.in_edges.begin(), c.in_edges.end(),
                                  [&](const auto& f) { return f.second.target_unit == u; });
        if (!has_out)
            fail("sigma-surjective", u, "sigma not surjective: unit has no outgoing edge");
        if (!has_in)
            fail("tau-surjective", u, "tau not surjective: unit has no incoming edge");
    }

    // A control port with no incoming out-edge (an ec-inport) and one with no
    // outgoing in-edge (an ec-outport) must both exist.
    bool ec_in = false, ec_out = false;
    for (const auto& [id, colour] : c.ports) {
        if (!colour.is_control())
            continue;
        bool produced = std::any_of(c.out_edges.begin(), c.out_edges.end(),
                                    [&](const auto& e) { return e.second.target_port == id; });
        bool consumed = std::any_of(c.in_edges.begin(), c.in_edges.end(),
                                    [&](const auto& f) { return f.second.source_port == id; });
        if (!produced)
            ec_in = true;
        if (!consumed)
            ec_out = true;
    }
    if (!ec_in)
        fail("ec-inport", "", "no ec-inport: no control port free of incoming edges");
    if (!ec_out)
        fail("ec-outport", "", "no ec-outport: no control port free of outgoing edges");

    return report;
}

} // namespace computon
