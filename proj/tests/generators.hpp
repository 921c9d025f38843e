#ifndef COMPUTON_TESTS_GENERATORS_HPP
#define COMPUTON_TESTS_GENERATORS_HPP

#include <random>
#include <vector>

#include <computon/build.hpp>
#include <computon/compose.hpp>
#include <computon/interface.hpp>
#include <computon/morphism.hpp>
#include <computon/validate.hpp>

namespace gen {

using namespace computon;

struct Gen {
    std::mt19937_64 rng;

    explicit Gen(std::uint64_t seed) : rng(seed) {}

    int range(int lo, int hi) {  // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }
    bool chance(double p) {
        return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
    }
    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(range(0, static_cast<int>(v.size()) - 1))];
    }
    Id pick_id(const std::set<Id>& s) {
        auto it = s.begin();
        std::advance(it, range(0, static_cast<int>(s.size()) - 1));
        return *it;
    }
};

// Connected by construction: units form a chain through internal ports, the
// first unit is fed by a control inport, the last feeds a control outport,
// and every extra port hangs off some unit.
inline Computon random_connected(Gen& g, int max_units = 3, int max_ports = 8) {
    Computon c;
    int nu = g.range(1, max_units);
    std::vector<Id> units;
    for (int i = 1; i <= nu; ++i) {
        Id u = "u" + std::to_string(i);
        c.add_unit(u);
        units.push_back(u);
    }
    int np = 0, ne = 0, nf = 0;
    auto fresh_port = [&](Colour colour) {
        Id p = "p" + std::to_string(++np);
        c.add_port(p, colour);
        return p;
    };
    auto out_edge = [&](const Id& u, const Id& p) {
        c.add_out_edge("e" + std::to_string(++ne), u, p);
    };
    auto in_edge = [&](const Id& p, const Id& u) {
        c.add_in_edge("f" + std::to_string(++nf), p, u);
    };

    for (int i = 0; i + 1 < nu; ++i) {
        Id m = fresh_port(Colour{static_cast<unsigned>(g.range(0, 4))});
        out_edge(units[i], m);
        in_edge(m, units[i + 1]);
    }
    in_edge(fresh_port(Colour{0}), units.front());
    out_edge(units.back(), fresh_port(Colour{0}));

    int budget = max_ports - (nu - 1) - 2;
    int extra = budget > 0 ? g.range(0, budget) : 0;
    for (int i = 0; i < extra; ++i) {
        Colour colour{static_cast<unsigned>(g.range(0, 5))};
        Id p = fresh_port(colour);
        const Id& u = g.pick(units);
        if (g.chance(0.5))
            in_edge(p, u);
        else
            out_edge(u, p);
    }

    if (g.chance(0.25) && !c.out_edges.empty()) {
        const OutEdge copy = c.out_edges.begin()->second;
        c.add_out_edge("e" + std::to_string(++ne), copy.source_unit, copy.target_port);
    }
    if (g.chance(0.25) && !c.in_edges.empty()) {
        const InEdge copy = c.in_edges.begin()->second;
        c.add_in_edge("f" + std::to_string(++nf), copy.source_port, copy.target_unit);
    }
    return c;
}

inline Computon random_trivial(Gen& g, int max_ports = 4) {
    std::vector<Colour> colours{Colour{0}};
    int extra = g.range(0, max_ports - 1);
    for (int i = 0; i < extra; ++i)
        colours.push_back(Colour{static_cast<unsigned>(g.range(0, 5))});
    return make_trivial(colours);
}

// One unit, disjoint in/out port sets, at least one control port per side.
inline Computon random_primitive(Gen& g) {
    Computon c;
    c.add_unit("u1");
    int np = 0, ne = 0, nf = 0;
    int nin = g.range(1, 4), nout = g.range(1, 4);
    for (int i = 0; i < nin; ++i) {
        Id p = "p" + std::to_string(++np);
        c.add_port(p, i == 0 ? Colour{0} : Colour{static_cast<unsigned>(g.range(0, 5))});
        c.add_in_edge("f" + std::to_string(++nf), p, "u1");
        if (g.chance(0.15))
            c.add_in_edge("f" + std::to_string(++nf), p, "u1");
    }
    for (int i = 0; i < nout; ++i) {
        Id p = "p" + std::to_string(++np);
        c.add_port(p, i == 0 ? Colour{0} : Colour{static_cast<unsigned>(g.range(0, 5))});
        c.add_out_edge("e" + std::to_string(++ne), "u1", p);
        if (g.chance(0.15))
            c.add_out_edge("e" + std::to_string(++ne), "u1", p);
    }
    return c;
}

// Valid but not necessarily connected: one or two connected blocks side by
// side (ids prefixed to keep them disjoint), occasionally just a trivial one.
inline Computon random_computon(Gen& g, int max_units = 3, int max_ports = 8) {
    if (g.chance(0.15))
        return random_trivial(g);
    Computon a = random_connected(g, max_units, max_ports);
    if (!g.chance(0.3))
        return a;
    Computon b = random_connected(g, 1, 3);
    Computon both;
    auto merge_in = [&](const Computon& src, const std::string& prefix) {
        for (const Id& u : src.units)
            both.add_unit(prefix + u);
        for (const auto& [p, colour] : src.ports)
            both.add_port(prefix + p, colour);
        for (const auto& [e, edge] : src.out_edges)
            both.add_out_edge(prefix + e, prefix + edge.source_unit, prefix + edge.target_port);
        for (const auto& [f, edge] : src.in_edges)
            both.add_in_edge(prefix + f, prefix + edge.source_port, prefix + edge.target_unit);
    };
    merge_in(a, "a_");
    merge_in(b, "b_");
    return both;
}

// Embeds a carved sub-structure of `target`: a unit subset with its full
// edge neighbourhood plus enough isolated ports to stay a valid computon,
// all renamed. Falls back to a unit-computon embedding when carving keeps
// violating the boundary condition.
inline ComputonMorphism random_morphism(Gen& g) {
    Computon target = random_computon(g);
    std::set<Id> controls;
    for (const auto& [p, colour] : target.ports)
        if (colour.is_control())
            controls.insert(p);

    auto unit_embedding = [&]() {
        ComputonMorphism m;
        m.source = make_unit();
        m.target = target;
        m.port_map["p1"] = g.pick_id(controls);
        return m;
    };

    int mode = g.range(0, 9);
    if (mode == 0)
        return identity_morphism(target);
    if (mode == 1)
        return unit_embedding();
    if (mode == 2) {
        // Trivial source spread over arbitrary target ports.
        std::set<Id> chosen{g.pick_id(controls)};
        for (const auto& [p, colour] : target.ports) {
            (void)colour;
            if (g.chance(0.3))
                chosen.insert(p);
        }
        ComputonMorphism m;
        m.target = target;
        int n = 0;
        for (const Id& p : chosen) {
            Id z = "z" + std::to_string(++n);
            m.source.add_port(z, target.colour_of(p));
            m.port_map[z] = p;
        }
        return m;
    }

    for (int attempt = 0; attempt < 8; ++attempt) {
        std::vector<Id> all_units(target.units.begin(), target.units.end());
        if (all_units.empty())
            break;
        std::set<Id> chosen_units;
        for (const Id& u : all_units)
            if (g.chance(0.6))
                chosen_units.insert(u);
        if (chosen_units.empty())
            chosen_units.insert(g.pick(all_units));

        ComputonMorphism m;
        m.target = target;
        auto rename = [](const Id& x) { return "s_" + x; };
        for (const Id& u : chosen_units) {
            m.source.add_unit(rename(u));
            m.unit_map[rename(u)] = u;
        }
        std::set<Id> kept_ports;
        for (const auto& [e, edge] : target.out_edges)
            if (chosen_units.count(edge.source_unit))
                kept_ports.insert(edge.target_port);
        for (const auto& [f, edge] : target.in_edges)
            if (chosen_units.count(edge.target_unit))
                kept_ports.insert(edge.source_port);
        for (const Id& p : kept_ports) {
            m.source.add_port(rename(p), target.colour_of(p));
            m.port_map[rename(p)] = p;
        }
        for (const auto& [e, edge] : target.out_edges)
            if (chosen_units.count(edge.source_unit)) {
                m.source.add_out_edge(rename(e), rename(edge.source_unit), rename(edge.target_port));
                m.out_edge_map[rename(e)] = e;
            }
        for (const auto& [f, edge] : target.in_edges)
            if (chosen_units.count(edge.target_unit)) {
                m.source.add_in_edge(rename(f), rename(edge.source_port), rename(edge.target_unit));
                m.in_edge_map[rename(f)] = f;
            }

        // Give the carved piece its own control e-ports if the cut removed
        // them; an extra isolated port embeds without constraints.
        if (ec_inports(m.source).empty() || ec_outports(m.source).empty()) {
            for (const Id& p : controls) {
                if (kept_ports.count(p))
                    continue;
                m.source.add_port(rename(p), Colour{0});
                m.port_map[rename(p)] = p;
                break;
            }
        }

        if (validate_computon(m.source).ok() && validate_morphism(m).ok())
            return m;
    }
    return unit_embedding();
}

// Trivial apex whose ports land on external ports of both operands, which is
// exactly the pushable situation. Orientations are mixed on purpose.
inline Span random_pushable_span(Gen& g, int max_units = 3, int max_ports = 8) {
    for (;;) {
        Computon left = random_connected(g, max_units, max_ports);
        Computon right = random_connected(g, max_units, max_ports);
        Interface li = interface_of(left), ri = interface_of(right);

        std::vector<std::pair<Id, Id>> candidates;
        auto collect = [&](const std::set<Id>& ls, const std::set<Id>& rs) {
            for (const Id& l : ls)
                for (const Id& r : rs)
                    if (left.colour_of(l) == right.colour_of(r))
                        candidates.emplace_back(l, r);
        };
        collect(li.e_outports, ri.e_inports);
        collect(li.e_inports, ri.e_outports);
        if (g.chance(0.3))
            collect(li.e_inports, ri.e_inports);
        if (g.chance(0.3))
            collect(li.e_outports, ri.e_outports);

        std::shuffle(candidates.begin(), candidates.end(), g.rng);
        Span span;
        std::set<Id> used_left, used_right;
        int wanted = g.range(1, 3);
        int n = 0;
        bool control = false;
        for (const auto& [l, r] : candidates) {
            if (n >= wanted && control)
                break;
            if (used_left.count(l) || used_right.count(r))
                continue;
            if (n >= wanted && !left.colour_of(l).is_control())
                continue;
            Id z = "z" + std::to_string(++n);
            span.apex.add_port(z, left.colour_of(l));
            span.left.port_map[z] = l;
            span.right.port_map[z] = r;
            used_left.insert(l);
            used_right.insert(r);
            control = control || left.colour_of(l).is_control();
        }
        if (!control)
            continue;  // apex would lack a control port
        span.left.source = span.apex;
        span.left.target = left;
        span.right.source = span.apex;
        span.right.target = right;
        return span;
    }
}

// One apex port is pinned to an internal port of the left operand while it
// grows on the right, which breaks the pushability inclusions.
inline Span random_nonpushable_span(Gen& g) {
    for (;;) {
        Computon left = random_connected(g, 3, 8);
        std::set<Id> internals = i_ports(left);
        if (internals.empty())
            continue;
        Id m = g.pick_id(internals);
        Colour colour = left.colour_of(m);

        Computon right;
        Id right_port;
        if (colour.is_control()) {
            right = make_glue();
            right_port = "p1";
        } else {
            right = make_functional({colour}, {});
            right_port = "p2";
        }

        Span span;
        span.apex.add_port("z1", colour);
        span.left.port_map["z1"] = m;
        span.right.port_map["z1"] = right_port;
        if (!colour.is_control()) {
            span.apex.add_port("z0", Colour{0});
            span.left.port_map["z0"] = *ec_inports(left).begin();
            span.right.port_map["z0"] = "p1";
        }
        span.left.source = span.apex;
        span.left.target = left;
        span.right.source = span.apex;
        span.right.target = right;
        return span;
    }
}

// Extension of `base` by fresh hanging structure; the inclusion morphism is
// returned alongside. Used to manufacture commuting cocones over a pushout.
inline std::pair<Computon, ComputonMorphism> random_extension(Gen& g, const Computon& base) {
    Computon ext = base;
    int nu = 0, np = 0, ne = 0, nf = 0;
    auto fresh = [](int& counter, const char* prefix, auto taken) {
        for (;;) {
            Id id = prefix + std::to_string(++counter);
            if (!taken(id))
                return id;
        }
    };
    auto fresh_unit = [&] { return fresh(nu, "x_u", [&](const Id& id) { return ext.has_unit(id); }); };
    auto fresh_port = [&] { return fresh(np, "x_p", [&](const Id& id) { return ext.has_port(id); }); };
    auto fresh_out = [&] { return fresh(ne, "x_e", [&](const Id& id) { return ext.has_out_edge(id); }); };
    auto fresh_in = [&] { return fresh(nf, "x_f", [&](const Id& id) { return ext.has_in_edge(id); }); };

    int new_units = g.range(0, 2);
    for (int i = 0; i < new_units; ++i) {
        Id w = fresh_unit();
        ext.add_unit(w);
        std::set<Id> outs = ed_outports(ext);
        std::set<Id> couts = ec_outports(ext);
        outs.insert(couts.begin(), couts.end());
        if (!outs.empty() && g.chance(0.6)) {
            ext.add_in_edge(fresh_in(), g.pick_id(outs), w);
        } else {
            Id pin = fresh_port();
            ext.add_port(pin, Colour{static_cast<unsigned>(g.range(0, 5))});
            ext.add_in_edge(fresh_in(), pin, w);
        }
        Id pout = fresh_port();
        ext.add_port(pout, Colour{0});
        ext.add_out_edge(fresh_out(), w, pout);
    }
    if (g.chance(0.4)) {
        ext.add_port(fresh_port(), Colour{static_cast<unsigned>(g.range(0, 6))});
    }
    if (g.chance(0.4) && !base.out_edges.empty()) {
        const OutEdge copy = base.out_edges.begin()->second;
        ext.add_out_edge(fresh_out(), copy.source_unit, copy.target_port);
    }

    ComputonMorphism inc = identity_morphism(base);
    inc.target = ext;
    return {ext, inc};
}

// Right operand consuming exactly the left's e-outports, so that the full
// bijective pairing is a total sequencing.
inline std::pair<Computon, std::vector<std::pair<Id, Id>>> total_partner(Gen& g,
                                                                         const Computon& left) {
    Computon right;
    right.add_unit("z1");
    int np = 0;
    std::vector<std::pair<Id, Id>> pairing;
    for (const Id& q : interface_of(left).e_outports) {
        Id p = "c" + std::to_string(++np);
        right.add_port(p, left.colour_of(q));
        right.add_in_edge("cf" + std::to_string(np), p, "z1");
        pairing.emplace_back(q, p);
    }
    Id out = "c" + std::to_string(++np);
    right.add_port(out, Colour{0});
    right.add_out_edge("ce1", "z1", out);
    int extras = g.range(0, 2);
    for (int i = 0; i < extras; ++i) {
        Id p = "c" + std::to_string(++np);
        right.add_port(p, Colour{static_cast<unsigned>(g.range(1, 5))});
        right.add_out_edge("ce" + std::to_string(i + 2), "z1", p);
    }
    return {right, pairing};
}

} // namespace gen

#endif
