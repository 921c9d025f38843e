#include <algorithm>
#include <map>
#include <vector>

#include "computon/morphism.hpp"

namespace computon {

namespace {

using EdgeBuckets = std::map<std::pair<Id, Id>, std::vector<Id>>;

struct Shape {
    std::vector<Id> units;  // sorted
    std::vector<Id> ports;  // sorted
    EdgeBuckets out_by_pair; // (unit, port) -> out-edge ids, sorted
    EdgeBuckets in_by_pair;  // (port, unit) -> in-edge ids, sorted

    explicit Shape(const Computon& c) {
        units.assign(c.units.begin(), c.units.end());
        for (const auto& [p, colour] : c.ports) {
            (void)colour;
            ports.push_back(p);
        }
        for (const auto& [id, e] : c.out_edges)
            out_by_pair[{e.source_unit, e.target_port}].push_back(id);
        for (const auto& [id, f] : c.in_edges)
            in_by_pair[{f.source_port, f.target_unit}].push_back(id);
        for (auto& [k, v] : out_by_pair)
            std::sort(v.begin(), v.end());
        for (auto& [k, v] : in_by_pair)
            std::sort(v.begin(), v.end());
    }

    std::size_t out_mult(const Id& u, const Id& p) const {
        auto it = out_by_pair.find({u, p});
        return it == out_by_pair.end() ? 0 : it->second.size();
    }
    std::size_t in_mult(const Id& p, const Id& u) const {
        auto it = in_by_pair.find({p, u});
        return it == in_by_pair.end() ? 0 : it->second.size();
    }
};

// Degree/colour fingerprint used to prune unit candidates.
std::pair<std::vector<unsigned>, std::vector<unsigned>> unit_signature(const Computon& c, const Id& u) {
    std::vector<unsigned> in_sig, out_sig;
    for (const auto& [id, f] : c.in_edges)
        if (f.target_unit == u)
            in_sig.push_back(c.colour_of(f.source_port).value);
    for (const auto& [id, e] : c.out_edges)
        if (e.source_unit == u)
            out_sig.push_back(c.colour_of(e.target_port).value);
    std::sort(in_sig.begin(), in_sig.end());
    std::sort(out_sig.begin(), out_sig.end());
    return {in_sig, out_sig};
}

struct Search {
    const Computon& a;
    const Computon& b;
    Shape sa;
    Shape sb;
    std::map<Id, Id> unit_map;
    std::map<Id, Id> port_map;
    std::set<Id> used_units;
    std::set<Id> used_ports;

    Search(const Computon& a_, const Computon& b_) : a(a_), b(b_), sa(a_), sb(b_) {}

    bool assign_units(std::size_t i) {
        if (i == sa.units.size())
            return assign_ports(0);
        const Id& u = sa.units[i];
        auto sig = unit_signature(a, u);
        for (const Id& v : sb.units) {
            if (used_units.count(v) || unit_signature(b, v) != sig)
                continue;
            unit_map[u] = v;
            used_units.insert(v);
            if (assign_units(i + 1))
                return true;
            unit_map.erase(u);
            used_units.erase(v);
        }
        return false;
    }

    bool port_compatible(const Id& p, const Id& q) const {
        if (a.colour_of(p) != b.colour_of(q))
            return false;
        // Adjacency multiplicities towards every already-fixed unit must
        // agree exactly; with the unit map total this pins the whole
        // neighbourhood of the port.
        for (const Id& u : sa.units) {
            const Id& v = unit_map.at(u);
            if (sa.out_mult(u, p) != sb.out_mult(v, q))
                return false;
            if (sa.in_mult(p, u) != sb.in_mult(q, v))
                return false;
        }
        // Total degrees must agree too, or q would carry extra edges from
        // unmapped units (impossible for a bijective unit map, but cheap).
        std::size_t pa_in = 0, pa_out = 0, qb_in = 0, qb_out = 0;
        for (const auto& [id, e] : a.out_edges)
            pa_in += e.target_port == p;
        for (const auto& [id, f] : a.in_edges)
            pa_out += f.source_port == p;
        for (const auto& [id, e] : b.out_edges)
            qb_in += e.target_port == q;
        for (const auto& [id, f] : b.in_edges)
            qb_out += f.source_port == q;
        return pa_in == qb_in && pa_out == qb_out;
    }

    bool assign_ports(std::size_t i) {
        if (i == sa.ports.size())
            return true;
        const Id& p = sa.ports[i];
        for (const Id& q : sb.ports) {
            if (used_ports.count(q) || !port_compatible(p, q))
                continue;
            port_map[p] = q;
            used_ports.insert(q);
            if (assign_ports(i + 1))
                return true;
            port_map.erase(p);
            used_ports.erase(q);
        }
        return false;
    }
};

} // namespace

std::optional<ComputonMorphism> find_isomorphism(const Computon& a, const Computon& b) {
    if (a.units.size() != b.units.size() || a.ports.size() != b.ports.size() ||
        a.out_edges.size() != b.out_edges.size() || a.in_edges.size() != b.in_edges.size() ||
        a.colours != b.colours)
        return std::nullopt;

    std::multiset<Colour> pa, pb;
    for (const auto& [id, colour] : a.ports)
        pa.insert(colour);
    for (const auto& [id, colour] : b.ports)
        pb.insert(colour);
    if (pa != pb)
        return std::nullopt;

    Search search(a, b);
    if (!search.assign_units(0))
        return std::nullopt;

    ComputonMorphism m;
    m.source = a;
    m.target = b;
    m.unit_map = search.unit_map;
    m.port_map = search.port_map;
    // Unit and port maps force the edge bijection bucket by bucket; buckets
    // are paired in sorted order to stay deterministic.
    for (const auto& [pair, ids] : search.sa.out_by_pair) {
        const auto& [u, p] = pair;
        const auto& other = search.sb.out_by_pair.at({m.unit_map.at(u), m.port_map.at(p)});
        for (std::size_t i = 0; i < ids.size(); ++i)
            m.out_edge_map[ids[i]] = other[i];
    }
    for (const auto& [pair, ids] : search.sa.in_by_pair) {
        const auto& [p, u] = pair;
        const auto& other = search.sb.in_by_pair.at({m.port_map.at(p), m.unit_map.at(u)});
        for (std::size_t i = 0; i < ids.size(); ++i)
            m.in_edge_map[ids[i]] = other[i];
    }

    if (!validate_morphism(m).ok())
        return std::nullopt;
    return m;
}

} // namespace computon
