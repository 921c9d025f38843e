#ifndef COMPUTON_TESTS_ORACLES_HPP
#define COMPUTON_TESTS_ORACLES_HPP

#include <map>
#include <vector>

#include <computon/computon.hpp>
#include <computon/interface.hpp>

namespace oracles {

using namespace computon;

// Directed reachability by boolean matrix closure over the combined
// port/unit node set. Deliberately a different algorithm from the library's
// search so the two can check each other.
struct ReachOracle {
    std::map<Id, std::size_t> port_index;
    std::map<Id, std::size_t> unit_index;
    std::vector<std::vector<bool>> reach;  // closure of one-step edges

    explicit ReachOracle(const Computon& c) {
        std::size_t n = 0;
        for (const auto& [p, colour] : c.ports) {
            (void)colour;
            port_index[p] = n++;
        }
        for (const Id& u : c.units)
            unit_index[u] = n++;
        reach.assign(n, std::vector<bool>(n, false));
        for (const auto& [id, f] : c.in_edges)
            reach[port_index.at(f.source_port)][unit_index.at(f.target_unit)] = true;
        for (const auto& [id, e] : c.out_edges)
            reach[unit_index.at(e.source_unit)][port_index.at(e.target_port)] = true;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) {
                if (!reach[i][k])
                    continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (reach[k][j])
                        reach[i][j] = true;
            }
    }

    // Path of length >= 1 between two ports.
    bool flows(const Id& from, const Id& to) const {
        return reach[port_index.at(from)][port_index.at(to)];
    }
};

// Undirected port/unit components via union-find; again independent of the
// BFS the library runs.
struct ComponentOracle {
    std::map<Id, std::size_t> port_index;
    std::map<Id, std::size_t> unit_index;
    std::vector<std::size_t> parent;

    std::size_t find(std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }

    explicit ComponentOracle(const Computon& c) {
        std::size_t n = 0;
        for (const auto& [p, colour] : c.ports) {
            (void)colour;
            port_index[p] = n++;
        }
        for (const Id& u : c.units)
            unit_index[u] = n++;
        parent.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            parent[i] = i;
        auto join = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
        for (const auto& [id, f] : c.in_edges)
            join(port_index.at(f.source_port), unit_index.at(f.target_unit));
        for (const auto& [id, e] : c.out_edges)
            join(unit_index.at(e.source_unit), port_index.at(e.target_port));
    }

    bool isolated(const Id& port) { return find(port_index.at(port)) == port_index.at(port); }

    bool same_component(const Id& p, const Id& q) {
        return find(port_index.at(p)) == find(port_index.at(q));
    }

    // The pairwise e-in/e-out condition, stated through components: ports
    // joined by some edge path, both carrying at least one edge. Vacuously
    // true when either interface side is empty.
    bool connected(const Computon& c) {
        Interface iface = interface_of(c);
        std::map<Id, bool> has_edge;
        for (const auto& [id, f] : c.in_edges)
            has_edge[f.source_port] = true;
        for (const auto& [id, e] : c.out_edges)
            has_edge[e.target_port] = true;
        for (const Id& p : iface.e_inports)
            for (const Id& q : iface.e_outports) {
                if (!has_edge[p] || !has_edge[q])
                    return false;
                if (!same_component(p, q))
                    return false;
            }
        return true;
    }
};

} // namespace oracles

#endif
