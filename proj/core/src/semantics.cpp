#include "computon/semantics.hpp"

#include <random>
#include <sstream>

#include "computon/interface.hpp"

namespace computon {

std::string to_string(Termination t) {
    return t == Termination::quiescent ? "quiescent" : "step-limit";
}

std::size_t MarkedComputon::tokens_on(const Id& port) const {
    auto it = queues.find(port);
    return it == queues.end() ? 0 : it->second.size();
}

MarkedComputon make_marking(const Computon& c,
                            const std::vector<std::pair<Id, unsigned>>& assignment) {
    MarkedComputon m;
    m.computon = c;
    for (const auto& [port, count] : assignment) {
        Colour colour = c.colour_of(port);  // throws on unknown port
        for (unsigned i = 0; i < count; ++i) {
            Id id = "t0." + port;
            if (m.tokens_on(port) > 0)
                id += "." + std::to_string(m.tokens_on(port) + 1);
            m.tokens.emplace(id, Token{id, colour, port});
            m.queues[port].push_back(id);
        }
    }
    return m;
}

std::set<Id> enabled_transitions(const MarkedComputon& m) {
    std::set<Id> enabled;
    for (const Id& u : m.computon.units) {
        bool ok = true;
        for (const Id& p : unit_pre_set(m.computon, u))
            ok = ok && m.tokens_on(p) > 0;
        if (ok)
            enabled.insert(u);
    }
    return enabled;
}

std::pair<MarkedComputon, FiringEvent> fire(const MarkedComputon& m, const Id& unit) {
    if (!m.computon.has_unit(unit))
        throw ElementNotFoundError("unknown unit '" + unit + "'");
    if (!enabled_transitions(m).count(unit))
        throw FiringError("unit '" + unit + "' is not enabled");

    MarkedComputon next = m;
    FiringEvent event;
    event.step = m.next_step;
    event.unit = unit;

    for (const Id& p : unit_pre_set(m.computon, unit)) {
        Id token = next.queues[p].front();
        next.queues[p].pop_front();
        if (next.queues[p].empty())
            next.queues.erase(p);
        next.tokens.erase(token);
        event.consumed[p] = token;
    }
    for (const Id& p : unit_post_set(m.computon, unit)) {
        Id token = "t" + std::to_string(event.step) + "." + p;
        next.tokens.emplace(token, Token{token, m.computon.colour_of(p), p});
        next.queues[p].push_back(token);
        event.produced[p] = token;
    }
    next.next_step = m.next_step + 1;
    return {next, event};
}

Trace run(const MarkedComputon& m, RunPolicy policy, std::uint64_t step_limit) {
    Trace trace;
    trace.initial = m;

    std::mt19937_64 rng(policy.seed);
    MarkedComputon current = m;
    for (std::uint64_t i = 0; i < step_limit; ++i) {
        std::set<Id> enabled = enabled_transitions(current);
        if (enabled.empty()) {
            trace.termination = Termination::quiescent;
            trace.final_marking = current;
            return trace;
        }
        Id chosen;
        if (policy.kind == RunPolicy::Kind::least_id) {
            chosen = *enabled.begin();
        } else {
            std::vector<Id> pool(enabled.begin(), enabled.end());
            chosen = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
        }
        auto [next, event] = fire(current, chosen);
        current = std::move(next);
        trace.events.push_back(std::move(event));
    }
    trace.termination =
        enabled_transitions(current).empty() ? Termination::quiescent : Termination::step_limit;
    trace.final_marking = current;
    return trace;
}

std::string format_event(const FiringEvent& event) {
    std::ostringstream out;
    out << event.step << " " << event.unit << " consumed{";
    bool first = true;
    for (const auto& [port, token] : event.consumed) {
        out << (first ? "" : ",") << port << ":" << token;
        first = false;
    }
    out << "} produced{";
    first = true;
    for (const auto& [port, token] : event.produced) {
        out << (first ? "" : ",") << port << ":" << token;
        first = false;
    }
    out << "}";
    return out.str();
}

std::string format_trace(const Trace& trace) {
    std::ostringstream out;
    for (const FiringEvent& event : trace.events)
        out << format_event(event) << "\n";
    return out.str();
}

} // namespace computon
