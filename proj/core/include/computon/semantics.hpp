#ifndef COMPUTON_SEMANTICS_HPP
#define COMPUTON_SEMANTICS_HPP

#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include "computon/computon.hpp"

namespace computon {

class FiringError : public Error {
public:
    using Error::Error;
};

// Tokens carry the colour of the place they sit on; a colour-0 token is a
// control token, anything else a data token.
struct Token {
    Id id;
    Colour colour;
    Id location;

    bool operator==(const Token&) const = default;
};

// A computon plus a marking. Tokens queue per port in arrival order and are
// consumed oldest first. Values are immutable; fire/run return new ones.
struct MarkedComputon {
    Computon computon;
    std::map<Id, Token> tokens;            // token id -> token
    std::map<Id, std::deque<Id>> queues;   // port -> token ids, FIFO
    std::uint64_t next_step = 1;           // numbers fresh token ids

    bool operator==(const MarkedComputon&) const = default;

    std::size_t tokens_on(const Id& port) const;
    std::size_t token_count() const { return tokens.size(); }
};

struct FiringEvent {
    std::uint64_t step = 0;
    Id unit;
    std::map<Id, Id> consumed;  // port -> token id, one per pre-set port
    std::map<Id, Id> produced;  // port -> token id, one per post-set port

    bool operator==(const FiringEvent&) const = default;
};

enum class Termination { quiescent, step_limit };

std::string to_string(Termination t);

struct Trace {
    MarkedComputon initial;
    std::vector<FiringEvent> events;
    MarkedComputon final_marking;
    Termination termination = Termination::quiescent;
};

// Places `count` fresh tokens on each listed port, coloured like the port.
// Unknown ports throw ElementNotFoundError.
MarkedComputon make_marking(const Computon& c, const std::vector<std::pair<Id, unsigned>>& assignment);

// Units whose every pre-set port holds at least one token. Colour fit is
// automatic: tokens always carry their port's colour.
std::set<Id> enabled_transitions(const MarkedComputon& m);

// Consumes the oldest token on each pre-set port of `unit` and produces one
// fresh token on each post-set port. Parallel edges do not multiply
// consumption; one token moves per distinct place. Throws
// FiringError if the unit is not enabled.
std::pair<MarkedComputon, FiringEvent> fire(const MarkedComputon& m, const Id& unit);

struct RunPolicy {
    enum class Kind { least_id, seeded_random } kind = Kind::least_id;
    std::uint64_t seed = 0;

    static RunPolicy least_id() { return {Kind::least_id, 0}; }
    static RunPolicy seeded_random(std::uint64_t seed) { return {Kind::seeded_random, seed}; }
};

// Fires one enabled unit per step, chosen by the policy, until quiescence or
// the step limit. Identical inputs give identical traces.
Trace run(const MarkedComputon& m, RunPolicy policy = RunPolicy::least_id(),
          std::uint64_t step_limit = 10000);

// One event per line: step unit consumed{port:token,...} produced{port:token,...}
std::string format_trace(const Trace& trace);
std::string format_event(const FiringEvent& event);

} // namespace computon

#endif
