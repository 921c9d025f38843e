#ifndef COMPUTON_COMPOSE_HPP
#define COMPUTON_COMPOSE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "computon/morphism.hpp"

namespace computon {

class InvalidSpanError : public Error {
public:
    using Error::Error;
};

class PushoutUndefinedError : public Error {
public:
    using Error::Error;
};

class NotSequentiableError : public Error {
public:
    using Error::Error;
};

class InvalidPairingError : public Error {
public:
    using Error::Error;
};

class NotParallelisableError : public Error {
public:
    using Error::Error;
};

class CapacityError : public Error {
public:
    using Error::Error;
};

// Two morphisms out of a common apex.
struct Span {
    Computon apex;
    ComputonMorphism left;   // apex -> L
    ComputonMorphism right;  // apex -> R

    bool operator==(const Span&) const = default;
};

// Origins of each glued element, per element kind. Values are qualified
// "L:<id>" / "R:<id>"; a merged element lists both.
struct ElementProvenance {
    std::map<Id, std::vector<Id>> units;
    std::map<Id, std::vector<Id>> ports;
    std::map<Id, std::vector<Id>> out_edges;
    std::map<Id, std::vector<Id>> in_edges;
};

struct PushoutResult {
    Computon result;
    ComputonMorphism left_inj;   // L -> result
    ComputonMorphism right_inj;  // R -> result
    ElementProvenance provenance;
};

struct PushabilityReport {
    bool pushable = false;
    std::vector<std::string> violations;
};

// Checks the boundary inclusions that admit a pushout: ports of the apex
// that grow on one side must land on external ports of the other side.
// Throws InvalidSpanError when the span itself is malformed (legs that do
// not validate or do not share the apex).
PushabilityReport is_pushable(const Span& s);

// Componentwise gluing in Set, with no pushability guard: disjoint union
// quotiented by the apex identifications. Merged elements are named
// "L.<x>=R.<y>"; unmerged ones keep an "L."/"R." prefix. Fails to be a
// pushout of computons exactly when the span is not pushable; callers
// wanting the guarded operation use pushout().
PushoutResult raw_pushout(const Span& s);

// Guarded gluing; throws PushoutUndefinedError when the span is not pushable.
PushoutResult pushout(const Span& s);

// Exhaustively determines whether exactly one mediating morphism
// po.result -> candidate makes both triangles commute, deciding each
// element's image from the commutation constraints. Returns false when the
// candidate morphisms do not form a commuting cocone over the span. Spans
// whose operands exceed 10 ports throw CapacityError; this is an analysis
// oracle, not a production path.
bool verify_universal_property(const Span& s, const PushoutResult& po,
                               const Computon& candidate,
                               const ComputonMorphism& candidate_left,
                               const ComputonMorphism& candidate_right);

struct CoproductResult {
    Computon result;
    ComputonMorphism left_inj;
    ComputonMorphism right_inj;
};

// Disjoint union; colour sets merge by union. Both injections have empty
// growth vectors.
CoproductResult coproduct(const Computon& a, const Computon& b);

enum class SequencingMode { total, partial };

std::string to_string(SequencingMode mode);

struct SequencingReport {
    SequencingMode mode = SequencingMode::partial;
    // (left e-outport, right e-inport), one pair per apex port.
    std::vector<std::pair<Id, Id>> fused_ports;
};

struct SequentialCheck {
    bool accepted = false;
    std::string rejection;  // names the violated condition (i)..(iv)
    std::optional<SequencingReport> report;
};

// Decides whether the pushout of the span forms a sequential computon:
//   (i)   the apex is trivial and every apex port is fused (it gains a
//         producer on the left and a consumer on the right),
//   (ii)  both operands are connected,
//   (iii) apex ports land on e-outports of the left operand,
//   (iv)  apex ports land on e-inports of the right operand.
// The mode is total when the fused ports exhaust the left e-outports and the
// right e-inports, partial otherwise.
SequentialCheck check_sequential(const Span& s);

struct SequentialResult {
    Span span;
    PushoutResult pushout;
    SequencingReport report;
};

// Fuses e-outports of `l` with colour-matching e-inports of `r` over a fresh
// trivial apex and computes the pushout. Without an explicit pairing, the
// lexicographically least control ports on each side are fused, which exists
// for any pair of connected operands.
SequentialResult sequential_compose(const Computon& l, const Computon& r,
                                    const std::vector<std::pair<Id, Id>>& pairing = {});

// The full assembly record of a parallel composition: every intermediate
// object and arrow, by role name.
struct ParallelResult {
    Computon result;
    std::vector<std::pair<std::string, Computon>> objects;
    std::vector<std::pair<std::string, ComputonMorphism>> morphisms;

    const Computon& object(const std::string& name) const;
    const ComputonMorphism& morphism(const std::string& name) const;
};

// Places two connected computons between a fresh fork and join: each operand
// hangs off its own fork outport and feeds its own join inport, the two
// fork/join chains are merged over their operands, and the chains are glued
// over a fork+join coproduct. Operand `a` always takes the first fork
// outport and the first join inport, so output is deterministic;
// commutativity holds up to isomorphism only.
ParallelResult parallel_compose(const Computon& a, const Computon& b);

} // namespace computon

#endif
