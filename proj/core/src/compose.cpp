#include <algorithm>

#include "computon/build.hpp"
#include "computon/classify.hpp"
#include "computon/compose.hpp"
#include "computon/interface.hpp"
#include "span_check.hpp"

namespace computon {

std::string to_string(SequencingMode mode) {
    return mode == SequencingMode::total ? "total" : "partial";
}

SequentialCheck check_sequential(const Span& s) {
    detail::require_valid_span(s);
    SequentialCheck check;
    auto reject = [&](std::string why) {
        check.accepted = false;
        check.rejection = std::move(why);
        return check;
    };

    if (!is_trivial(s.apex))
        return reject("(i) the apex is not a trivial computon");

    std::set<Id> grows = i_vector(s.left);   // apex ports gaining a producer on the left
    std::set<Id> feeds = o_vector(s.right);  // apex ports gaining a consumer on the right
    for (const auto& [z, colour] : s.apex.ports) {
        (void)colour;
        if (!grows.count(z) || !feeds.count(z))
            return reject("(i) apex port '" + z +
                          "' is not fused: it must gain a producer on the left and a consumer on the right");
    }

    if (!is_connected(s.left.target))
        return reject("(ii) the left operand is not connected");
    if (!is_connected(s.right.target))
        return reject("(ii) the right operand is not connected");

    Interface left_iface = interface_of(s.left.target);
    Interface right_iface = interface_of(s.right.target);
    std::set<Id> left_images, right_images;
    for (const Id& z : feeds) {
        Id p = s.left.port_image(z);
        left_images.insert(p);
        if (!left_iface.e_outports.count(p))
            return reject("(iii) apex port '" + z + "' lands on '" + p +
                          "', which is not an e-outport of the left operand");
    }
    for (const Id& z : grows) {
        Id p = s.right.port_image(z);
        right_images.insert(p);
        if (!right_iface.e_inports.count(p))
            return reject("(iv) apex port '" + z + "' lands on '" + p +
                          "', which is not an e-inport of the right operand");
    }

    SequencingReport report;
    report.mode = (left_images == left_iface.e_outports && right_images == right_iface.e_inports)
                      ? SequencingMode::total
                      : SequencingMode::partial;
    for (const auto& [z, colour] : s.apex.ports) {
        (void)colour;
        report.fused_ports.emplace_back(s.left.port_image(z), s.right.port_image(z));
    }
    std::sort(report.fused_ports.begin(), report.fused_ports.end());

    check.accepted = true;
    check.report = report;
    return check;
}

SequentialResult sequential_compose(const Computon& l, const Computon& r,
                                    const std::vector<std::pair<Id, Id>>& pairing) {
    if (!validate_computon(l).ok())
        throw MalformedInputError("left operand is not a valid computon");
    if (!validate_computon(r).ok())
        throw MalformedInputError("right operand is not a valid computon");
    if (!is_connected(l))
        throw NotSequentiableError("left operand is not connected");
    if (!is_connected(r))
        throw NotSequentiableError("right operand is not connected");

    std::vector<std::pair<Id, Id>> pairs = pairing;
    if (pairs.empty()) {
        // The witness pairing that exists for any connected operands: fuse
        // the least control ports facing each other. Validation above
        // guarantees both sets are non-empty.
        pairs.emplace_back(*ec_outports(l).begin(), *ec_inports(r).begin());
    }

    std::set<Id> seen_left, seen_right;
    bool any_control = false;
    for (const auto& [lp, rp] : pairs) {
        if (!l.has_port(lp))
            throw ElementNotFoundError("unknown left port '" + lp + "'");
        if (!r.has_port(rp))
            throw ElementNotFoundError("unknown right port '" + rp + "'");
        if (l.colour_of(lp) != r.colour_of(rp))
            throw InvalidPairingError("pair (" + lp + ", " + rp + ") fuses ports of different colours");
        if (!seen_left.insert(lp).second || !seen_right.insert(rp).second)
            throw InvalidPairingError("pairing repeats a port");
        any_control = any_control || l.colour_of(lp).is_control();
    }
    if (!any_control)
        throw NotSequentiableError(
            "(i) the apex would not be a valid trivial computon: the pairing fuses no control ports");

    SequentialResult out;
    Span& span = out.span;
    std::sort(pairs.begin(), pairs.end());
    std::size_t n = 1;
    for (const auto& [lp, rp] : pairs) {
        Id z = "a" + std::to_string(n++);
        span.apex.add_port(z, l.colour_of(lp));
        span.left.port_map[z] = lp;
        span.right.port_map[z] = rp;
    }
    span.left.source = span.apex;
    span.left.target = l;
    span.right.source = span.apex;
    span.right.target = r;

    SequentialCheck check = check_sequential(span);
    if (!check.accepted)
        throw NotSequentiableError(check.rejection);

    out.pushout = pushout(span);
    out.report = *check.report;
    return out;
}

const Computon& ParallelResult::object(const std::string& name) const {
    for (const auto& [n, c] : objects)
        if (n == name)
            return c;
    throw ElementNotFoundError("no such assembly object '" + name + "'");
}

const ComputonMorphism& ParallelResult::morphism(const std::string& name) const {
    for (const auto& [n, m] : morphisms)
        if (n == name)
            return m;
    throw ElementNotFoundError("no such assembly morphism '" + name + "'");
}

namespace {

// Induced arrow out of a coproduct: acts as `on_left` on one summand and
// `on_right` on the other. Both must land in the same target.
ComputonMorphism from_coproduct(const CoproductResult& cp, const ComputonMorphism& on_left,
                                const ComputonMorphism& on_right) {
    ComputonMorphism m;
    m.source = cp.result;
    m.target = on_left.target;
    auto splice = [](std::map<Id, Id>& out, const std::map<Id, Id>& inj, const std::map<Id, Id>& arm) {
        for (const auto& [x, cx] : inj)
            out[cx] = arm.at(x);
    };
    splice(m.unit_map, cp.left_inj.unit_map, on_left.unit_map);
    splice(m.unit_map, cp.right_inj.unit_map, on_right.unit_map);
    splice(m.port_map, cp.left_inj.port_map, on_left.port_map);
    splice(m.port_map, cp.right_inj.port_map, on_right.port_map);
    splice(m.out_edge_map, cp.left_inj.out_edge_map, on_left.out_edge_map);
    splice(m.out_edge_map, cp.right_inj.out_edge_map, on_right.out_edge_map);
    splice(m.in_edge_map, cp.left_inj.in_edge_map, on_left.in_edge_map);
    splice(m.in_edge_map, cp.right_inj.in_edge_map, on_right.in_edge_map);
    return m;
}

// Transport a morphism along an isomorphism of its source.
ComputonMorphism precompose_iso(const ComputonMorphism& m, const ComputonMorphism& iso_inverse) {
    return compose_morphisms(m, iso_inverse);
}

} // namespace

ParallelResult parallel_compose(const Computon& a, const Computon& b) {
    if (!validate_computon(a).ok())
        throw MalformedInputError("first operand is not a valid computon");
    if (!validate_computon(b).ok())
        throw MalformedInputError("second operand is not a valid computon");
    if (!is_connected(a))
        throw NotParallelisableError("first operand is not connected");
    if (!is_connected(b))
        throw NotParallelisableError("second operand is not connected");

    Computon fork_a = make_fork(), fork_b = make_fork();
    Computon join_a = make_join(), join_b = make_join();

    Id entry_a = *ec_inports(a).begin();
    Id exit_a = *ec_outports(a).begin();
    Id entry_b = *ec_inports(b).begin();
    Id exit_b = *ec_outports(b).begin();

    // One chain per operand: fork outport #1 feeds a, a feeds join inport #1;
    // the b chain takes outport #2 and inport #2 so that the final gluing
    // never reuses a fork outport or a join inport.
    SequentialResult a_then_join = sequential_compose(a, join_a, {{exit_a, "p1"}});
    SequentialResult fork_then_a = sequential_compose(fork_a, a, {{"p2", entry_a}});
    SequentialResult fork_then_b = sequential_compose(fork_b, b, {{"p3", entry_b}});
    SequentialResult b_then_join = sequential_compose(b, join_b, {{exit_b, "p2"}});

    Span chain_a_span{a, a_then_join.pushout.left_inj, fork_then_a.pushout.right_inj};
    PushoutResult chain_a = pushout(chain_a_span);
    Span chain_b_span{b, fork_then_b.pushout.right_inj, b_then_join.pushout.left_inj};
    PushoutResult chain_b = pushout(chain_b_span);

    CoproductResult fj = coproduct(join_a, fork_b);

    // join_a and join_b (resp. fork_a and fork_b) are built by the same
    // constructor, so the identity on identifiers is the isomorphism that
    // aligns them.
    ComputonMorphism join_ids = identity_morphism(join_a);
    join_ids.target = join_b;
    ComputonMorphism fork_ids = identity_morphism(fork_b);
    fork_ids.target = fork_a;

    ComputonMorphism join_into_chain_a =
        compose_morphisms(chain_a.left_inj, a_then_join.pushout.right_inj);
    ComputonMorphism fork_into_chain_a = precompose_iso(
        compose_morphisms(chain_a.right_inj, fork_then_a.pushout.left_inj), fork_ids);
    ComputonMorphism fork_into_chain_b =
        compose_morphisms(chain_b.left_inj, fork_then_b.pushout.left_inj);
    ComputonMorphism join_into_chain_b = precompose_iso(
        compose_morphisms(chain_b.right_inj, b_then_join.pushout.right_inj), join_ids);

    ComputonMorphism glue_left = from_coproduct(fj, join_into_chain_a, fork_into_chain_a);
    ComputonMorphism glue_right = from_coproduct(fj, join_into_chain_b, fork_into_chain_b);

    // The fork outports consumed by the two chains must differ, and likewise
    // the join inports fed by them.
    {
        std::set<Id> left_feeds = o_vector(glue_left), right_feeds = o_vector(glue_right);
        std::set<Id> left_grows = i_vector(glue_left), right_grows = i_vector(glue_right);
        for (const Id& z : left_feeds)
            if (right_feeds.count(z))
                throw Error("parallel assembly wired one fork outport into both operands");
        for (const Id& z : left_grows)
            if (right_grows.count(z))
                throw Error("parallel assembly wired one join inport from both operands");
    }

    Span final_span{fj.result, glue_left, glue_right};
    PushoutResult fin = pushout(final_span);

    ParallelResult out;
    out.result = fin.result;
    out.objects = {
        {"a", a},
        {"b", b},
        {"fork-a", fork_a},
        {"join-a", join_a},
        {"fork-b", fork_b},
        {"join-b", join_b},
        {"apex-a-exit", a_then_join.span.apex},
        {"apex-a-entry", fork_then_a.span.apex},
        {"apex-b-entry", fork_then_b.span.apex},
        {"apex-b-exit", b_then_join.span.apex},
        {"a-then-join", a_then_join.pushout.result},
        {"fork-then-a", fork_then_a.pushout.result},
        {"chain-a", chain_a.result},
        {"fork-then-b", fork_then_b.pushout.result},
        {"b-then-join", b_then_join.pushout.result},
        {"chain-b", chain_b.result},
        {"fork-plus-join", fj.result},
        {"result", fin.result},
    };
    out.morphisms = {
        {"apex-a-exit->join-a", a_then_join.span.right},
        {"apex-a-exit->a", a_then_join.span.left},
        {"apex-a-entry->a", fork_then_a.span.right},
        {"apex-a-entry->fork-a", fork_then_a.span.left},
        {"join-a->a-then-join", a_then_join.pushout.right_inj},
        {"a->a-then-join", a_then_join.pushout.left_inj},
        {"a->fork-then-a", fork_then_a.pushout.right_inj},
        {"fork-a->fork-then-a", fork_then_a.pushout.left_inj},
        {"a-then-join->chain-a", chain_a.left_inj},
        {"fork-then-a->chain-a", chain_a.right_inj},
        {"apex-b-entry->fork-b", fork_then_b.span.left},
        {"apex-b-entry->b", fork_then_b.span.right},
        {"apex-b-exit->b", b_then_join.span.left},
        {"apex-b-exit->join-b", b_then_join.span.right},
        {"fork-b->fork-then-b", fork_then_b.pushout.left_inj},
        {"b->fork-then-b", fork_then_b.pushout.right_inj},
        {"b->b-then-join", b_then_join.pushout.left_inj},
        {"join-b->b-then-join", b_then_join.pushout.right_inj},
        {"fork-then-b->chain-b", chain_b.left_inj},
        {"b-then-join->chain-b", chain_b.right_inj},
        {"join-a->fork-plus-join", fj.left_inj},
        {"fork-b->fork-plus-join", fj.right_inj},
        {"fork-plus-join->chain-a", glue_left},
        {"fork-plus-join->chain-b", glue_right},
        {"chain-a->result", fin.left_inj},
        {"chain-b->result", fin.right_inj},
    };

    // Re-validate the whole assembly; a failure here is a bug, not bad input.
    for (const auto& [name, obj] : out.objects)
        if (!validate_computon(obj).ok())
            throw Error("parallel assembly produced an invalid computon at '" + name + "'");
    for (const auto& [name, m] : out.morphisms)
        if (!validate_morphism(m).ok())
            throw Error("parallel assembly produced an invalid morphism at '" + name + "'");

    return out;
}

} // namespace computon
