#ifndef COMPUTON_TESTS_FIXTURES_HPP
#define COMPUTON_TESTS_FIXTURES_HPP

#include <computon/compose.hpp>
#include <computon/computon.hpp>
#include <computon/morphism.hpp>

namespace fixtures {

using namespace computon;

// One unit u; control ports q0 (in) and q1 (out); data inports i1:1, i2:2;
// data outports o1:3, o2:4.
inline Computon lambda1() {
    Computon c;
    c.add_unit("u");
    c.add_port("q0", Colour{0});
    c.add_port("i1", Colour{1});
    c.add_port("i2", Colour{2});
    c.add_port("q1", Colour{0});
    c.add_port("o1", Colour{3});
    c.add_port("o2", Colour{4});
    c.add_in_edge("f1", "q0", "u");
    c.add_in_edge("f2", "i1", "u");
    c.add_in_edge("f3", "i2", "u");
    c.add_out_edge("e1", "u", "q1");
    c.add_out_edge("e2", "u", "o1");
    c.add_out_edge("e3", "u", "o2");
    return c;
}

// One unit v; control ports r0 (in) and r1 (out); data inports j1:3, j2:4;
// data outport w1:5.
inline Computon lambda2() {
    Computon c;
    c.add_unit("v");
    c.add_port("r0", Colour{0});
    c.add_port("j1", Colour{3});
    c.add_port("j2", Colour{4});
    c.add_port("r1", Colour{0});
    c.add_port("w1", Colour{5});
    c.add_in_edge("f1", "r0", "v");
    c.add_in_edge("f2", "j1", "v");
    c.add_in_edge("f3", "j2", "v");
    c.add_out_edge("e1", "v", "r1");
    c.add_out_edge("e2", "v", "w1");
    return c;
}

// Trivial apex with a control port a and a colour-3 port b.
inline Computon apex0() {
    Computon c;
    c.add_port("a", Colour{0});
    c.add_port("b", Colour{3});
    return c;
}

// a |-> q1, b |-> o1: the apex lands on e-outports of lambda1.
inline ComputonMorphism apex0_into_lambda1() {
    ComputonMorphism m;
    m.source = apex0();
    m.target = lambda1();
    m.port_map = {{"a", "q1"}, {"b", "o1"}};
    return m;
}

// a |-> r0, b |-> j1: the apex lands on e-inports of lambda2.
inline ComputonMorphism apex0_into_lambda2() {
    ComputonMorphism m;
    m.source = apex0();
    m.target = lambda2();
    m.port_map = {{"a", "r0"}, {"b", "j1"}};
    return m;
}

inline Span fig4_span() {
    return Span{apex0(), apex0_into_lambda1(), apex0_into_lambda2()};
}

} // namespace fixtures

#endif
