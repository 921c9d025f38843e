#include "computon/build.hpp"

#include <algorithm>

namespace computon {

namespace {

Id numbered(const char* prefix, std::size_t n) {
    return prefix + std::to_string(n);
}

} // namespace

Computon make_unit() {
    Computon c;
    c.add_port("p1", Colour{0});
    return c;
}

Computon make_fork() {
    Computon c;
    c.add_unit("u1");
    c.add_port("p1", Colour{0});
    c.add_port("p2", Colour{0});
    c.add_port("p3", Colour{0});
    c.add_in_edge("f1", "p1", "u1");
    c.add_out_edge("e1", "u1", "p2");
    c.add_out_edge("e2", "u1", "p3");
    return c;
}

Computon make_join() {
    Computon c;
    c.add_unit("u1");
    c.add_port("p1", Colour{0});
    c.add_port("p2", Colour{0});
    c.add_port("p3", Colour{0});
    c.add_in_edge("f1", "p1", "u1");
    c.add_in_edge("f2", "p2", "u1");
    c.add_out_edge("e1", "u1", "p3");
    return c;
}

Computon make_glue() {
    Computon c;
    c.add_unit("u1");
    c.add_port("p1", Colour{0});
    c.add_port("p2", Colour{0});
    c.add_in_edge("f1", "p1", "u1");
    c.add_out_edge("e1", "u1", "p2");
    return c;
}

Computon make_trivial(const std::vector<Colour>& port_colours) {
    bool has_control = std::any_of(port_colours.begin(), port_colours.end(),
                                   [](Colour c) { return c.is_control(); });
    if (!has_control)
        throw InvalidColourError("a trivial computon needs at least one colour-0 port");
    Computon c;
    std::size_t n = 1;
    for (Colour colour : port_colours)
        c.add_port(numbered("p", n++), colour);
    return c;
}

Computon make_functional(const std::vector<Colour>& in_colours,
                         const std::vector<Colour>& out_colours) {
    auto check = [](const std::vector<Colour>& list) {
        for (Colour c : list)
            if (c.is_control())
                throw InvalidColourError("data colour lists must not contain colour 0");
    };
    check(in_colours);
    check(out_colours);

    Computon c;
    c.add_unit("u1");
    std::size_t np = 1, ne = 1, nf = 1;

    Id q_in = numbered("p", np++);
    c.add_port(q_in, Colour{0});
    c.add_in_edge(numbered("f", nf++), q_in, "u1");
    for (Colour colour : in_colours) {
        Id p = numbered("p", np++);
        c.add_port(p, colour);
        c.add_in_edge(numbered("f", nf++), p, "u1");
    }

    Id q_out = numbered("p", np++);
    c.add_port(q_out, Colour{0});
    c.add_out_edge(numbered("e", ne++), "u1", q_out);
    for (Colour colour : out_colours) {
        Id p = numbered("p", np++);
        c.add_port(p, colour);
        c.add_out_edge(numbered("e", ne++), "u1", p);
    }
    return c;
}

} // namespace computon
