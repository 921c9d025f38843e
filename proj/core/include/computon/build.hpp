#ifndef COMPUTON_BUILD_HPP
#define COMPUTON_BUILD_HPP

#include <vector>

#include "computon/computon.hpp"

namespace computon {

// Canonical constructors. Identifiers are generated deterministically as
// u1,u2,... / p1,p2,... / e1,e2,... / f1,f2,... so that two calls with equal
// arguments produce structurally equal values.

// Trivial computon with a single control port.
Computon make_unit();

// One control inport duplicated into two control outports.
Computon make_fork();

// Two control inports merged into one control outport.
Computon make_join();

// One control inport echoed into one control outport.
Computon make_glue();

// Trivial computon with one port per listed colour. The list must mention
// colour 0 at least once; throws InvalidColourError otherwise.
Computon make_trivial(const std::vector<Colour>& port_colours);

// Single unit with one control inport, one control outport, and the listed
// data ports around it. Throws InvalidColourError if a list contains 0.
Computon make_functional(const std::vector<Colour>& in_colours,
                         const std::vector<Colour>& out_colours);

} // namespace computon

#endif
