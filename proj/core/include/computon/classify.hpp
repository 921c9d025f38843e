#ifndef COMPUTON_CLASSIFY_HPP
#define COMPUTON_CLASSIFY_HPP

#include <string>

#include "computon/computon.hpp"

namespace computon {

// Most specific class first within each family: unit refines trivial, glue
// refines functional.
enum class ComputonClass {
    trivial,
    unit,
    primitive_fork,
    primitive_join,
    primitive_functional,
    primitive_glue,
    primitive_other,
    composite_or_other,
};

std::string to_string(ComputonClass cls);

ComputonClass classify(const Computon& c);

bool is_trivial(const Computon& c);
bool is_primitive(const Computon& c);

} // namespace computon

#endif
