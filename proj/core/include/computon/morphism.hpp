#ifndef COMPUTON_MORPHISM_HPP
#define COMPUTON_MORPHISM_HPP

#include <map>
#include <optional>
#include <set>

#include "computon/computon.hpp"
#include "computon/validate.hpp"

namespace computon {

class CompositionMismatchError : public Error {
public:
    using Error::Error;
};

// A structure-preserving embedding of one computon into another: four
// componentwise injections plus an implicit colour inclusion. The colour
// component is never stored; validity demands it be an inclusion, so it is
// checked as a subset relation together with colour preservation.
struct ComputonMorphism {
    Computon source;
    Computon target;
    std::map<Id, Id> unit_map;
    std::map<Id, Id> port_map;
    std::map<Id, Id> out_edge_map;
    std::map<Id, Id> in_edge_map;

    bool operator==(const ComputonMorphism&) const = default;

    // Lookups; throw ElementNotFoundError when the element has no image.
    const Id& unit_image(const Id& u) const;
    const Id& port_image(const Id& p) const;
    const Id& out_edge_image(const Id& e) const;
    const Id& in_edge_image(const Id& f) const;

    std::set<Id> port_image_of(const std::set<Id>& ports) const;
    std::set<Id> unit_image_of(const std::set<Id>& units) const;

    // Preimage of a target port set.
    std::set<Id> port_preimage_of(const std::set<Id>& target_ports) const;
};

// Checks, in order: totality over the source (missing or unknown elements
// throw MalformedInputError), then injectivity per component
// (unit-map-injective, ...), colour-inclusion, the five commuting squares
// (colour-square, sigma-square, tau-square, t-square, s-square) and the
// boundary condition (clause "boundary"): ports whose image gains producers
// or consumers must be external in the source.
ValidationReport validate_morphism(const ComputonMorphism& m);

// Ports of the source whose image has producers outside the mapped pre-set.
std::set<Id> i_vector(const ComputonMorphism& m);
// Ports of the source whose image has consumers outside the mapped post-set.
std::set<Id> o_vector(const ComputonMorphism& m);

// g after f; f.target must equal g.source structurally.
ComputonMorphism compose_morphisms(const ComputonMorphism& g, const ComputonMorphism& f);

ComputonMorphism identity_morphism(const Computon& c);

// Deterministic backtracking search for a five-way bijection with commuting
// squares. Returns the first witness in lexicographic candidate order, or
// nothing when the computons are not isomorphic.
std::optional<ComputonMorphism> find_isomorphism(const Computon& a, const Computon& b);

} // namespace computon

#endif
