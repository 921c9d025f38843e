#ifndef COMPUTON_VALIDATE_HPP
#define COMPUTON_VALIDATE_HPP

#include <string>
#include <vector>

#include "computon/computon.hpp"

namespace computon {

struct Violation {
    std::string clause;   // short machine-readable name of the failed clause
    std::string element;  // offending element, empty when global
    std::string message;

    bool operator==(const Violation&) const = default;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool has_clause(const std::string& clause) const;
    std::string to_string() const;
};

// Checks every structural invariant of a computon:
//   ports-nonempty, colours-nonempty  -- P and Sigma are non-empty
//   colour-in-set                     -- every port colour is in Sigma
//   colour-surjective                 -- every colour in Sigma is used
//   sigma-total / t-total             -- out-edges reference existing endpoints
//   tau-total / s-total               -- in-edges reference existing endpoints
//   sigma-surjective / tau-surjective -- every unit has an out- and an in-edge
//   ec-inport / ec-outport            -- a control port with no incoming
//                                        (resp. outgoing) edge exists
ValidationReport validate_computon(const Computon& c);

} // namespace computon

#endif
