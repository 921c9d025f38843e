#ifndef COMPUTON_SRC_SPAN_CHECK_HPP
#define COMPUTON_SRC_SPAN_CHECK_HPP

#include "computon/compose.hpp"

namespace computon::detail {

// Throws InvalidSpanError unless both legs are valid morphisms out of the
// shared apex and all three computons validate.
void require_valid_span(const Span& s);

} // namespace computon::detail

#endif
