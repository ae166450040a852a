// tables.hpp — Built-in coupling sequences

#pragma once

#include <string>

#include "gaw/coupling.hpp"

namespace gaw::tables {

// Published 28-point band-gap sequence (printed values; see bandgap_reference
// for the design actually used by the verification suite).
CouplingSequence table_s1();

// Published 10-point chiral sequence with synthetic phases.
CouplingSequence table_s2();

// Band-gap design regenerated with this project's optimizer; reaches an
// in-gap residual below 1e-4 of the plateau on the default grid.
CouplingSequence bandgap_reference();

// id in {table_s1, table_s2, bandgap_reference}
CouplingSequence builtin_sequence(const std::string& id);

} // namespace gaw::tables
