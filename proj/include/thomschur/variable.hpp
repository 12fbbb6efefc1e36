#pragma once

#include <string>
#include <vector>

namespace thomschur {

// Variables are interned; a VarId is an index into a process-wide registry.
// The term order used everywhere is graded lexicographic over the fixed
// variable order  x < x1 < x2 < ... < a1 < a2 < ... < b1 < b2 < ...
// < y1 < y2 < ... < z < (anything else, by name).
using VarId = int;

VarId var(const std::string& name);
const std::string& var_name(VarId id);

// true if u precedes v in the global variable order
bool var_precedes(VarId u, VarId v);

} // namespace thomschur
