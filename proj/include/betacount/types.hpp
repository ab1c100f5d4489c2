#pragma once

#include <cstdint>
#include <vector>

namespace betacount {

// Variables are 1-based everywhere (DIMACS convention).
using VarId = std::uint32_t;

// Domain values are 0-based: a domain of size |D| is {0, ..., |D|-1}.
using DomainValue = std::uint32_t;

using ConstraintId = std::uint32_t;

// An assignment tuple, indexed by the (sorted) scope of a constraint.
using Tuple = std::vector<DomainValue>;

}  // namespace betacount
