#ifndef STABLEPERM_STABLEPERM_HPP
#define STABLEPERM_STABLEPERM_HPP

#include "cycles.hpp"
#include "enumeration.hpp"
#include "error.hpp"
#include "family.hpp"
#include "multi_index.hpp"
#include "parallel.hpp"
#include "permutation.hpp"
#include "stability.hpp"
#include "version.hpp"

#endif  // STABLEPERM_STABLEPERM_HPP
