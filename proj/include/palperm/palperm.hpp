#pragma once

// Umbrella header.

#include "palperm/census.hpp"
#include "palperm/group.hpp"
#include "palperm/palindromics.hpp"
#include "palperm/permutation.hpp"
#include "palperm/textio.hpp"
