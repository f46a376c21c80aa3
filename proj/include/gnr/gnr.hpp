#pragma once

// Umbrella header.

#include "gnr/subset_mask.hpp"
#include "gnr/error.hpp"
#include "gnr/algebra.hpp"
#include "gnr/ideals.hpp"
#include "gnr/grading.hpp"
#include "gnr/lattice.hpp"
#include "gnr/constructions.hpp"
#include "gnr/primality.hpp"
#include "gnr/corpus.hpp"
#include "gnr/harness.hpp"
#include "gnr/document.hpp"
