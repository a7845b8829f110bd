#pragma once

// Umbrella header.

#include "heis/error.hpp"
#include "heis/lattice.hpp"
#include "heis/random.hpp"
#include "heis/real_group.hpp"
#include "heis/schroedinger.hpp"
#include "heis/siegel.hpp"
#include "heis/suite.hpp"
#include "heis/text.hpp"
