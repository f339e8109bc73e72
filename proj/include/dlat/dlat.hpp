#pragma once

#include "dlat/bits.hpp"
#include "dlat/enumerate.hpp"
#include "dlat/errors.hpp"
#include "dlat/hibi.hpp"
#include "dlat/invariants.hpp"
#include "dlat/io.hpp"
#include "dlat/lattice.hpp"
#include "dlat/poset.hpp"
#include "dlat/structure.hpp"
