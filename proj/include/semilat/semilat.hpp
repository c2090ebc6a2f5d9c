#pragma once

#include "semilat/bitset.hpp"
#include "semilat/clique.hpp"
#include "semilat/enumeration.hpp"
#include "semilat/io.hpp"
#include "semilat/point_set.hpp"
#include "semilat/reduction.hpp"
#include "semilat/semilattice.hpp"
#include "semilat/transformation.hpp"
