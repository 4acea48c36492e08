#pragma once

#include "tropint/rational.hpp"
#include "tropint/linalg.hpp"
#include "tropint/lattice.hpp"
#include "tropint/lp.hpp"
#include "tropint/polyhedra.hpp"
#include "tropint/cycles.hpp"
#include "tropint/divisors.hpp"
#include "tropint/morphisms.hpp"
#include "tropint/products.hpp"
#include "tropint/examples.hpp"
#include "tropint/io.hpp"
#include "tropint/svg.hpp"
