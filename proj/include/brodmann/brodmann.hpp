#pragma once

#include "ass.hpp"
#include "bounds.hpp"
#include "cohomology.hpp"
#include "errors.hpp"
#include "exact_radical.hpp"
#include "ideal.hpp"
#include "io.hpp"
#include "polyhedra.hpp"
