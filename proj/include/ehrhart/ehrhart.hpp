#pragma once

// Umbrella header.

#include "ehrhart/analysis.hpp"
#include "ehrhart/bases.hpp"
#include "ehrhart/counting.hpp"
#include "ehrhart/errors.hpp"
#include "ehrhart/families.hpp"
#include "ehrhart/graph.hpp"
#include "ehrhart/poly.hpp"
#include "ehrhart/rational.hpp"
#include "ehrhart/selftest.hpp"
