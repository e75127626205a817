#pragma once

#include "hyperspec/error.hpp"
#include "hyperspec/rational.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/hypermatrix.hpp"
#include "hyperspec/eigensolvers.hpp"
#include "hyperspec/connectivity.hpp"
#include "hyperspec/polynomial.hpp"
#include "hyperspec/charpoly.hpp"
#include "hyperspec/constructions.hpp"
#include "hyperspec/commands.hpp"
