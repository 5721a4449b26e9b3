#pragma once

#include "critlab/canonical.hpp"
#include "critlab/coloring.hpp"
#include "critlab/constructions.hpp"
#include "critlab/criticality.hpp"
#include "critlab/errors.hpp"
#include "critlab/extremal.hpp"
#include "critlab/graph.hpp"
#include "critlab/graph6.hpp"
#include "critlab/search.hpp"
#include "critlab/structure.hpp"
#include "critlab/witness.hpp"
