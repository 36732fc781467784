#pragma once

#include "error.hpp"
#include "value.hpp"
#include "report.hpp"
#include "quantale.hpp"
#include "subset.hpp"
#include "poset.hpp"
#include "vietoris.hpp"
#include "vcat.hpp"
#include "vrel.hpp"
#include "colimits.hpp"
#include "function_space.hpp"
#include "duality_ordered.hpp"
#include "stone_weierstrass.hpp"
#include "duality_enriched.hpp"
#include "instance.hpp"
#include "suites.hpp"
