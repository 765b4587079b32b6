#pragma once

#include "centroflow/chain.hpp"
#include "centroflow/classify.hpp"
#include "centroflow/convexity.hpp"
#include "centroflow/flows/endpoint.hpp"
#include "centroflow/flows/pentagram.hpp"
#include "centroflow/flows/stability.hpp"
#include "centroflow/flows/tangent.hpp"
#include "centroflow/flows/transversal.hpp"
#include "centroflow/invariants.hpp"
#include "centroflow/io.hpp"
#include "centroflow/match.hpp"
#include "centroflow/polygon.hpp"
#include "centroflow/random_gen.hpp"
#include "centroflow/types.hpp"
