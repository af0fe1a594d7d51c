#pragma once

#include "arguesia/theorems/beaugrand.hpp"
#include "arguesia/theorems/menelaus.hpp"
#include "arguesia/theorems/pascal.hpp"
#include "arguesia/theorems/pencil.hpp"
#include "arguesia/theorems/quadrangle.hpp"
#include "arguesia/theorems/ramee.hpp"
#include "arguesia/theorems/retablissement.hpp"
#include "arguesia/theorems/special_cases.hpp"
