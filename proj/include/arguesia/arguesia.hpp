#pragma once

#include "arguesia/conics.hpp"
#include "arguesia/instances.hpp"
#include "arguesia/json_io.hpp"
#include "arguesia/svg.hpp"
#include "arguesia/theorems.hpp"
