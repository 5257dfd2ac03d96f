#pragma once

#include "exactlin.hpp"
#include "torus.hpp"
#include "grp.hpp"
#include "surface.hpp"
#include "catalog.hpp"
#include "moduli.hpp"
