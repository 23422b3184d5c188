#pragma once

#include "polyac/circuit.hpp"
#include "polyac/cyclotomic.hpp"
#include "polyac/elusive.hpp"
#include "polyac/errors.hpp"
#include "polyac/field.hpp"
#include "polyac/groebner.hpp"
#include "polyac/interpolate.hpp"
#include "polyac/json_io.hpp"
#include "polyac/linalg.hpp"
#include "polyac/poly.hpp"
#include "polyac/rational.hpp"
#include "polyac/resultant.hpp"
