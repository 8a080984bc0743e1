#pragma once

#include "msym/charpoly.hpp"
#include "msym/genmat.hpp"
#include "msym/invariants.hpp"
#include "msym/linalg.hpp"
#include "msym/matrix.hpp"
#include "msym/multisym.hpp"
#include "msym/parse.hpp"
#include "msym/poly.hpp"
#include "msym/scalar.hpp"
