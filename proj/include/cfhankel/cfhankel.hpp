#pragma once

#include "bseq.hpp"
#include "catalog.hpp"
#include "cfrac.hpp"
#include "closedform.hpp"
#include "errors.hpp"
#include "hankel.hpp"
#include "matrix.hpp"
#include "orthopoly.hpp"
#include "rational.hpp"
#include "ring.hpp"
#include "scalar.hpp"
#include "series.hpp"
