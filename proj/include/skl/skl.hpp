#pragma once

#include "skl/error.hpp"
#include "skl/rational.hpp"
#include "skl/polynomial.hpp"
#include "skl/order.hpp"
#include "skl/parser.hpp"
#include "skl/groebner.hpp"
#include "skl/linalg.hpp"
#include "skl/exponent.hpp"
#include "skl/milnor.hpp"
#include "skl/dubois_table.hpp"
#include "skl/cones.hpp"
#include "skl/classify.hpp"
#include "skl/report.hpp"
#include "skl/cli.hpp"
