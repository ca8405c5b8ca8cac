#pragma once

// Everything: exact cyclotomic and q-series arithmetic, the lambda functions,
// their minimal polynomials, counting formulas, CM evaluation and JSON I/O.

#include "genlambda/cyclotomic.hpp"
#include "genlambda/qseries.hpp"
#include "genlambda/modgroup.hpp"
#include "genlambda/forms.hpp"
#include "genlambda/lambda.hpp"
#include "genlambda/counts.hpp"
#include "genlambda/kpoly.hpp"
#include "genlambda/minpoly.hpp"
#include "genlambda/cmval.hpp"
#include "genlambda/json_io.hpp"
