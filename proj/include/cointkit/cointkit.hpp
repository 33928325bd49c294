#pragma once

#include "cointkit/csv.hpp"
#include "cointkit/diagnostics.hpp"
#include "cointkit/distributions.hpp"
#include "cointkit/errors.hpp"
#include "cointkit/johansen.hpp"
#include "cointkit/linreg.hpp"
#include "cointkit/pipeline.hpp"
#include "cointkit/plot.hpp"
#include "cointkit/random.hpp"
#include "cointkit/series.hpp"
#include "cointkit/simulate.hpp"
#include "cointkit/unit_root.hpp"
#include "cointkit/var_select.hpp"
#include "cointkit/vecm.hpp"
