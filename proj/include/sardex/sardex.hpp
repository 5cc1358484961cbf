#pragma once

#include "sardex/error.hpp"
#include "sardex/numerics/rational.hpp"
#include "sardex/numerics/cubic.hpp"
#include "sardex/numerics/interval.hpp"
#include "sardex/numerics/field.hpp"
#include "sardex/ternary/expansion.hpp"
#include "sardex/ternary/cantor.hpp"
#include "sardex/construction/params.hpp"
#include "sardex/construction/fat_cantor.hpp"
#include "sardex/construction/json.hpp"
#include "sardex/verify/report.hpp"
#include "sardex/verify/sampling.hpp"
#include "sardex/verify/checks.hpp"
