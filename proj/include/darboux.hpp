#pragma once

#include "darboux/error.hpp"
#include "darboux/rational.hpp"
#include "darboux/poset.hpp"
#include "darboux/extension.hpp"
#include "darboux/function_space.hpp"
#include "darboux/audit.hpp"
#include "darboux/completion.hpp"
#include "darboux/cic.hpp"
#include "darboux/real.hpp"
#include "darboux/real_expr.hpp"
#include "darboux/real_audit.hpp"
#include "darboux/analysis/function.hpp"
#include "darboux/analysis/limits.hpp"
#include "darboux/analysis/integral.hpp"
#include "darboux/analysis/linearity.hpp"
