#pragma once

#include "ccsys/axioms.hpp"
#include "ccsys/cnf.hpp"
#include "ccsys/dpll.hpp"
#include "ccsys/enumeration.hpp"
#include "ccsys/errors.hpp"
#include "ccsys/extend.hpp"
#include "ccsys/reduction.hpp"
#include "ccsys/text_format.hpp"
#include "ccsys/tournament.hpp"
#include "ccsys/triple_core.hpp"
