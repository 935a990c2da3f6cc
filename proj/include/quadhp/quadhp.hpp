#pragma once

#include "quadhp/errors.hpp"
#include "quadhp/falsify.hpp"
#include "quadhp/interlace.hpp"
#include "quadhp/multiplier.hpp"
#include "quadhp/poly.hpp"
#include "quadhp/quad_hp.hpp"
#include "quadhp/quad_operator.hpp"
#include "quadhp/rational.hpp"
#include "quadhp/real_roots.hpp"
#include "quadhp/symbol_probe.hpp"
