#pragma once

// Exact arithmetic for cubic rational maps on P^1: normal forms, critical
// points, Mobius equivalence, and solvability analysis over R, Q_p and F_p.

#include "cubiq/critical.hpp"
#include "cubiq/errors.hpp"
#include "cubiq/field.hpp"
#include "cubiq/integer.hpp"
#include "cubiq/mobius.hpp"
#include "cubiq/normal_form.hpp"
#include "cubiq/padic.hpp"
#include "cubiq/perfectness.hpp"
#include "cubiq/poly.hpp"
#include "cubiq/primefield.hpp"
#include "cubiq/projpoint.hpp"
#include "cubiq/qpoly.hpp"
#include "cubiq/quadext.hpp"
#include "cubiq/ratfunc.hpp"
#include "cubiq/rational.hpp"
#include "cubiq/roots.hpp"
#include "cubiq/text.hpp"
