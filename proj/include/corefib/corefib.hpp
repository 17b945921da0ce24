#pragma once

#include "abacus.hpp"
#include "anderson.hpp"
#include "bounce.hpp"
#include "dyck.hpp"
#include "errors.hpp"
#include "extremal.hpp"
#include "fibonacci.hpp"
#include "numeric.hpp"
#include "oracle.hpp"
#include "partition.hpp"
#include "qt_polynomial.hpp"
#include "serialization.hpp"
#include "twin_odd.hpp"
#include "verify.hpp"
