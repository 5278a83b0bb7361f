#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "hyperzeta/rational.hpp"

namespace hyperzeta {

/// 160-digit MPFR float for checks that must resolve exponentially small
/// asymptotic remainders.
using WideReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<160>,
                                               boost::multiprecision::et_off>;

/// Correctly rounded conversion of an exact rational.
WideReal to_wide(const Rational& q);

}  // namespace hyperzeta
