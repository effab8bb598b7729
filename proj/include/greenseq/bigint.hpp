#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "greenseq/exchange_matrix.hpp"

namespace greenseq {

/// Unbounded integer scalar for paths whose entries outgrow 64 bits.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

using BigMatrix = Matrix<BigInt>;

}  // namespace greenseq
