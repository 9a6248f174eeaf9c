#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace pauligraph {

// Arbitrary-precision signed integer (GMP-backed). Used wherever counts or
// eliminations can exceed 64 bits: automorphism orders, fraction-free
// elimination pivots, polar-space census formulas.
using BigInt = boost::multiprecision::mpz_int;

}  // namespace pauligraph
