#ifndef QBCH_QBCH_HPP
#define QBCH_QBCH_HPP

#include "qbch/bch.hpp"
#include "qbch/cyclotomic.hpp"
#include "qbch/duality.hpp"
#include "qbch/error.hpp"
#include "qbch/extension.hpp"
#include "qbch/galois_field.hpp"
#include "qbch/integer.hpp"
#include "qbch/matrix.hpp"
#include "qbch/oracle.hpp"
#include "qbch/parallel.hpp"
#include "qbch/polynomial.hpp"
#include "qbch/quantum.hpp"
#include "qbch/scan.hpp"
#include "qbch/serialize.hpp"

#endif  // QBCH_QBCH_HPP
