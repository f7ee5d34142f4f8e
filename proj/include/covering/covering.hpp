#pragma once

#include "covering/bench.hpp"
#include "covering/bfile.hpp"
#include "covering/bigint.hpp"
#include "covering/core.hpp"
#include "covering/counting.hpp"
#include "covering/determinant.hpp"
#include "covering/error.hpp"
#include "covering/oracle.hpp"
#include "covering/primes.hpp"
