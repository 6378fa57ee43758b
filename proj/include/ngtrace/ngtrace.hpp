#pragma once

#include "ngtrace/error.hpp"
#include "ngtrace/semigroup.hpp"
#include "ngtrace/relative_ideal.hpp"
#include "ngtrace/polynomial.hpp"
#include "ngtrace/groebner.hpp"
#include "ngtrace/poly_parse.hpp"
#include "ngtrace/toric.hpp"
#include "ngtrace/determinantal.hpp"
#include "ngtrace/trace_lambda.hpp"
#include "ngtrace/higher_dim.hpp"
#include "ngtrace/syzygy.hpp"
#include "ngtrace/json_io.hpp"
#include "ngtrace/corpus.hpp"
