#pragma once

#include "morsegraph/barcode.hpp"
#include "morsegraph/counting.hpp"
#include "morsegraph/equivalence.hpp"
#include "morsegraph/errors.hpp"
#include "morsegraph/graph.hpp"
#include "morsegraph/json_io.hpp"
#include "morsegraph/morse.hpp"
#include "morsegraph/persistence.hpp"
#include "morsegraph/rational.hpp"
#include "morsegraph/realization.hpp"
