#pragma once

#include "nilcomplete/connection.hpp"
#include "nilcomplete/engine.hpp"
#include "nilcomplete/error.hpp"
#include "nilcomplete/gln_graph.hpp"
#include "nilcomplete/int_matrix.hpp"
#include "nilcomplete/integer.hpp"
#include "nilcomplete/jordan.hpp"
#include "nilcomplete/laurent_matrix.hpp"
#include "nilcomplete/partition.hpp"
