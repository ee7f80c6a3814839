#pragma once

#include "nonoverlap/bigint.hpp"
#include "nonoverlap/codeset.hpp"
#include "nonoverlap/grid.hpp"
#include "nonoverlap/seqcore.hpp"
#include "nonoverlap/tables.hpp"
#include "nonoverlap/words.hpp"
