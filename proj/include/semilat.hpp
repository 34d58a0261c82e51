#pragma once

#include "semilat/arrow.hpp"
#include "semilat/atlas.hpp"
#include "semilat/canonical.hpp"
#include "semilat/corpus.hpp"
#include "semilat/distributivity.hpp"
#include "semilat/errors.hpp"
#include "semilat/generators.hpp"
#include "semilat/ideals.hpp"
#include "semilat/model_io.hpp"
#include "semilat/poset.hpp"
#include "semilat/report.hpp"
#include "semilat/semilattice.hpp"
#include "semilat/sets.hpp"
