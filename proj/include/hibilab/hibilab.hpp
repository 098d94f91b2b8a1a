#pragma once

#include "hibilab/analysis.hpp"
#include "hibilab/betti.hpp"
#include "hibilab/bits.hpp"
#include "hibilab/corpus.hpp"
#include "hibilab/errors.hpp"
#include "hibilab/homology.hpp"
#include "hibilab/io.hpp"
#include "hibilab/lattice.hpp"
#include "hibilab/linalg.hpp"
#include "hibilab/monomial.hpp"
#include "hibilab/poset.hpp"
#include "hibilab/resolution.hpp"
#include "hibilab/simplicial.hpp"
#include "hibilab/sweep.hpp"
