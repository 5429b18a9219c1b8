#pragma once

#include "area.hpp"
#include "betti.hpp"
#include "betti_dispatch.hpp"
#include "complex.hpp"
#include "dlex.hpp"
#include "error.hpp"
#include "exact_rank.hpp"
#include "ideal.hpp"
#include "integer.hpp"
#include "io.hpp"
#include "koszul.hpp"
#include "macaulay.hpp"
#include "monomial.hpp"
#include "squarefree.hpp"
