#pragma once

#include "hgc/error.hpp"
#include "hgc/hypergraph.hpp"
#include "hgc/isomorphism.hpp"
#include "hgc/transforms.hpp"
#include "hgc/scalar.hpp"
#include "hgc/star_algebra.hpp"
#include "hgc/spanning.hpp"
#include "hgc/catalog.hpp"
#include "hgc/analysis.hpp"
#include "hgc/repcheck.hpp"
#include "hgc/io.hpp"
