#pragma once

#include "sgcorona/charpoly.hpp"
#include "sgcorona/core.hpp"
#include "sgcorona/families.hpp"
#include "sgcorona/io.hpp"
#include "sgcorona/jacobi.hpp"
#include "sgcorona/matrix.hpp"
#include "sgcorona/polynomial.hpp"
#include "sgcorona/products.hpp"
#include "sgcorona/real_roots.hpp"
#include "sgcorona/spectra.hpp"
#include "sgcorona/structure.hpp"
#include "sgcorona/theorems.hpp"
