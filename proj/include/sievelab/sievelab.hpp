#ifndef SIEVELAB_SIEVELAB_HPP
#define SIEVELAB_SIEVELAB_HPP

#include "actions.hpp"
#include "clusterlab.hpp"
#include "cspverify.hpp"
#include "gaussrat.hpp"
#include "linalg.hpp"
#include "parallel.hpp"
#include "polygons.hpp"
#include "qseries.hpp"
#include "symfunc.hpp"
#include "tableaux.hpp"
#include "xpoly.hpp"

#endif  // SIEVELAB_SIEVELAB_HPP
