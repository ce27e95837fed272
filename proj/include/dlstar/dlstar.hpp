#ifndef DLSTAR_DLSTAR_HPP
#define DLSTAR_DLSTAR_HPP

#include "dlstar/bounds.hpp"
#include "dlstar/construct.hpp"
#include "dlstar/coset_action.hpp"
#include "dlstar/derived.hpp"
#include "dlstar/expr.hpp"
#include "dlstar/group.hpp"
#include "dlstar/harness.hpp"
#include "dlstar/ingest.hpp"
#include "dlstar/permutation.hpp"
#include "dlstar/report.hpp"
#include "dlstar/rootsys.hpp"
#include "dlstar/supplement.hpp"

#endif  // DLSTAR_DLSTAR_HPP
