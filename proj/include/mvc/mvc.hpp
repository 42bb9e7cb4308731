#ifndef MVC_MVC_HPP
#define MVC_MVC_HPP

#include "mvc/cell_ops.hpp"
#include "mvc/constructions.hpp"
#include "mvc/core.hpp"
#include "mvc/error.hpp"
#include "mvc/facets.hpp"
#include "mvc/io.hpp"
#include "mvc/lp.hpp"
#include "mvc/oracle.hpp"
#include "mvc/predicates.hpp"
#include "mvc/scalar.hpp"
#include "mvc/simplex.hpp"

#endif  // MVC_MVC_HPP
