#pragma once

#include "maxsub/canonical.hpp"
#include "maxsub/catalog.hpp"
#include "maxsub/element_set.hpp"
#include "maxsub/enum_basic.hpp"
#include "maxsub/enum_refined.hpp"
#include "maxsub/enum_stateless.hpp"
#include "maxsub/errors.hpp"
#include "maxsub/graph.hpp"
#include "maxsub/io.hpp"
#include "maxsub/mccis.hpp"
#include "maxsub/oracle.hpp"
#include "maxsub/report.hpp"
#include "maxsub/restricted.hpp"
#include "maxsub/sat_gadget.hpp"
#include "maxsub/set_system.hpp"
