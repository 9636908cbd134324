#pragma once

#include "boxlat/partition.hpp"
#include "boxlat/rank_profile.hpp"
#include "boxlat/order_matching.hpp"
#include "boxlat/greedy.hpp"
#include "boxlat/chains.hpp"
#include "boxlat/classify.hpp"
#include "boxlat/tableau.hpp"
#include "boxlat/recursive.hpp"
#include "boxlat/oracle.hpp"
#include "boxlat/json_io.hpp"
