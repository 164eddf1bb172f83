#pragma once

#include "opart/certified_arith.hpp"
#include "opart/constants.hpp"
#include "opart/difference_bounds.hpp"
#include "opart/errors.hpp"
#include "opart/half_power_poly.hpp"
#include "opart/overpartition.hpp"
#include "opart/report.hpp"
#include "opart/scan.hpp"
#include "opart/turan.hpp"
#include "opart/zuckerman.hpp"
#include "opart/campaigns.hpp"
