#pragma once

#include "distlat/closed_forms.hpp"
#include "distlat/dense.hpp"
#include "distlat/errors.hpp"
#include "distlat/freudenthal.hpp"
#include "distlat/geometry.hpp"
#include "distlat/lattices.hpp"
#include "distlat/numeric.hpp"
#include "distlat/point.hpp"
#include "distlat/report.hpp"
#include "distlat/report_io.hpp"
#include "distlat/verification.hpp"
