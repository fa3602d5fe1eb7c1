#pragma once

#include "jetk/exact_arith.hpp"
#include "jetk/jetcalc.hpp"
#include "jetk/kring.hpp"
#include "jetk/p1lab.hpp"
#include "jetk/report.hpp"
#include "jetk/report_json.hpp"
#include "jetk/sheafdsl.hpp"
