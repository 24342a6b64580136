#pragma once

#include "seqdist/component_parse.hpp"
#include "seqdist/core.hpp"
#include "seqdist/dp_align.hpp"
#include "seqdist/dseq.hpp"
#include "seqdist/edit_metrics.hpp"
#include "seqdist/error.hpp"
#include "seqdist/experiments.hpp"
#include "seqdist/grid.hpp"
#include "seqdist/io.hpp"
#include "seqdist/lz_complexity.hpp"
#include "seqdist/lzw_codec.hpp"
#include "seqdist/random.hpp"
#include "seqdist/report.hpp"
#include "seqdist/rotation_align.hpp"
