#pragma once
#ifndef EWLINK_EWLINK_HPP
#define EWLINK_EWLINK_HPP

#include "ewlink/config.hpp"
#include "ewlink/db_units.hpp"
#include "ewlink/errors.hpp"
#include "ewlink/links.hpp"
#include "ewlink/noise_metrics.hpp"
#include "ewlink/noise_stack.hpp"
#include "ewlink/propagation.hpp"
#include "ewlink/scenario.hpp"
#include "ewlink/svg_plot.hpp"

#endif  // EWLINK_EWLINK_HPP
