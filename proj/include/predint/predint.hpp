#pragma once

// Calibrated prediction intervals for regression via binned classification:
// binning, softmax utilities, posterior intervals, empirical and temperature
// calibration, evaluation metrics, synthetic tasks, and CSV/JSON persistence.

#include "predint/binning.hpp"
#include "predint/calibrate.hpp"
#include "predint/errors.hpp"
#include "predint/intervals.hpp"
#include "predint/io.hpp"
#include "predint/matrix.hpp"
#include "predint/metrics.hpp"
#include "predint/parallel.hpp"
#include "predint/probs.hpp"
#include "predint/rng.hpp"
#include "predint/synth.hpp"
