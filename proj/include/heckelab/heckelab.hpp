#pragma once

#include "heckelab/coxeter.hpp"
#include "heckelab/datum.hpp"
#include "heckelab/errors.hpp"
#include "heckelab/garside.hpp"
#include "heckelab/hecke.hpp"
#include "heckelab/laurent.hpp"
#include "heckelab/parabolic.hpp"
#include "heckelab/report.hpp"
#include "heckelab/runner.hpp"
