#pragma once

#include "mdbc/bounds.hpp"
#include "mdbc/core.hpp"
#include "mdbc/dependence.hpp"
#include "mdbc/error.hpp"
#include "mdbc/exact_oracle.hpp"
#include "mdbc/montecarlo.hpp"
#include "mdbc/partitions.hpp"
#include "mdbc/proof_steps.hpp"
#include "mdbc/types.hpp"
#include "mdbc/verification_report.hpp"
