#pragma once

#include "arifs/baselines.hpp"
#include "arifs/dataset.hpp"
#include "arifs/error.hpp"
#include "arifs/evaluation.hpp"
#include "arifs/protocol.hpp"
#include "arifs/relevance_index.hpp"
#include "arifs/report.hpp"
#include "arifs/synthetic.hpp"
