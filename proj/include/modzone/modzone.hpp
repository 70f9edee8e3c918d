#pragma once

// Umbrella header for the modality zoning pipeline.

#include "modzone/annotate.hpp"
#include "modzone/attitude.hpp"
#include "modzone/decision.hpp"
#include "modzone/lexicon.hpp"
#include "modzone/modality.hpp"
#include "modzone/persons.hpp"
#include "modzone/pipeline.hpp"
#include "modzone/postag.hpp"
#include "modzone/preprocess.hpp"
#include "modzone/report.hpp"
#include "modzone/tag.hpp"
#include "modzone/util.hpp"
