// recogs/recogs.hpp - umbrella header.
#pragma once

#include "recogs/augment.hpp"
#include "recogs/build.hpp"
#include "recogs/corpus.hpp"
#include "recogs/errors.hpp"
#include "recogs/lexicon.hpp"
#include "recogs/lf.hpp"
#include "recogs/random.hpp"
#include "recogs/scoring.hpp"
#include "recogs/sem.hpp"
#include "recogs/sem_oracle.hpp"
#include "recogs/token_set.hpp"
#include "recogs/transforms.hpp"
