#pragma once

#include "otsalg/error.hpp"
#include "otsalg/kernel.hpp"
#include "otsalg/spans.hpp"
#include "otsalg/cospans.hpp"
#include "otsalg/graphs.hpp"
#include "otsalg/instances.hpp"
#include "otsalg/mat.hpp"
#include "otsalg/feedback.hpp"
#include "otsalg/spangraph.hpp"
#include "otsalg/cospangraph.hpp"
#include "otsalg/automata.hpp"
#include "otsalg/random.hpp"
#include "otsalg/laws.hpp"
#include "otsalg/dsl.hpp"
#include "otsalg/evaluate.hpp"
#include "otsalg/io.hpp"
