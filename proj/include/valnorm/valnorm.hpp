#pragma once

#include "valnorm/association.hpp"
#include "valnorm/error.hpp"
#include "valnorm/evalsuite.hpp"
#include "valnorm/reports.hpp"
#include "valnorm/serialize.hpp"
#include "valnorm/stats.hpp"
#include "valnorm/stimuli.hpp"
#include "valnorm/unicode.hpp"
#include "valnorm/valence.hpp"
#include "valnorm/vectorspace.hpp"
#include "valnorm/version.hpp"
