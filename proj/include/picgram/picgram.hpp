#pragma once

#include "picgram/error.hpp"
#include "picgram/symbol.hpp"
#include "picgram/picture.hpp"
#include "picgram/subdomain.hpp"
#include "picgram/tile.hpp"
#include "picgram/partition.hpp"
#include "picgram/local_language.hpp"
#include "picgram/tileset_analysis.hpp"
#include "picgram/grammar.hpp"
#include "picgram/parser.hpp"
#include "picgram/tiling_system.hpp"
#include "picgram/kolam.hpp"
#include "picgram/prusa.hpp"
#include "picgram/grid.hpp"
#include "picgram/matrix.hpp"
#include "picgram/oracle.hpp"
#include "picgram/io.hpp"
#include "picgram/pipeline.hpp"
