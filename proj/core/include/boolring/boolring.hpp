#pragma once

#include "boolring/cluster.hpp"
#include "boolring/corpus.hpp"
#include "boolring/error.hpp"
#include "boolring/gf2.hpp"
#include "boolring/io.hpp"
#include "boolring/laws.hpp"
#include "boolring/module.hpp"
#include "boolring/pext.hpp"
#include "boolring/transform.hpp"
#include "boolring/zerodiv.hpp"
