#pragma once

#include "partcat/closure.hpp"
#include "partcat/colored.hpp"
#include "partcat/errors.hpp"
#include "partcat/operations.hpp"
#include "partcat/oracles.hpp"
#include "partcat/partition.hpp"
#include "partcat/spatial.hpp"
#include "partcat/text_format.hpp"
#include "partcat/union_find.hpp"
#include "partcat/word.hpp"
