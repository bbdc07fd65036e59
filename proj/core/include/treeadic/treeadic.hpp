#pragma once

// Umbrella header.

#include "treeadic/cli.hpp"
#include "treeadic/conversion.hpp"
#include "treeadic/dadic.hpp"
#include "treeadic/errors.hpp"
#include "treeadic/machine_file.hpp"
#include "treeadic/mealy.hpp"
#include "treeadic/moore.hpp"
#include "treeadic/vanderput.hpp"
#include "treeadic/word.hpp"
