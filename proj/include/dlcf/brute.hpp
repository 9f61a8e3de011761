#pragma once

#include "dlcf/brute/cross_validate.hpp"
#include "dlcf/brute/dixon.hpp"
#include "dlcf/brute/harish_chandra.hpp"
#include "dlcf/brute/matrix_group.hpp"
