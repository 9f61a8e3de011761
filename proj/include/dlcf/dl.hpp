#pragma once

#include "dlcf/dl/character.hpp"
#include "dlcf/dl/class_function.hpp"
#include "dlcf/dl/induction.hpp"
#include "dlcf/dl/lines.hpp"
#include "dlcf/dl/span.hpp"
#include "dlcf/dl/verify.hpp"
