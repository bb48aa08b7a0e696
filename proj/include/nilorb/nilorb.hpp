/**
 * @file nilorb.hpp
 * @brief Umbrella header.
 */
#pragma once

#include "centralizers.hpp"
#include "classical.hpp"
#include "classify.hpp"
#include "combinatorics.hpp"
#include "finite_field.hpp"
#include "form_modules.hpp"
#include "forms.hpp"
#include "gf_linalg.hpp"
#include "isometry.hpp"
#include "odd_split.hpp"
#include "oracle.hpp"
#include "serialize.hpp"
#include "symbols.hpp"
#include "verify.hpp"
