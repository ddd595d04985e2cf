#pragma once

#include "semibrace/types.hpp"
#include "semibrace/op_table.hpp"
#include "semibrace/rees.hpp"
#include "semibrace/semibrace.hpp"
#include "semibrace/constructions.hpp"
#include "semibrace/ideals.hpp"
#include "semibrace/ybe.hpp"
#include "semibrace/structure_monoid.hpp"
#include "semibrace/document.hpp"
