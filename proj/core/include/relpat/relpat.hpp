#pragma once

#include "relpat/alphabet.hpp"
#include "relpat/cnf.hpp"
#include "relpat/counter_automaton.hpp"
#include "relpat/equivalence.hpp"
#include "relpat/errors.hpp"
#include "relpat/generators.hpp"
#include "relpat/inclusion.hpp"
#include "relpat/matcher.hpp"
#include "relpat/pattern.hpp"
#include "relpat/prop6.hpp"
#include "relpat/relations.hpp"
#include "relpat/report.hpp"
#include "relpat/sat_reductions.hpp"
#include "relpat/semantics.hpp"
#include "relpat/text_format.hpp"
#include "relpat/utm.hpp"
