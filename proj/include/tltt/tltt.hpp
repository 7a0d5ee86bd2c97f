#pragma once

#include "tltt/core/error.hpp"
#include "tltt/core/term.hpp"
#include "tltt/corpus/corpus.hpp"
#include "tltt/diagram/category.hpp"
#include "tltt/diagram/classifier.hpp"
#include "tltt/diagram/coslice.hpp"
#include "tltt/diagram/diagram.hpp"
#include "tltt/diagram/exponential.hpp"
#include "tltt/diagram/families.hpp"
#include "tltt/diagram/fixture.hpp"
#include "tltt/diagram/limits.hpp"
#include "tltt/diagram/nerve.hpp"
#include "tltt/diagram/pointed_nerve.hpp"
#include "tltt/diagram/random.hpp"
#include "tltt/diagram/yoneda.hpp"
#include "tltt/kernel/environment.hpp"
#include "tltt/kernel/kernel.hpp"
#include "tltt/kernel/module_checker.hpp"
#include "tltt/lab/experiments.hpp"
#include "tltt/simplex/horn_factor.hpp"
#include "tltt/simplex/mono.hpp"
#include "tltt/simplex/nat_trans.hpp"
#include "tltt/simplex/semi_simplicial.hpp"
#include "tltt/simplex/sieve.hpp"
#include "tltt/simplex/simplicial_subset.hpp"
#include "tltt/syntax/lexer.hpp"
#include "tltt/syntax/parser.hpp"
#include "tltt/syntax/printer.hpp"
#include "tltt/syntax/resolve.hpp"
#include "tltt/syntax/surface.hpp"
