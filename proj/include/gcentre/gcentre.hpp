#pragma once

#include "centre.hpp"
#include "effectlang.hpp"
#include "error.hpp"
#include "finset.hpp"
#include "functor.hpp"
#include "graded_monad.hpp"
#include "language.hpp"
#include "laws.hpp"
#include "pomonoid.hpp"
#include "registry.hpp"
#include "relaxations.hpp"
#include "report.hpp"
#include "value.hpp"
