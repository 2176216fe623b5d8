#ifndef ITERCURVE_ITERCURVE_HPP
#define ITERCURVE_ITERCURVE_HPP

#include "ammv.hpp"
#include "cache.hpp"
#include "closedform.hpp"
#include "common.hpp"
#include "descent.hpp"
#include "eval.hpp"
#include "exactfield.hpp"
#include "numkernel.hpp"
#include "oracle.hpp"
#include "pslq.hpp"
#include "real.hpp"
#include "relations.hpp"
#include "words.hpp"

#endif
