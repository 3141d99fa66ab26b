#pragma once

#include "detclosure.hpp"
#include "fp.hpp"
#include "groebner.hpp"
#include "monideal.hpp"
#include "monomial.hpp"
#include "order.hpp"
#include "poly.hpp"
#include "rees.hpp"
#include "report.hpp"
#include "runner.hpp"
#include "session.hpp"
#include "varset.hpp"
