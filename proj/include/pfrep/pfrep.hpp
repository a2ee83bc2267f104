#pragma once

#include "pfrep/anf.hpp"
#include "pfrep/approx.hpp"
#include "pfrep/boolean_function.hpp"
#include "pfrep/depth2.hpp"
#include "pfrep/dyadic.hpp"
#include "pfrep/fourier.hpp"
#include "pfrep/function_spec.hpp"
#include "pfrep/nmqc.hpp"
#include "pfrep/oracle.hpp"
#include "pfrep/periodic.hpp"
#include "pfrep/serialization.hpp"
