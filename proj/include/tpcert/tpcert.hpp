#pragma once

#include "tpcert/certificates.hpp"
#include "tpcert/core.hpp"
#include "tpcert/generators.hpp"
#include "tpcert/interval.hpp"
#include "tpcert/matrix.hpp"
#include "tpcert/minors.hpp"
#include "tpcert/polya.hpp"
#include "tpcert/positivity.hpp"
#include "tpcert/random.hpp"
#include "tpcert/rational.hpp"
#include "tpcert/scalar.hpp"
