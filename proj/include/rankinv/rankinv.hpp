#pragma once

#include "rankinv/catalog.hpp"
#include "rankinv/code.hpp"
#include "rankinv/combinatorics.hpp"
#include "rankinv/error.hpp"
#include "rankinv/experiment.hpp"
#include "rankinv/field.hpp"
#include "rankinv/forms.hpp"
#include "rankinv/geometry.hpp"
#include "rankinv/hilbert.hpp"
#include "rankinv/matrix.hpp"
#include "rankinv/rng.hpp"
#include "rankinv/serialize.hpp"
