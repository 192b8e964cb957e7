#pragma once

#include "hypermatroid/cli.hpp"
#include "hypermatroid/constructions.hpp"
#include "hypermatroid/enumerate.hpp"
#include "hypermatroid/errors.hpp"
#include "hypermatroid/hopf.hpp"
#include "hypermatroid/hyperfield.hpp"
#include "hypermatroid/io.hpp"
#include "hypermatroid/iso.hpp"
#include "hypermatroid/matroid.hpp"
#include "hypermatroid/rational.hpp"
#include "hypermatroid/report.hpp"
#include "hypermatroid/subsets.hpp"
