#pragma once

#include "cossum/aaa.hpp"
#include "cossum/bessel.hpp"
#include "cossum/error.hpp"
#include "cossum/espira.hpp"
#include "cossum/esprit.hpp"
#include "cossum/model.hpp"
#include "cossum/numerics.hpp"
#include "cossum/oracle.hpp"
#include "cossum/recovery.hpp"
#include "cossum/transforms.hpp"
