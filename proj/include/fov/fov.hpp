#pragma once

#include "blaschke.hpp"
#include "closed_forms.hpp"
#include "crouzeix.hpp"
#include "disks.hpp"
#include "errors.hpp"
#include "levelset.hpp"
#include "linalg.hpp"
#include "modelspace.hpp"
#include "numrange.hpp"
