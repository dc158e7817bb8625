#pragma once

#include "trapnet/classes.hpp"
#include "trapnet/collections.hpp"
#include "trapnet/core.hpp"
#include "trapnet/diagrams.hpp"
#include "trapnet/dynamics.hpp"
#include "trapnet/generators.hpp"
#include "trapnet/netio.hpp"
#include "trapnet/report.hpp"
#include "trapnet/subcube_collection.hpp"
#include "trapnet/trapspaces.hpp"
#include "trapnet/verify.hpp"
