#pragma once

#include "wtb/cuts.hpp"
#include "wtb/edge_set.hpp"
#include "wtb/error.hpp"
#include "wtb/flow.hpp"
#include "wtb/io.hpp"
#include "wtb/network.hpp"
#include "wtb/oracle.hpp"
#include "wtb/wiretap.hpp"
