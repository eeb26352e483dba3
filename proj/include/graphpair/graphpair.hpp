#pragma once

#include "chord_diagram.hpp"
#include "hairy.hpp"
#include "io.hpp"
#include "isomorphism.hpp"
#include "pairing.hpp"
#include "plain_graph.hpp"
#include "rational.hpp"
#include "ribbon.hpp"
#include "verify.hpp"
