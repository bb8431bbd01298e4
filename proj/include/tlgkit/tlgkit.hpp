/* tlgkit: C++ threshold logic synthesis and locking toolkit
 * Copyright (C) 2025-2026  the tlgkit authors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file tlgkit.hpp
  \brief Convenience header pulling in the whole toolkit
*/

#pragma once

#include "truth_table.hpp"
#include "rng.hpp"

#include "bool_circuit.hpp"
#include "bench_io.hpp"
#include "blif_io.hpp"
#include "simulation.hpp"
#include "aig.hpp"

#include "cut_enumeration.hpp"
#include "threshold_identification.hpp"
#include "tlg_network.hpp"
#include "tlg_mapping.hpp"
#include "tlg_merging.hpp"
#include "tlg_io.hpp"

#include "locking.hpp"

#include "cnf.hpp"
#include "sat_solver.hpp"
#include "cnf_encoding.hpp"
#include "equivalence.hpp"
#include "sat_attack.hpp"

#include "corruption.hpp"
#include "cost_model.hpp"
#include "weight_sweep.hpp"
