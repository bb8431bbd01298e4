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

#include <catch2/catch_amalgamated.hpp>

#include <tlgkit/bench_io.hpp>
#include <tlgkit/equivalence.hpp>
#include <tlgkit/locking.hpp>
#include <tlgkit/rng.hpp>
#include <tlgkit/sat_attack.hpp>
#include <tlgkit/tlg_mapping.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace tlgkit;

namespace
{

BoolCircuit c17_circuit()
{
  std::istringstream in( R"(
INPUT(1)
INPUT(2)
INPUT(3)
INPUT(6)
INPUT(7)
OUTPUT(22)
OUTPUT(23)
10 = NAND(1, 3)
11 = NAND(3, 6)
16 = NAND(2, 11)
19 = NAND(11, 7)
22 = NAND(10, 16)
23 = NAND(16, 19)
)" );
  return parse_bench( in, "c17" );
}

BoolCircuit two_input_circuit( const std::string& kind )
{
  std::istringstream in( "INPUT(x0)\nINPUT(x1)\nOUTPUT(y)\ny = " + kind + "(x0, x1)\n" );
  return parse_bench( in, kind );
}

/*! \brief A locked single gate whose key bit carries no weight at all. */
LockedNetwork weightless_key_lock()
{
  LockedNetwork locked;
  Tlg gate;
  gate.output = "y";
  gate.inputs = { { "x0", 1, false }, { "x1", 1, false }, { "k0", 0, true } };
  gate.threshold = 2;
  locked.network.add_input( "x0" );
  locked.network.add_input( "x1" );
  locked.network.add_key_input( "k0" );
  locked.network.add_output( "y" );
  locked.network.add_gate( gate );
  locked.network.validate();
  locked.key_names = { "k0" };
  locked.locked_gate_ids = { 0 };
  locked.correct_key = { false };
  return locked;
}

BoolCircuit random_circuit( Rng& rng, int num_inputs, int num_gates )
{
  BoolCircuit circ;
  std::vector<std::string> pool;
  for ( int i = 0; i < num_inputs; ++i )
  {
    circ.add_input( "i" + std::to_string( i ) );
    pool.push_back( circ.inputs.back() );
  }
  for ( int g = 0; g < num_gates; ++g )
  {
    const auto kind = static_cast<GateKind>( rng.below( 8 ) );
    const int arity =
        gate_min_fanins( kind ) == 1 ? 1 : 2 + static_cast<int>( rng.below( 2 ) );
    std::vector<std::string> fan;
    std::vector<std::string> candidates = pool;
    for ( int k = 0; k < arity && !candidates.empty(); ++k )
    {
      const size_t pick = rng.below( candidates.size() );
      fan.push_back( candidates[pick] );
      candidates.erase( candidates.begin() + pick );
    }
    const std::string name = "g" + std::to_string( g );
    circ.add_gate( name, kind, fan );
    pool.push_back( name );
  }
  circ.add_output( pool.back() );
  circ.validate();
  return circ;
}

} // namespace

TEST_CASE( "a single-key conjunction lock falls within two patterns" )
{
  const auto circ = two_input_circuit( "AND" );
  for ( uint64_t seed = 1; seed <= 8; ++seed )
  {
    const auto locked = lock_network( map_to_tlg( circ ), 1, 100, seed );
    REQUIRE( locked.key_names.size() == 1 );

    const auto result = sat_attack( locked, circ, 60.0 );
    REQUIRE( result.status == AttackStatus::Recovered );
    REQUIRE( result.key.has_value() );
    CHECK( verify_unlock( locked, *result.key, circ ) );
    CHECK( result.dip_count <= 2 );
    CHECK( result.dips.size() == static_cast<size_t>( result.dip_count ) );
    for ( const auto& dip : result.dips )
    {
      CHECK( dip.size() == circ.inputs.size() );
    }
    CHECK( result.conflicts >= 0 );
    CHECK( result.decisions >= 0 );
    CHECK( result.cpu_time >= 0.0 );
  }
}

TEST_CASE( "a key without influence needs no oracle query" )
{
  const auto locked = weightless_key_lock();
  const auto oracle = two_input_circuit( "AND" );

  const auto result = sat_attack( locked, oracle );
  REQUIRE( result.status == AttackStatus::Recovered );
  CHECK( result.dip_count == 0 );
  CHECK( result.dips.empty() );
  REQUIRE( result.key.has_value() );
  CHECK( verify_unlock( locked, *result.key, oracle ) );
}

TEST_CASE( "the c17 lock is recovered and the key verifies" )
{
  const auto circ = c17_circuit();
  const auto locked = lock_network( map_to_tlg( circ ), 8, 50, 11 );

  const auto result = sat_attack( locked, circ, 60.0 );
  REQUIRE( result.status == AttackStatus::Recovered );
  REQUIRE( result.key.has_value() );
  CHECK( verify_unlock( locked, *result.key, circ ) );
  CHECK( result.dip_count >= 1 );
  CHECK( result.conflicts >= 0 );
  CHECK( result.decisions >= 0 );
}

TEST_CASE( "patterns never repeat and small locks terminate" )
{
  Rng rng( 20260822 );
  for ( int round = 0; round < 6; ++round )
  {
    const auto circ = random_circuit( rng, 5, 10 );
    const auto locked = lock_network( map_to_tlg( circ ), 3, 50, 1000 + round );

    const auto result = sat_attack( locked, circ, 60.0 );
    REQUIRE( result.status == AttackStatus::Recovered );
    REQUIRE( result.key.has_value() );
    CHECK( verify_unlock( locked, *result.key, circ ) );
    CHECK( result.dip_count <= 32 ); // at most one pattern per input assignment

    const std::set<std::vector<bool>> distinct( result.dips.begin(), result.dips.end() );
    CHECK( distinct.size() == result.dips.size() );
  }
}

TEST_CASE( "an exhausted budget reports a timeout" )
{
  const auto circ = c17_circuit();
  const auto locked = lock_network( map_to_tlg( circ ), 8, 50, 11 );

  const auto result = sat_attack( locked, circ, 1e-6 );
  CHECK( result.status == AttackStatus::Timeout );
  CHECK_FALSE( result.key.has_value() );
  CHECK( result.dip_count >= 0 );
  CHECK( result.conflicts >= 0 );
  CHECK( result.decisions >= 0 );
  CHECK( result.cpu_time >= 0.0 );
}

TEST_CASE( "an oracle no key can explain is refuted" )
{
  const auto and_circ = two_input_circuit( "AND" );
  const auto or_circ = two_input_circuit( "OR" );
  const auto locked = lock_network( map_to_tlg( and_circ ), 1, 100, 5 );

  const auto result = sat_attack( locked, or_circ, 60.0 );
  CHECK( result.status == AttackStatus::UnsatNoKey );
  CHECK_FALSE( result.key.has_value() );
}

TEST_CASE( "bad attack arguments are rejected" )
{
  const auto circ = two_input_circuit( "AND" );
  const auto locked = lock_network( map_to_tlg( circ ), 1, 100, 1 );

  auto renamed = circ;
  renamed.inputs[0] = "other";
  CHECK_THROWS_AS( sat_attack( locked, renamed ), std::invalid_argument );

  AttackOptions options;
  options.budget = 0.0;
  CHECK_THROWS_AS( sat_attack( locked, circ, options ), std::invalid_argument );
}

TEST_CASE( "attack statuses print their wire names" )
{
  CHECK( std::string( to_string( AttackStatus::Recovered ) ) == "RECOVERED" );
  CHECK( std::string( to_string( AttackStatus::UnsatNoKey ) ) == "UNSAT_NO_KEY" );
  CHECK( std::string( to_string( AttackStatus::Timeout ) ) == "TIMEOUT" );
}

TEST_CASE( "an external solver can drive the attack" )
{
  namespace fs = std::filesystem;
  const auto script = fs::temp_directory_path() / "tlgkit-test-dpll.py";
  {
    std::ofstream out( script );
    REQUIRE( out );
    out << R"PY(
import sys

def load(path):
    clauses = []
    nvars = 0
    for line in open(path):
        line = line.strip()
        if not line or line[0] == 'c':
            continue
        if line[0] == 'p':
            nvars = int(line.split()[2])
            continue
        lits = [int(t) for t in line.split()]
        if lits and lits[-1] == 0:
            lits.pop()
        if lits:
            clauses.append(lits)
    return nvars, clauses

def propagate(clauses, assign):
    changed = True
    while changed:
        changed = False
        for cl in clauses:
            unassigned = []
            satisfied = False
            for lit in cl:
                val = assign.get(abs(lit))
                if val is None:
                    unassigned.append(lit)
                elif (lit > 0) == val:
                    satisfied = True
                    break
            if satisfied:
                continue
            if not unassigned:
                return False
            if len(unassigned) == 1:
                assign[abs(unassigned[0])] = unassigned[0] > 0
                changed = True
    return True

def solve(nvars, clauses, assign):
    if not propagate(clauses, assign):
        return None
    for v in range(1, nvars + 1):
        if v not in assign:
            for val in (True, False):
                trial = dict(assign)
                trial[v] = val
                res = solve(nvars, clauses, trial)
                if res is not None:
                    return res
            return None
    return assign

nvars, clauses = load(sys.argv[1])
model = solve(nvars, clauses, {})
if model is None:
    print("s UNSATISFIABLE")
else:
    lits = [v if model[v] else -v for v in sorted(model)]
    print("s SATISFIABLE")
    print("v " + " ".join(str(l) for l in lits) + " 0")
)PY";
  }

  const auto circ = two_input_circuit( "AND" );
  const auto locked = lock_network( map_to_tlg( circ ), 1, 100, 2 );

  AttackOptions options;
  options.budget = 120.0;
  options.dimacs_command = "python3 " + script.string();
  const auto result = sat_attack( locked, circ, options );
  fs::remove( script );

  REQUIRE( result.status == AttackStatus::Recovered );
  REQUIRE( result.key.has_value() );
  CHECK( verify_unlock( locked, *result.key, circ ) );
  // the plain script prints no statistics, so they come back unavailable
  CHECK( result.conflicts == -1 );
  CHECK( result.decisions == -1 );
}
