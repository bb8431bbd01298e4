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
  \file sat_attack.hpp
  \brief Oracle-guided key recovery against locked threshold networks

  The attack owns a working copy of the locked design and black-box
  access to the original function (simulation of the unlocked
  netlist).  It repeatedly asks a solver for a distinguishing input
  pattern — an input on which two key hypotheses disagree — queries
  the oracle on that pattern, and pins both hypotheses to the observed
  answer.  When no distinguishing pattern is left, every key
  consistent with the recorded answers realizes the same function, so
  any one of them is extracted and verified.
*/

#pragma once

#include "cnf_encoding.hpp"
#include "equivalence.hpp"
#include "locking.hpp"
#include "sat_solver.hpp"
#include "simulation.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tlgkit
{

/*! \brief Terminal state of a key-recovery run. */
enum class AttackStatus
{
  Recovered,  //!< a key was extracted and passed verification
  UnsatNoKey, //!< no key is consistent with the oracle's answers
  Timeout     //!< the time budget ran out before a verdict
};

inline const char* to_string( AttackStatus status )
{
  switch ( status )
  {
  case AttackStatus::Recovered:
    return "RECOVERED";
  case AttackStatus::UnsatNoKey:
    return "UNSAT_NO_KEY";
  default:
    return "TIMEOUT";
  }
}

/*! \brief Outcome record of a key-recovery run.

  Solver counters are aggregated over every call the attack issued.
  An external backend that prints no statistics makes the affected
  counter unavailable, reported as -1; the embedded backend always
  reports both.  cpu_time is wall-clock seconds for the whole run and
  is filled in on every path, timeouts included.
*/
struct AttackResult
{
  AttackStatus status = AttackStatus::Timeout;
  std::optional<KeyVector> key;         //!< present exactly when status is Recovered
  int dip_count = 0;                    //!< distinguishing patterns consumed
  int64_t conflicts = 0;                //!< -1 when the backend does not report them
  int64_t decisions = 0;                //!< -1 when the backend does not report them
  double cpu_time = 0.0;                //!< seconds
  std::vector<std::vector<bool>> dips;  //!< the patterns, in primary input order
};

/*! \brief Tuning knobs for sat_attack. */
struct AttackOptions
{
  /*! Wall-clock seconds for the entire run, verification included. */
  double budget = 3600.0;

  /*! When non-empty, a command run as `command <file.cnf>` that solves
    the DIMACS instance and prints an `s` verdict line plus `v` model
    lines.  The formula is re-solved from scratch each iteration.  When
    empty, the embedded solver is used incrementally. */
  std::string dimacs_command{};
};

namespace detail
{

/*! \brief Sums solver counters, treating -1 as sticky "unavailable". */
struct attack_counters
{
  int64_t conflicts = 0;
  int64_t decisions = 0;

  void add( int64_t c, int64_t d )
  {
    if ( c < 0 )
    {
      conflicts = -1;
    }
    else if ( conflicts >= 0 )
    {
      conflicts += c;
    }
    if ( d < 0 )
    {
      decisions = -1;
    }
    else if ( decisions >= 0 )
    {
      decisions += d;
    }
  }
};

} // namespace detail

/*! \brief Recovers the key of a locked network using oracle queries.

  The solver works on a miter of two key hypotheses over shared
  inputs.  Each satisfying assignment yields a distinguishing input
  pattern; the oracle's response on it is pinned onto both hypotheses
  by appending two more copies of the network whose inputs and outputs
  are fixed as unit clauses.  Once the miter becomes unsatisfiable the
  recorded responses determine the function, and a key is extracted by
  solving the response constraints alone with a single key copy.  The
  extracted key is then independently verified against the oracle; a
  verification failure — possible when the oracle does not match any
  key, e.g. the wrong reference netlist was supplied — yields
  UnsatNoKey rather than a bogus key.

  A network whose key inputs never influence an output produces an
  unsatisfiable miter immediately; the all-false key is returned after
  verification without consuming any pattern.

  Throws std::invalid_argument when the oracle's interface differs
  from the locked network's or the budget is not positive, and
  std::logic_error if the solver ever revisits a pattern, which the
  appended constraints make impossible for a sound backend.
*/
inline AttackResult sat_attack( const LockedNetwork& locked, const BoolCircuit& oracle,
                                const AttackOptions& options = {} )
{
  if ( locked.network.inputs != oracle.inputs || locked.network.outputs != oracle.outputs )
  {
    throw std::invalid_argument( "oracle and locked network differ in interface" );
  }
  if ( !( options.budget > 0.0 ) )
  {
    throw std::invalid_argument( "attack budget must be positive" );
  }

  const auto t0 = std::chrono::steady_clock::now();
  const auto elapsed = [&t0]() {
    return std::chrono::duration<double>( std::chrono::steady_clock::now() - t0 ).count();
  };

  AttackResult result;
  detail::attack_counters counters;
  const auto finish = [&]( AttackStatus status, std::optional<KeyVector> key ) {
    result.status = status;
    result.key = std::move( key );
    result.conflicts = counters.conflicts;
    result.decisions = counters.decisions;
    result.cpu_time = elapsed();
    return result;
  };

  CnfFormula f = build_miter( locked );
  const bool external = !options.dimacs_command.empty();

  // the embedded backend mirrors f incrementally instead of reloading it
  SatSolver solver;
  size_t mirrored = 0;
  uint64_t seen_conflicts = 0;
  uint64_t seen_decisions = 0;
  const auto sync = [&]() {
    for ( ; mirrored < f.clauses.size(); ++mirrored )
    {
      solver.add_clause( f.clauses[mirrored] );
    }
  };
  if ( !external )
  {
    sync();
  }

  std::set<std::vector<bool>> seen_dips;
  std::vector<std::vector<bool>> oracle_replies;

  while ( true )
  {
    const double remaining = options.budget - elapsed();
    if ( remaining <= 0.0 )
    {
      return finish( AttackStatus::Timeout, std::nullopt );
    }

    SolveStatus status;
    std::vector<bool> model; // indexed by variable - 1
    if ( external )
    {
      auto res = run_dimacs_solver( options.dimacs_command, f );
      counters.add( res.conflicts, res.decisions );
      if ( res.status == SolveStatus::Unknown )
      {
        throw std::runtime_error( "external solver gave no verdict" );
      }
      status = res.status;
      model = std::move( res.model );
      if ( model.size() < static_cast<size_t>( f.num_vars ) )
      {
        model.resize( static_cast<size_t>( f.num_vars ) );
      }
    }
    else
    {
      status = solver.solve( {}, remaining );
      counters.add( static_cast<int64_t>( solver.stats().conflicts - seen_conflicts ),
                    static_cast<int64_t>( solver.stats().decisions - seen_decisions ) );
      seen_conflicts = solver.stats().conflicts;
      seen_decisions = solver.stats().decisions;
      if ( status == SolveStatus::Unknown )
      {
        return finish( AttackStatus::Timeout, std::nullopt );
      }
      if ( status == SolveStatus::Sat )
      {
        model.resize( static_cast<size_t>( f.num_vars ) );
        for ( int v = 1; v <= f.num_vars; ++v )
        {
          model[static_cast<size_t>( v ) - 1] = solver.model_value( v );
        }
      }
    }
    if ( status == SolveStatus::Unsat )
    {
      break;
    }

    // read the distinguishing pattern off the shared input variables
    std::vector<bool> dip;
    dip.reserve( locked.network.inputs.size() );
    Assignment query;
    for ( const auto& in : locked.network.inputs )
    {
      const bool bit = model[static_cast<size_t>( f.var_of( in ) ) - 1];
      dip.push_back( bit );
      query[in] = bit;
    }
    if ( !seen_dips.insert( dip ).second )
    {
      throw std::logic_error( "attack revisited an input pattern" );
    }

    const auto reply = simulate( oracle, query );

    // pin both key hypotheses to the oracle's answer on this pattern
    const std::string tag = std::to_string( result.dip_count );
    for ( const char* side : { "a", "b" } )
    {
      const auto vars = encode_network( locked.network, f, "q" + tag + side, side, false );
      for ( size_t i = 0; i < locked.network.inputs.size(); ++i )
      {
        const int v = vars.at( locked.network.inputs[i] );
        f.add_clause( { dip[i] ? v : -v } );
      }
      for ( size_t i = 0; i < locked.network.outputs.size(); ++i )
      {
        const int v = vars.at( locked.network.outputs[i] );
        f.add_clause( { reply[i] ? v : -v } );
      }
    }
    if ( !external )
    {
      sync();
    }

    result.dips.push_back( std::move( dip ) );
    oracle_replies.push_back( reply );
    ++result.dip_count;
  }

  // extraction: any key consistent with every recorded answer will do
  KeyVector key( locked.key_names.size(), false );
  if ( result.dip_count > 0 )
  {
    CnfFormula g;
    for ( int j = 0; j < result.dip_count; ++j )
    {
      const auto vars =
          encode_network( locked.network, g, "e" + std::to_string( j ), "k", false );
      for ( size_t i = 0; i < locked.network.inputs.size(); ++i )
      {
        const int v = vars.at( locked.network.inputs[i] );
        g.add_clause( { result.dips[j][i] ? v : -v } );
      }
      for ( size_t i = 0; i < locked.network.outputs.size(); ++i )
      {
        const int v = vars.at( locked.network.outputs[i] );
        g.add_clause( { oracle_replies[j][i] ? v : -v } );
      }
    }

    const double remaining = options.budget - elapsed();
    if ( remaining <= 0.0 )
    {
      return finish( AttackStatus::Timeout, std::nullopt );
    }
    SolveStatus status;
    std::vector<bool> model;
    if ( external )
    {
      auto res = run_dimacs_solver( options.dimacs_command, g );
      counters.add( res.conflicts, res.decisions );
      if ( res.status == SolveStatus::Unknown )
      {
        throw std::runtime_error( "external solver gave no verdict" );
      }
      status = res.status;
      model = std::move( res.model );
      if ( model.size() < static_cast<size_t>( g.num_vars ) )
      {
        model.resize( static_cast<size_t>( g.num_vars ) );
      }
    }
    else
    {
      SatSolver extractor( g );
      status = extractor.solve( {}, remaining );
      counters.add( static_cast<int64_t>( extractor.stats().conflicts ),
                    static_cast<int64_t>( extractor.stats().decisions ) );
      if ( status == SolveStatus::Sat )
      {
        model.resize( static_cast<size_t>( g.num_vars ) );
        for ( int v = 1; v <= g.num_vars; ++v )
        {
          model[static_cast<size_t>( v ) - 1] = extractor.model_value( v );
        }
      }
    }
    if ( status == SolveStatus::Unknown )
    {
      return finish( AttackStatus::Timeout, std::nullopt );
    }
    if ( status == SolveStatus::Unsat )
    {
      return finish( AttackStatus::UnsatNoKey, std::nullopt );
    }
    for ( size_t l = 0; l < locked.key_names.size(); ++l )
    {
      const int v = g.var_of( detail::prefixed( "k", locked.key_names[l] ) );
      key[l] = model[static_cast<size_t>( v ) - 1];
    }
  }

  // independent verification guards against an oracle no key explains
  const double remaining = options.budget - elapsed();
  if ( remaining <= 0.0 )
  {
    return finish( AttackStatus::Timeout, std::nullopt );
  }
  try
  {
    if ( !verify_unlock( locked, key, oracle, remaining ) )
    {
      return finish( AttackStatus::UnsatNoKey, std::nullopt );
    }
  }
  catch ( const solve_budget_exceeded& )
  {
    return finish( AttackStatus::Timeout, std::nullopt );
  }
  return finish( AttackStatus::Recovered, std::move( key ) );
}

/*! \brief Convenience overload taking only a time budget. */
inline AttackResult sat_attack( const LockedNetwork& locked, const BoolCircuit& oracle,
                                double budget )
{
  AttackOptions options;
  options.budget = budget;
  return sat_attack( locked, oracle, options );
}

} // namespace tlgkit
