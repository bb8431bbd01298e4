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
  \file equivalence.hpp
  \brief Solver-based equivalence checks between circuits and networks

  Equivalence is decided by asserting that some output of two encoded
  copies differs and asking the solver for a witness: an unsatisfiable
  difference formula proves the designs equal on every input.  The
  checks carry a wall-clock budget; running out of it raises
  solve_budget_exceeded rather than guessing an answer.
*/

#pragma once

#include "cnf_encoding.hpp"
#include "locking.hpp"
#include "sat_solver.hpp"
#include "simulation.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace tlgkit
{

/*! \brief An equivalence query gave neither a proof nor a counterexample in time. */
struct solve_budget_exceeded : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

namespace detail
{

/*! \brief Asserts that some output pair differs and decides the formula. */
inline bool difference_unsat( CnfFormula& f, const std::vector<std::string>& outputs,
                              const std::unordered_map<std::string, int>& va,
                              const std::unordered_map<std::string, int>& vb, double budget )
{
  std::vector<int> diffs;
  diffs.reserve( outputs.size() );
  for ( const auto& out : outputs )
  {
    const int d = f.new_var();
    f.add_clause( { -d, va.at( out ), vb.at( out ) } );
    f.add_clause( { -d, -va.at( out ), -vb.at( out ) } );
    diffs.push_back( d );
  }
  f.add_clause( diffs );
  SatSolver solver( f );
  switch ( solver.solve( {}, budget ) )
  {
  case SolveStatus::Unsat:
    return true;
  case SolveStatus::Sat:
    return false;
  default:
    throw solve_budget_exceeded( "equivalence check ran out of its time budget" );
  }
}

} // namespace detail

/*! \brief True iff two key-free threshold networks agree on all inputs. */
inline bool sat_equivalent( const TlgNetwork& a, const TlgNetwork& b, double budget = 60.0 )
{
  if ( a.inputs != b.inputs || a.outputs != b.outputs )
  {
    throw std::invalid_argument( "networks differ in interface" );
  }
  if ( !a.key_inputs.empty() || !b.key_inputs.empty() )
  {
    throw std::invalid_argument( "equivalence of keyed networks needs the keys bound first" );
  }
  CnfFormula f;
  const auto va = encode_network( a, f, "a", "a" );
  const auto vb = encode_network( b, f, "b", "b" );
  return detail::difference_unsat( f, a.outputs, va, vb, budget );
}

/*! \brief True iff a gate-level circuit and a key-free network agree on all inputs. */
inline bool sat_equivalent( const BoolCircuit& circ, const TlgNetwork& net, double budget = 60.0 )
{
  if ( circ.inputs != net.inputs || circ.outputs != net.outputs )
  {
    throw std::invalid_argument( "circuit and network differ in interface" );
  }
  if ( !net.key_inputs.empty() )
  {
    throw std::invalid_argument( "equivalence of keyed networks needs the keys bound first" );
  }
  CnfFormula f;
  const auto va = encode_circuit( circ, f, "a" );
  const auto vb = encode_network( net, f, "b", "b" );
  return detail::difference_unsat( f, circ.outputs, va, vb, budget );
}

/*! \brief Checks that a key restores the original circuit behaviour.
 *
 * Small networks (at most 16 primary inputs) are checked exhaustively
 * with bit-parallel simulation; larger ones bind the key bits as unit
 * clauses and prove the difference formula unsatisfiable within the
 * budget.
 */
inline bool verify_unlock( const LockedNetwork& locked, const KeyVector& key,
                           const BoolCircuit& original, double budget = 60.0 )
{
  if ( key.size() != locked.key_names.size() )
  {
    throw std::invalid_argument( "key length does not match the locked network" );
  }
  if ( locked.network.inputs != original.inputs || locked.network.outputs != original.outputs )
  {
    throw std::invalid_argument( "locked network and original differ in interface" );
  }
  if ( original.inputs.size() <= 16u )
  {
    return verify_unlock_exhaustive( locked, key, original );
  }
  CnfFormula f;
  const auto va = encode_circuit( original, f, "a" );
  const auto vb = encode_network( locked.network, f, "b", "b" );
  for ( size_t l = 0; l < key.size(); ++l )
  {
    const int kv = vb.at( locked.key_names[l] );
    f.add_clause( { key[l] ? kv : -kv } );
  }
  return detail::difference_unsat( f, original.outputs, va, vb, budget );
}

/*! \brief As above, with a threshold network as the behavioural reference. */
inline bool verify_unlock( const LockedNetwork& locked, const KeyVector& key,
                           const TlgNetwork& original, double budget = 60.0 )
{
  if ( key.size() != locked.key_names.size() )
  {
    throw std::invalid_argument( "key length does not match the locked network" );
  }
  if ( !original.key_inputs.empty() )
  {
    throw std::invalid_argument( "the reference network must be key free" );
  }
  if ( locked.network.inputs != original.inputs || locked.network.outputs != original.outputs )
  {
    throw std::invalid_argument( "locked network and reference differ in interface" );
  }

  const size_t n = original.inputs.size();
  if ( n <= 16u )
  {
    const TlgEvaluator base( original );
    const TlgEvaluator keyed( locked.network );
    std::vector<uint64_t> key_words( key.size() );
    for ( size_t l = 0; l < key.size(); ++l )
    {
      key_words[l] = key[l] ? ~uint64_t( 0 ) : uint64_t( 0 );
    }
    const uint64_t blocks = n > 6 ? ( uint64_t( 1 ) << ( n - 6 ) ) : 1;
    const int lanes = n >= 6 ? 64 : ( 1 << n );
    const uint64_t mask = lanes == 64 ? ~uint64_t( 0 ) : ( ( uint64_t( 1 ) << lanes ) - 1 );
    for ( uint64_t block = 0; block < blocks; ++block )
    {
      std::vector<uint64_t> words( n );
      for ( size_t i = 0; i < n; ++i )
      {
        words[i] = simulation_pattern( static_cast<int>( i ), block );
      }
      const auto want = base.eval_words( words );
      const auto have = keyed.eval_words( words, key_words );
      for ( size_t o = 0; o < want.size(); ++o )
      {
        if ( ( want[o] & mask ) != ( have[o] & mask ) )
        {
          return false;
        }
      }
    }
    return true;
  }

  CnfFormula f;
  const auto va = encode_network( original, f, "a", "a" );
  const auto vb = encode_network( locked.network, f, "b", "b" );
  for ( size_t l = 0; l < key.size(); ++l )
  {
    const int kv = vb.at( locked.key_names[l] );
    f.add_clause( { key[l] ? kv : -kv } );
  }
  return detail::difference_unsat( f, original.outputs, va, vb, budget );
}

} // namespace tlgkit
