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
  \file locking.hpp
  \brief Key-based locking of threshold networks

  Locking hides the function of selected gates behind key inputs that
  enter the weighted sum like any other input.  Each selected gate
  receives one or more key bits with nonzero weights, and its threshold
  is raised by the contribution the correct key makes, so that applying
  the correct key reproduces the original behaviour exactly while any
  other key shifts the effective threshold of every gate it feeds.
*/

#pragma once

#include "rng.hpp"
#include "simulation.hpp"
#include "tlg_network.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace tlgkit
{

/*! \brief Ordered key bit values, one per key input. */
using KeyVector = std::vector<bool>;

/*! \brief Controls how key weights are drawn.

  Magnitudes are sampled uniformly from [1, max(1, floor(S * rho))],
  where S is the sum of the absolute data weights of the gate being
  locked, so keys weigh in proportionally to the signals they join.
  Signs are drawn uniformly, but a gate holding two or more key bits
  always receives at least one positive and one negative weight.
*/
struct WeightPolicy
{
  double rho = 1.0;
  uint64_t seed = 1;
};

/*! \brief Gate selection and key material produced ahead of locking. */
struct KeyPreparation
{
  std::vector<size_t> selection; //!< sorted gate indexes to lock
  KeyVector key;                 //!< correct key bits
};

/*! \brief A threshold network with embedded key inputs. */
struct LockedNetwork
{
  TlgNetwork network;
  std::vector<std::string> key_names;   //!< in key bit order
  std::vector<size_t> locked_gate_ids;  //!< sorted gate indexes
  KeyVector correct_key;
};

/*! \brief Chooses the gates to lock and draws a random key.

  Exactly ceil(num_gates * percent / 100) gates are selected uniformly
  at random, preferring gates with at least two inputs while enough of
  them exist.  The draw is fully determined by the seed.
*/
inline KeyPreparation prepare_keys( const TlgNetwork& net, int num_keys, int percent,
                                    uint64_t seed )
{
  if ( net.num_gates() == 0 )
  {
    throw std::invalid_argument( "cannot prepare keys for an empty network" );
  }
  if ( !net.key_inputs.empty() )
  {
    throw std::invalid_argument( "network already has key inputs" );
  }
  if ( num_keys < 1 )
  {
    throw std::invalid_argument( "at least one key bit is required" );
  }
  if ( percent < 1 || percent > 100 )
  {
    throw std::invalid_argument( "percent must be in [1, 100]" );
  }

  const size_t num_gates = net.num_gates();
  const size_t count =
      ( num_gates * static_cast<size_t>( percent ) + 99 ) / 100;

  std::vector<size_t> wide, narrow;
  for ( size_t i = 0; i < num_gates; ++i )
  {
    ( net.gates[i].inputs.size() >= 2 ? wide : narrow ).push_back( i );
  }

  Rng rng( seed );
  KeyPreparation prep;
  if ( count <= wide.size() )
  {
    for ( auto pick : rng.sample_indices( wide.size(), count ) )
    {
      prep.selection.push_back( wide[pick] );
    }
  }
  else
  {
    prep.selection = wide;
    for ( auto pick : rng.sample_indices( narrow.size(), count - wide.size() ) )
    {
      prep.selection.push_back( narrow[pick] );
    }
    std::sort( prep.selection.begin(), prep.selection.end() );
  }

  for ( int i = 0; i < num_keys; ++i )
  {
    prep.key.push_back( rng.coin() );
  }
  return prep;
}

/*! \brief Embeds key bits into the selected gates.

  Key bits are distributed round-robin over the selected gates, so a
  key bit may feed several gates and a gate may hold several key bits;
  every selected gate ends up with at least one.  For a gate with
  threshold T and drawn key weights v, the locked gate uses threshold
  T' = T + sum of v_l over the key bits whose correct value is 1, which
  makes the correct key cancel the key contribution exactly.
*/
inline LockedNetwork integrate_keys( const TlgNetwork& net, const std::vector<size_t>& selection,
                                     const KeyVector& key, const WeightPolicy& policy = {} )
{
  if ( !net.key_inputs.empty() )
  {
    throw std::invalid_argument( "network already has key inputs" );
  }

  LockedNetwork locked;
  locked.network = net;
  if ( selection.empty() )
  {
    return locked;
  }
  if ( key.empty() )
  {
    throw std::invalid_argument( "key must not be empty" );
  }
  if ( policy.rho <= 0.0 )
  {
    throw std::invalid_argument( "weight policy rho must be positive" );
  }

  std::vector<size_t> sel = selection;
  std::sort( sel.begin(), sel.end() );
  sel.erase( std::unique( sel.begin(), sel.end() ), sel.end() );
  if ( sel.back() >= net.num_gates() )
  {
    throw std::out_of_range( "selection references unknown gate" );
  }

  std::unordered_set<std::string> taken( net.inputs.begin(), net.inputs.end() );
  for ( const auto& gate : net.gates )
  {
    taken.insert( gate.output );
  }
  for ( size_t l = 0; l < key.size(); ++l )
  {
    std::string name = "k" + std::to_string( l );
    while ( taken.count( name ) )
    {
      name += "_";
    }
    taken.insert( name );
    locked.key_names.push_back( name );
    locked.network.add_key_input( name );
  }

  // round-robin assignment: per selected gate, the key bits it receives
  std::vector<std::vector<size_t>> assigned( sel.size() );
  const size_t rounds = std::max( key.size(), sel.size() );
  for ( size_t i = 0; i < rounds; ++i )
  {
    assigned[i % sel.size()].push_back( i % key.size() );
  }

  Rng rng( policy.seed );
  for ( size_t s = 0; s < sel.size(); ++s )
  {
    Tlg& gate = locked.network.gates[sel[s]];
    int data_sum = 0;
    for ( const auto& gi : gate.inputs )
    {
      data_sum += std::abs( gi.weight );
    }
    const int cap = std::max( 1, static_cast<int>( std::floor( data_sum * policy.rho ) ) );

    std::vector<int> weights;
    for ( size_t l = 0; l < assigned[s].size(); ++l )
    {
      const int magnitude = static_cast<int>( rng.range( 1, cap ) );
      weights.push_back( rng.coin() ? magnitude : -magnitude );
    }
    if ( weights.size() >= 2 )
    {
      const bool all_pos = std::all_of( weights.begin(), weights.end(),
                                        []( int w ) { return w > 0; } );
      const bool all_neg = std::all_of( weights.begin(), weights.end(),
                                        []( int w ) { return w < 0; } );
      if ( all_pos || all_neg )
      {
        weights[rng.below( weights.size() )] *= -1;
      }
    }

    for ( size_t l = 0; l < assigned[s].size(); ++l )
    {
      const size_t bit = assigned[s][l];
      gate.inputs.push_back( TlgInput{ locked.key_names[bit], weights[l], true } );
      if ( key[bit] )
      {
        gate.threshold += weights[l];
      }
    }
  }

  locked.locked_gate_ids = sel;
  locked.correct_key = key;
  locked.network.validate();
  return locked;
}

/*! \brief One-call convenience: select, draw, and integrate. */
inline LockedNetwork lock_network( const TlgNetwork& net, int num_keys, int percent,
                                   uint64_t seed, double rho = 1.0 )
{
  const auto prep = prepare_keys( net, num_keys, percent, seed );
  WeightPolicy policy;
  policy.rho = rho;
  policy.seed = derive_seed( seed, 0x746c676c6f636bULL );
  return integrate_keys( net, prep.selection, prep.key, policy );
}

/*! \brief Rebuilds the locking bookkeeping around a keyed network.

  Gates are scanned for key-weighted inputs to recover the locked gate
  set.  The correct key stays empty — which is all an attacker-side
  consumer of a serialized locked design may hold anyway.
*/
inline LockedNetwork locked_from_network( TlgNetwork net )
{
  if ( net.key_inputs.empty() )
  {
    throw std::invalid_argument( "network '" + net.name + "' declares no key inputs" );
  }
  LockedNetwork locked;
  locked.key_names = net.key_inputs;
  for ( size_t i = 0; i < net.gates.size(); ++i )
  {
    for ( const auto& in : net.gates[i].inputs )
    {
      if ( in.is_key )
      {
        locked.locked_gate_ids.push_back( i );
        break;
      }
    }
  }
  locked.network = std::move( net );
  return locked;
}

/*! \brief As locked_from_network, but also attaches the correct key. */
inline LockedNetwork locked_from_network( TlgNetwork net, const KeyVector& correct_key )
{
  auto locked = locked_from_network( std::move( net ) );
  if ( correct_key.size() != locked.key_names.size() )
  {
    throw std::invalid_argument( "key of " + std::to_string( correct_key.size() ) +
                                 " bits does not fit " +
                                 std::to_string( locked.key_names.size() ) + " key inputs" );
  }
  locked.correct_key = correct_key;
  return locked;
}

/*! \brief Checks that a key restores the original circuit behaviour.

  The check is exhaustive over all input assignments and therefore
  limited to 16 primary inputs; verify_unlock in equivalence.hpp
  dispatches to a solver-based check beyond that.
*/
inline bool verify_unlock_exhaustive( const LockedNetwork& locked, const KeyVector& key,
                                      const BoolCircuit& original )
{
  if ( key.size() != locked.key_names.size() )
  {
    throw std::invalid_argument( "key length does not match the locked network" );
  }
  if ( locked.network.inputs != original.inputs || locked.network.outputs != original.outputs )
  {
    throw std::invalid_argument( "locked network and original differ in interface" );
  }
  const size_t n = original.inputs.size();
  if ( n > 16 )
  {
    throw std::invalid_argument(
        "exhaustive unlock check supports at most 16 inputs; use the SAT equivalence check" );
  }

  const CircuitEvaluator ce( original );
  const TlgEvaluator te( locked.network );
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
    const auto want = ce.eval_words( words );
    const auto have = te.eval_words( words, key_words );
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

} // namespace tlgkit
