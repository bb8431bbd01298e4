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
  \file corruption.hpp
  \brief Output corruption of locked networks under wrong keys

  How often does a wrong key actually break the circuit?  For every
  wrong key the analyzer finds the fraction of input vectors on which
  the locked network disagrees with the reference function, and
  averages those fractions into a single corruption rate.  Small
  designs are swept exhaustively with bit-parallel simulation; larger
  ones fall back to seeded sampling of keys and vectors.  By default a
  vector counts as corrupted when any primary output differs; a
  per-output-bit accounting is available behind a flag.
*/

#pragma once

#include "bool_circuit.hpp"
#include "locking.hpp"
#include "rng.hpp"
#include "simulation.hpp"
#include "tlg_network.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlgkit
{

enum class SamplingMode
{
  Exhaustive, //!< all wrong keys crossed with all input vectors
  MonteCarlo  //!< seeded sample of wrong keys and vectors
};

inline const char* to_string( SamplingMode mode )
{
  return mode == SamplingMode::Exhaustive ? "EXHAUSTIVE" : "MONTE_CARLO";
}

struct CorruptionOptions
{
  SamplingMode mode = SamplingMode::Exhaustive;
  uint64_t seed = 1;        //!< Monte Carlo only
  int sample_keys = 256;    //!< wrong keys drawn in Monte Carlo mode
  int sample_inputs = 1024; //!< vectors drawn per sampled key
  bool per_output_bits = false; //!< count differing output bits, not vectors
};

/*! \brief Corruption figures plus the configuration that produced them.

  per_key_mismatch[i] belongs to keys[i]; the correct key is never
  among them — its (by construction zero) mismatch is carried
  separately as a sanity figure.  locked_fraction echoes the share of
  gates carrying key inputs, and key_weights the weight each key bit
  contributes, in key order.
*/
struct CorruptionReport
{
  std::string circuit;
  SamplingMode mode = SamplingMode::Exhaustive;
  uint64_t seed = 0;      //!< echoed in Monte Carlo mode, 0 otherwise
  int sampled_keys = 0;   //!< 0 in exhaustive mode
  int sampled_inputs = 0; //!< 0 in exhaustive mode
  bool per_output_bits = false;
  std::vector<KeyVector> keys;
  std::vector<double> per_key_mismatch;
  double mean = 0.0; //!< the corruption rate: mean over wrong keys
  double max = 0.0;
  double correct_key_mismatch = 0.0;
  std::vector<int> key_weights;
  double locked_fraction = 0.0;
};

namespace detail
{

/*! \brief Mismatch count between two output word sets under a lane mask. */
inline uint64_t mismatch_count( const std::vector<uint64_t>& reference,
                                const std::vector<uint64_t>& got, uint64_t mask,
                                bool per_output_bits )
{
  if ( per_output_bits )
  {
    uint64_t bits = 0;
    for ( size_t o = 0; o < reference.size(); ++o )
    {
      bits += static_cast<uint64_t>( std::popcount( ( reference[o] ^ got[o] ) & mask ) );
    }
    return bits;
  }
  uint64_t any = 0;
  for ( size_t o = 0; o < reference.size(); ++o )
  {
    any |= reference[o] ^ got[o];
  }
  return static_cast<uint64_t>( std::popcount( any & mask ) );
}

} // namespace detail

/*! \brief Measures how badly wrong keys corrupt the locked network.

  The reference function is the original circuit, which must expose
  the same primary inputs and outputs.  Exhaustive mode enumerates
  every wrong key against every input vector and demands
  2^inputs * (2^keys - 1) <= 2^26 evaluations; Monte Carlo mode draws
  `sample_keys` wrong keys and `sample_inputs` fresh vectors for each,
  reproducibly from the seed.
*/
inline CorruptionReport corruption_rate( const LockedNetwork& locked,
                                         const BoolCircuit& original,
                                         const CorruptionOptions& options = {} )
{
  const TlgNetwork& net = locked.network;
  if ( net.inputs != original.inputs || net.outputs != original.outputs )
  {
    throw std::invalid_argument( "locked network and original differ in interface" );
  }
  if ( net.key_inputs.empty() )
  {
    throw std::invalid_argument( "network has no key inputs to corrupt" );
  }
  if ( locked.correct_key.size() != locked.key_names.size() ||
       locked.key_names.size() != net.key_inputs.size() )
  {
    throw std::invalid_argument( "locked network key bookkeeping is inconsistent" );
  }

  const int n = static_cast<int>( net.inputs.size() );
  const int m = static_cast<int>( net.key_inputs.size() );
  const int num_outputs = static_cast<int>( net.outputs.size() );

  CorruptionReport report;
  report.circuit = net.name;
  report.mode = options.mode;
  report.per_output_bits = options.per_output_bits;
  report.locked_fraction =
      net.gates.empty()
          ? 0.0
          : static_cast<double>( locked.locked_gate_ids.size() ) / net.gates.size();
  for ( const auto& name : locked.key_names )
  {
    int weight = 0;
    for ( const auto& g : net.gates )
    {
      for ( const auto& in : g.inputs )
      {
        if ( in.is_key && in.signal == name )
        {
          weight = in.weight;
        }
      }
    }
    report.key_weights.push_back( weight );
  }

  const TlgEvaluator evaluator( net );
  const CircuitEvaluator reference( original );

  if ( options.mode == SamplingMode::Exhaustive )
  {
    if ( n + m > 60 )
    {
      throw std::invalid_argument( "exhaustive corruption bound exceeded" );
    }
    const uint64_t vectors = uint64_t( 1 ) << n;
    const uint64_t wrong_keys = ( uint64_t( 1 ) << m ) - 1;
    if ( vectors * wrong_keys > ( uint64_t( 1 ) << 26 ) )
    {
      throw std::invalid_argument( "exhaustive corruption bound exceeded" );
    }

    // reference output words per block, computed once
    const uint64_t blocks = n > 6 ? ( uint64_t( 1 ) << ( n - 6 ) ) : 1;
    const uint64_t mask = n >= 6 ? ~uint64_t( 0 ) : ( ( uint64_t( 1 ) << vectors ) - 1 );
    std::vector<std::vector<uint64_t>> reference_words( blocks );
    std::vector<uint64_t> input_words( n );
    for ( uint64_t b = 0; b < blocks; ++b )
    {
      for ( int i = 0; i < n; ++i )
      {
        input_words[i] = simulation_pattern( i, b );
      }
      reference_words[b] = reference.eval_words( input_words );
    }

    uint64_t correct_value = 0;
    for ( int k = 0; k < m; ++k )
    {
      correct_value |= locked.correct_key[k] ? ( uint64_t( 1 ) << k ) : 0;
    }

    const uint64_t denominator =
        vectors * ( options.per_output_bits ? static_cast<uint64_t>( num_outputs ) : 1 );
    std::vector<uint64_t> key_words( m );
    const auto mismatch_of = [&]( uint64_t key_value ) {
      for ( int k = 0; k < m; ++k )
      {
        key_words[k] = ( ( key_value >> k ) & 1u ) ? ~uint64_t( 0 ) : 0;
      }
      uint64_t count = 0;
      for ( uint64_t b = 0; b < blocks; ++b )
      {
        for ( int i = 0; i < n; ++i )
        {
          input_words[i] = simulation_pattern( i, b );
        }
        const auto got = evaluator.eval_words( input_words, key_words );
        count += detail::mismatch_count( reference_words[b], got, mask,
                                         options.per_output_bits );
      }
      return static_cast<double>( count ) / static_cast<double>( denominator );
    };

    for ( uint64_t kv = 0; kv < ( uint64_t( 1 ) << m ); ++kv )
    {
      if ( kv == correct_value )
      {
        continue;
      }
      KeyVector bits( m );
      for ( int k = 0; k < m; ++k )
      {
        bits[k] = ( kv >> k ) & 1u;
      }
      report.keys.push_back( std::move( bits ) );
      report.per_key_mismatch.push_back( mismatch_of( kv ) );
    }
    report.correct_key_mismatch = mismatch_of( correct_value );
  }
  else
  {
    if ( options.sample_keys < 1 || options.sample_inputs < 1 )
    {
      throw std::invalid_argument( "Monte Carlo sample counts must be positive" );
    }
    report.seed = options.seed;
    report.sampled_keys = options.sample_keys;
    report.sampled_inputs = options.sample_inputs;
    Rng rng( options.seed );

    const auto sample_mismatch = [&]( const KeyVector& key ) {
      std::vector<uint64_t> key_words( m );
      for ( int k = 0; k < m; ++k )
      {
        key_words[k] = key[k] ? ~uint64_t( 0 ) : 0;
      }
      std::vector<uint64_t> input_words( n );
      uint64_t count = 0;
      int left = options.sample_inputs;
      while ( left > 0 )
      {
        const int lanes = std::min( left, 64 );
        const uint64_t mask =
            lanes == 64 ? ~uint64_t( 0 ) : ( ( uint64_t( 1 ) << lanes ) - 1 );
        for ( int i = 0; i < n; ++i )
        {
          input_words[i] = rng.next();
        }
        const auto want = reference.eval_words( input_words );
        const auto got = evaluator.eval_words( input_words, key_words );
        count += detail::mismatch_count( want, got, mask, options.per_output_bits );
        left -= lanes;
      }
      const uint64_t denominator =
          static_cast<uint64_t>( options.sample_inputs ) *
          ( options.per_output_bits ? static_cast<uint64_t>( num_outputs ) : 1 );
      return static_cast<double>( count ) / static_cast<double>( denominator );
    };

    for ( int draw = 0; draw < options.sample_keys; ++draw )
    {
      KeyVector key( m );
      do
      {
        for ( int k = 0; k < m; ++k )
        {
          key[k] = rng.coin();
        }
      } while ( key == locked.correct_key );
      report.keys.push_back( key );
      report.per_key_mismatch.push_back( sample_mismatch( key ) );
    }
    report.correct_key_mismatch = sample_mismatch( locked.correct_key );
  }

  double sum = 0.0;
  for ( const double rate : report.per_key_mismatch )
  {
    sum += rate;
    report.max = std::max( report.max, rate );
  }
  report.mean = report.per_key_mismatch.empty()
                    ? 0.0
                    : sum / static_cast<double>( report.per_key_mismatch.size() );
  return report;
}

/*! \brief One CSV row per wrong key: the key bits and their mismatch. */
inline void write_csv( const CorruptionReport& report, std::ostream& out )
{
  out << "key,mismatch\n";
  for ( size_t i = 0; i < report.keys.size(); ++i )
  {
    for ( const bool bit : report.keys[i] )
    {
      out << ( bit ? '1' : '0' );
    }
    out << ',' << report.per_key_mismatch[i] << '\n';
  }
}

} // namespace tlgkit
