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
  \file weight_sweep.hpp
  \brief Security/cost trade-off across total key weight

  The amount of weight given to key inputs is the central tuning knob
  of threshold locking: too little and wrong keys rarely flip
  anything, too much and the gate's behaviour is dominated
  predictably.  The sweep quantifies this by locking the same base
  network at a series of total key weights, measuring exhaustive
  corruption for several seeded weight assignments per point, and
  attaching cost-model proxies, which grow with the carried weight.
*/

#pragma once

#include "corruption.hpp"
#include "cost_model.hpp"
#include "locking.hpp"
#include "rng.hpp"
#include "tlg_network.hpp"

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlgkit
{

/*! \brief One measured point of the key-weight trade-off curve. */
struct SweepPoint
{
  int total_weight = 0;        //!< sum of absolute key weights
  double corruption = 0.0;     //!< mean corruption over the point's trials
  double corruption_max = 0.0; //!< worst per-key mismatch seen in any trial
  double area = 0.0;
  double power = 0.0;
  double delay = 0.0;
  int trials = 0; //!< lockings evaluated; 0 for the unlocked baseline
};

struct SweepOptions
{
  int key_bits = 2; //!< key bits per point; a weight below that uses fewer
  GateStyle style = lctl_style();
};

/*! \brief Sweeps total key weight on the gate driving the first output.

  For every requested weight W the gate is locked `trials` times with
  seeded draws of a weight split over min(key_bits, W) key bits,
  random signs, and a random correct key; the threshold is compensated
  so the correct key always restores the base function.  Corruption is
  computed exhaustively per trial — so the base network must stay
  within the exhaustive budget — and the returned points carry the
  mean and the worst case next to the style's cost proxies.  W = 0
  denotes the unlocked baseline.  Negative weights are infeasible and
  skipped with a warning on stderr; the result is ordered by weight
  with duplicates collapsed.
*/
inline std::vector<SweepPoint> key_weight_sweep( const TlgNetwork& base,
                                                 const std::vector<int>& weight_range,
                                                 int trials, uint64_t seed,
                                                 const SweepOptions& options = {} )
{
  if ( weight_range.empty() )
  {
    throw std::invalid_argument( "weight sweep needs at least one total weight" );
  }
  if ( trials < 1 )
  {
    throw std::invalid_argument( "weight sweep needs at least one trial" );
  }
  if ( options.key_bits < 1 )
  {
    throw std::invalid_argument( "weight sweep needs at least one key bit" );
  }
  if ( !base.key_inputs.empty() )
  {
    throw std::invalid_argument( "weight sweep expects an unlocked base network" );
  }
  if ( base.outputs.empty() )
  {
    throw std::invalid_argument( "weight sweep base network has no outputs" );
  }
  size_t target = base.gates.size();
  for ( size_t g = 0; g < base.gates.size(); ++g )
  {
    if ( base.gates[g].output == base.outputs.front() )
    {
      target = g;
    }
  }
  if ( target == base.gates.size() )
  {
    throw std::invalid_argument( "first output is not driven by a gate" );
  }
  const int n = static_cast<int>( base.inputs.size() );
  if ( n > 20 )
  {
    throw std::invalid_argument( "weight sweep base network too wide for exhaustion" );
  }

  std::vector<int> weights = weight_range;
  std::sort( weights.begin(), weights.end() );
  weights.erase( std::unique( weights.begin(), weights.end() ), weights.end() );

  const uint64_t vectors = uint64_t( 1 ) << n;
  const uint64_t mask = n >= 6 ? ~uint64_t( 0 ) : ( ( uint64_t( 1 ) << vectors ) - 1 );
  const uint64_t blocks = n > 6 ? ( uint64_t( 1 ) << ( n - 6 ) ) : 1;

  Rng rng( seed );
  std::vector<SweepPoint> points;
  for ( const int total : weights )
  {
    if ( total < 0 )
    {
      std::cerr << "key weight sweep: skipping infeasible total weight " << total
                << "\n";
      continue;
    }

    SweepPoint point;
    point.total_weight = total;
    if ( total == 0 )
    {
      const auto cost = estimate( base, options.style );
      point.area = cost.area;
      point.power = cost.power;
      point.delay = cost.delay;
      points.push_back( point );
      continue;
    }

    const int m = std::min( options.key_bits, total );
    if ( ( uint64_t( 1 ) << n ) * ( ( uint64_t( 1 ) << m ) - 1 ) > ( uint64_t( 1 ) << 26 ) )
    {
      throw std::invalid_argument( "weight sweep point exceeds the exhaustive budget" );
    }

    double corruption_sum = 0.0;
    for ( int trial = 0; trial < trials; ++trial )
    {
      // split |total| over m key bits, each at least one unit
      std::vector<int> magnitudes( m );
      int left = total;
      for ( int l = 0; l < m; ++l )
      {
        const int slots_after = m - 1 - l;
        magnitudes[l] =
            slots_after == 0
                ? left
                : static_cast<int>( rng.range( 1, left - slots_after ) );
        left -= magnitudes[l];
      }

      TlgNetwork net = base;
      KeyVector correct( m );
      int compensation = 0;
      Tlg& gate = net.gates[target];
      for ( int l = 0; l < m; ++l )
      {
        const int weight = rng.coin() ? magnitudes[l] : -magnitudes[l];
        const std::string name = "swk" + std::to_string( l );
        net.add_key_input( name );
        gate.inputs.push_back( { name, weight, true } );
        correct[l] = rng.coin();
        compensation += correct[l] ? weight : 0;
      }
      gate.threshold += compensation;
      net.validate();

      // exhaustive corruption against the correct-key behaviour, which
      // the threshold compensation makes identical to the base function
      const TlgEvaluator evaluator( net );
      std::vector<uint64_t> input_words( n );
      std::vector<uint64_t> key_words( m );
      const auto eval_key = [&]( uint64_t key_value, uint64_t block ) {
        for ( int i = 0; i < n; ++i )
        {
          input_words[i] = simulation_pattern( i, block );
        }
        for ( int l = 0; l < m; ++l )
        {
          key_words[l] = ( ( key_value >> l ) & 1u ) ? ~uint64_t( 0 ) : 0;
        }
        return evaluator.eval_words( input_words, key_words );
      };
      uint64_t correct_value = 0;
      for ( int l = 0; l < m; ++l )
      {
        correct_value |= correct[l] ? ( uint64_t( 1 ) << l ) : 0;
      }

      std::vector<std::vector<uint64_t>> reference_words( blocks );
      for ( uint64_t b = 0; b < blocks; ++b )
      {
        reference_words[b] = eval_key( correct_value, b );
      }

      double mismatch_sum = 0.0;
      double mismatch_max = 0.0;
      for ( uint64_t kv = 0; kv < ( uint64_t( 1 ) << m ); ++kv )
      {
        if ( kv == correct_value )
        {
          continue;
        }
        uint64_t count = 0;
        for ( uint64_t b = 0; b < blocks; ++b )
        {
          count += detail::mismatch_count( reference_words[b], eval_key( kv, b ), mask,
                                           false );
        }
        const double rate = static_cast<double>( count ) / static_cast<double>( vectors );
        mismatch_sum += rate;
        mismatch_max = std::max( mismatch_max, rate );
      }
      corruption_sum +=
          mismatch_sum / static_cast<double>( ( uint64_t( 1 ) << m ) - 1 );
      point.corruption_max = std::max( point.corruption_max, mismatch_max );

      if ( trial == 0 )
      {
        const auto cost = estimate( net, options.style );
        point.area = cost.area;
        point.power = cost.power;
        point.delay = cost.delay;
      }
    }
    point.corruption = corruption_sum / trials;
    point.trials = trials;
    points.push_back( point );
  }
  return points;
}

/*! \brief One CSV row per sweep point. */
inline void write_csv( const std::vector<SweepPoint>& points, std::ostream& out )
{
  out << "total_weight,corruption,corruption_max,area,power,delay,trials\n";
  for ( const auto& p : points )
  {
    out << p.total_weight << ',' << p.corruption << ',' << p.corruption_max << ','
        << p.area << ',' << p.power << ',' << p.delay << ',' << p.trials << '\n';
  }
}

} // namespace tlgkit
