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
  \file threshold_identification.hpp
  \brief Decides whether a function is a threshold function and finds weights

  A function f is realized by a weight vector w and threshold T when
  f(x) = 1 exactly if sum_i w_i x_i >= T.  The test first requires f to be
  unate in every variable; negative-unate inputs are complemented so the
  search runs over a positive-unate normal form with weights >= 1, ordered
  by descending on-set counts.  Iterative deepening on the weight total
  returns a minimal-total realization, which is then mapped back by negating
  the weights of complemented inputs (each such flip also lowers the
  threshold by that weight).  Skipped (vacuous) inputs get weight zero.
*/

#pragma once

#include "truth_table.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

namespace tlgkit
{

/*! \brief Weighted realization of a threshold function.
 *
 * `weights[i]` belongs to variable `i` of the originating truth table and is
 * zero for variables outside the support.
 */
struct ThresholdFunction
{
  std::vector<int> weights;
  int threshold;
};

struct IdentifyParams
{
  /*! Cap on the weight total searched, 0 = derive from the support size. */
  int max_weight_sum = 0;
  /*! Search step budget; identification gives up (conservatively) beyond it. */
  uint64_t step_budget = 500000;
};

namespace detail
{

/*! \brief Weight-total cap that keeps every minimal realization reachable.
 *
 * A threshold function of s variables always has an integer realization with
 * each weight at most (s+1)^((s+1)/2) / 2^s, so s times that bounds the
 * total of some valid realization.
 */
inline int weight_sum_cap( int s )
{
  const double per_weight = std::pow( s + 1, ( s + 1 ) / 2.0 ) / std::pow( 2.0, s );
  return s * static_cast<int>( std::ceil( per_weight ) );
}

} // namespace detail

/*! \brief Threshold test with memoized results. */
class ThresholdIdentifier
{
public:
  explicit ThresholdIdentifier( IdentifyParams params = {} ) : params_( params ) {}

  std::optional<ThresholdFunction> identify( const TruthTable& f )
  {
    const auto key = f;
    if ( const auto it = cache_.find( key ); it != cache_.end() )
    {
      return it->second;
    }
    auto result = identify_uncached( f );
    if ( result )
    {
      // a realization must reproduce every row before anyone may rely on it
      if ( !realizes( f, *result ) )
      {
        result.reset();
      }
    }
    cache_.emplace( key, result );
    return result;
  }

  /*! \brief Checks a candidate realization row by row. */
  static bool realizes( const TruthTable& f, const ThresholdFunction& tf )
  {
    for ( uint32_t m = 0; m < f.num_bits(); ++m )
    {
      int sum = 0;
      for ( int i = 0; i < f.num_vars(); ++i )
      {
        if ( ( m >> i ) & 1u )
        {
          sum += tf.weights[i];
        }
      }
      if ( ( sum >= tf.threshold ) != f.bit( m ) )
      {
        return false;
      }
    }
    return true;
  }

private:
  std::optional<ThresholdFunction> identify_uncached( const TruthTable& f )
  {
    const int n = f.num_vars();

    if ( f.is_const0() )
    {
      return ThresholdFunction{ std::vector<int>( n, 0 ), 1 };
    }
    if ( f.is_const1() )
    {
      return ThresholdFunction{ std::vector<int>( n, 0 ), 0 };
    }

    // normalize to a positive-unate function; binate inputs end the story
    std::vector<int> support;
    std::vector<bool> flipped( n, false );
    TruthTable g = f;
    for ( int i = 0; i < n; ++i )
    {
      if ( !g.depends_on( i ) )
      {
        continue;
      }
      if ( g.is_positive_unate_in( i ) )
      {
        support.push_back( i );
      }
      else if ( g.is_negative_unate_in( i ) )
      {
        g = g.flip_var( i );
        flipped[i] = true;
        support.push_back( i );
      }
      else
      {
        return std::nullopt;
      }
    }

    const int s = static_cast<int>( support.size() );

    // compress onto the support so the search walks 2^s rows only
    std::vector<int> to_compact( n, -1 );
    for ( int i = 0; i < s; ++i )
    {
      to_compact[support[i]] = i;
    }
    TruthTable gc( s );
    for ( uint32_t m = 0; m < gc.num_bits(); ++m )
    {
      uint32_t full = 0;
      for ( int i = 0; i < s; ++i )
      {
        if ( ( m >> i ) & 1u )
        {
          full |= 1u << support[i];
        }
      }
      gc.set_bit( m, g.bit( full ) );
    }

    // search order: descending on-set counts, ties by variable index
    const auto sigma = gc.chow();
    std::vector<int> order( s );
    std::iota( order.begin(), order.end(), 0 );
    std::stable_sort( order.begin(), order.end(),
                      [&sigma]( int a, int b ) { return sigma[a] > sigma[b]; } );

    SearchState st;
    st.rows = gc.num_bits();
    st.on.reserve( st.rows );
    for ( uint32_t m = 0; m < st.rows; ++m )
    {
      ( gc.bit( m ) ? st.on : st.off ).push_back( m );
    }
    st.var_bit.resize( s );
    for ( int i = 0; i < s; ++i )
    {
      st.var_bit[i] = 1u << order[i];
    }
    st.fixed_sum.assign( st.rows, 0 );
    st.weights.assign( s, 0 );
    st.steps_left = params_.step_budget;

    const int cap =
        params_.max_weight_sum > 0 ? params_.max_weight_sum : detail::weight_sum_cap( s );

    for ( int total = s; total <= cap; ++total )
    {
      st.total = total;
      if ( search( st, 0, total, total ) )
      {
        // translate the found weights back to original variable positions
        ThresholdFunction tf{ std::vector<int>( n, 0 ), st.found_threshold };
        for ( int i = 0; i < s; ++i )
        {
          tf.weights[support[to_original( order, i )]] = st.weights[i];
        }
        for ( int i = 0; i < n; ++i )
        {
          if ( flipped[i] )
          {
            tf.threshold -= tf.weights[i];
            tf.weights[i] = -tf.weights[i];
          }
        }
        return tf;
      }
      if ( st.steps_left == 0 )
      {
        return std::nullopt; // budget exhausted: give up without an answer
      }
    }
    return std::nullopt;
  }

  struct SearchState
  {
    uint32_t rows = 0;
    std::vector<uint32_t> on, off;
    std::vector<uint32_t> var_bit;  //!< row mask of the i-th search variable
    std::vector<int> fixed_sum;     //!< per-row sum of already chosen weights
    std::vector<int> weights;       //!< in search order
    int total = 0;
    int found_threshold = 0;
    uint64_t steps_left = 0;
  };

  static int to_original( const std::vector<int>& order, int search_pos )
  {
    // weights are recorded in search order; order[] maps back to compact vars
    return order[search_pos];
  }

  /*! \brief Fills weights from position `i`, remaining total `left`. */
  bool search( SearchState& st, int i, int left, int last_weight )
  {
    if ( st.steps_left == 0 )
    {
      return false;
    }
    --st.steps_left;

    const int s = static_cast<int>( st.weights.size() );
    if ( i == s )
    {
      if ( left != 0 )
      {
        return false;
      }
      int min_on = INT32_MAX, max_off = INT32_MIN;
      for ( auto m : st.on )
      {
        min_on = std::min( min_on, st.fixed_sum[m] );
      }
      for ( auto m : st.off )
      {
        max_off = std::max( max_off, st.fixed_sum[m] );
      }
      if ( min_on > max_off )
      {
        st.found_threshold = max_off + 1;
        return true;
      }
      return false;
    }

    const int remaining_vars = s - i - 1;
    uint32_t later_mask = 0;
    for ( int j = i + 1; j < s; ++j )
    {
      later_mask |= st.var_bit[j];
    }
    const uint32_t rest_mask = later_mask | st.var_bit[i];

    const int w_max = std::min( last_weight, left - remaining_vars );
    for ( int w = w_max; w >= 1; --w )
    {
      // optimistic separation test: unchosen weights lie in [1, w], so the
      // on-rows can gain at most w per set bit and the off-rows at least 1
      int ub_min_on = INT32_MAX, lb_max_off = INT32_MIN;
      for ( auto m : st.on )
      {
        const int rest = std::popcount( m & rest_mask ) * w;
        ub_min_on = std::min( ub_min_on, st.fixed_sum[m] + rest );
      }
      for ( auto m : st.off )
      {
        const int rest = ( ( m & st.var_bit[i] ) ? w : 0 ) + std::popcount( m & later_mask );
        lb_max_off = std::max( lb_max_off, st.fixed_sum[m] + rest );
      }
      if ( ub_min_on <= lb_max_off )
      {
        continue;
      }

      st.weights[i] = w;
      for ( uint32_t m = 0; m < st.rows; ++m )
      {
        if ( m & st.var_bit[i] )
        {
          st.fixed_sum[m] += w;
        }
      }
      if ( search( st, i + 1, left - w, w ) )
      {
        return true;
      }
      for ( uint32_t m = 0; m < st.rows; ++m )
      {
        if ( m & st.var_bit[i] )
        {
          st.fixed_sum[m] -= w;
        }
      }
      if ( st.steps_left == 0 )
      {
        return false;
      }
    }
    return false;
  }

  IdentifyParams params_;
  std::unordered_map<TruthTable, std::optional<ThresholdFunction>, TruthTableHash> cache_;
};

/*! \brief One-shot convenience wrapper around ThresholdIdentifier. */
inline std::optional<ThresholdFunction> identify_threshold( const TruthTable& f,
                                                            IdentifyParams params = {} )
{
  ThresholdIdentifier ident( params );
  return ident.identify( f );
}

} // namespace tlgkit
